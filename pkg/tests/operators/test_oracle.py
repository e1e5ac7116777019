"""Tests for operator equality on finite test spaces."""

from dunkl_dirac.algebra.parameters import ParameterSet
from dunkl_dirac.algebra.polynomial import SpinorPolynomial
from dunkl_dirac.operators.expr import MulCoord, Partial
from dunkl_dirac.operators.oracle import (
    RENDER_LIMIT,
    check_parameters,
    operators_equal_on_degree,
    polynomials_equal,
    relation_row,
)
from dunkl_dirac.verification import CheckStatus


class TestOperatorsEqualOnDegree:
    def test_equal_operators(self):
        """Equal operators pass on every basis element."""
        result = operators_equal_on_degree(Partial(1), Partial(1), 3, 1)
        assert result
        assert result.checked == 32
        assert result.to_witness() is None

    def test_first_difference_is_reported(self):
        """Degree 0 and the eight x3-terms agree; x2 is the first witness."""
        result = operators_equal_on_degree(Partial(1), Partial(2), 3, 1)
        assert not result
        assert result.degree == 1
        assert result.checked == 17
        assert result.element == SpinorPolynomial.coordinate(3, 2)
        assert result.lhs == SpinorPolynomial.zero(3)
        assert result.rhs == SpinorPolynomial.constant(3)

    def test_custom_basis(self):
        """A custom basis replaces the default one."""
        basis = lambda k: [SpinorPolynomial.monomial(2, (k, 0))]  # noqa: E731
        assert operators_equal_on_degree(Partial(2), MulCoord(2) @ Partial(2) @ Partial(2), 2, 3, basis=basis)


class TestPolynomialsEqual:
    def test_mismatch_keeps_degree(self):
        """A mismatch keeps the element and its degree."""
        element = SpinorPolynomial.coordinate(3, 1)
        result = polynomials_equal(element, element.scale(2), element)
        assert not result
        assert result.degree == 1


class TestRelationRow:
    def test_check_parameters_sorts_subsets(self, params3: ParameterSet):
        """Subsets are stored sorted."""
        parameters = check_parameters(params3, {3, 1}, [2], 2, pair=[1, 2])
        assert parameters.subset_a == [1, 3]
        assert parameters.subset_b == [2]
        assert parameters.mu == ["1/2", "1/3", "1/4"]
        assert parameters.extra == {"pair": [1, 2]}

    def test_passed_row(self, params3: ParameterSet):
        """A passing comparison gives a passed row."""
        result = operators_equal_on_degree(Partial(1), Partial(1), 3, 0)
        row = relation_row("d1=d1", "clifford", check_parameters(params3), result)
        assert row.status == CheckStatus.PASSED
        assert row.details == {"test_elements": 8}

    def test_failed_row_carries_witness_and_renderings(self, params3: ParameterSet):
        """A failed row carries the witness and both renderings."""
        result = operators_equal_on_degree(Partial(1), Partial(2), 3, 1)
        row = relation_row("d1=d2", "clifford", check_parameters(params3), result, Partial(1), Partial(2))
        assert row.status == CheckStatus.FAILED
        assert row.witness is not None
        assert row.witness.basis_element == "0,1,0 |  | 1/1"
        assert row.witness.rhs == "0,0,0 |  | 1/1"
        assert row.details["lhs_operator"] == "d1"
        assert row.details["rhs_operator"] == "d2"
        assert row.message == "differs at degree 1"

    def test_long_renderings_are_clipped(self, params3: ParameterSet):
        """Long renderings are clipped."""
        op = Partial(1)
        for _ in range(RENDER_LIMIT):
            op = op + Partial(1)
        result = operators_equal_on_degree(op, Partial(2), 3, 1)
        row = relation_row("long", "clifford", check_parameters(params3), result, op, Partial(2))
        assert row.details["lhs_operator"].endswith("...")
