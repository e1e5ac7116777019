"""Tests for the sphere moments and the pairing of Clifford polynomials."""

from fractions import Fraction

import pytest

from dunkl_dirac.algebra.blade import Blade
from dunkl_dirac.algebra.parameters import ParameterSet
from dunkl_dirac.algebra.polynomial import SpinorPolynomial
from dunkl_dirac.exceptions import DegreeMismatchError, DimensionMismatchError
from dunkl_dirac.monogenics import (
    BasisLabel,
    MultiIndex,
    basis_psi,
    gram_matrix,
    inner_product,
    moment,
    moment_quadrature,
    verify_clifford_skew_adjoint,
    verify_moment_oracle,
    verify_orthogonality,
)
from dunkl_dirac.verification import CheckStatus

ZERO3 = (0, 0, 0)


def psi(params: ParameterSet, *entries: int) -> SpinorPolynomial:
    return basis_psi(BasisLabel(MultiIndex(entries), Blade.unit(params.n)), params)


class TestMoments:
    @pytest.mark.parametrize(
        ("exponents", "expected"),
        [
            ((0, 0, 0), Fraction(1)),
            ((2, 0, 0), Fraction(1, 3)),
            ((2, 2, 0), Fraction(1, 15)),
            ((4, 0, 0), Fraction(1, 5)),
            ((1, 1, 0), Fraction(0)),
            ((3, 0, 1), Fraction(0)),
        ],
    )
    def test_uniform_sphere(self, exponents: tuple[int, ...], expected: Fraction):
        """Moments of the unweighted sphere."""
        assert moment(exponents, ZERO3) == expected

    def test_weighted(self, params3: ParameterSet):
        """(mu_1 + 1/2) / gamma with gamma = 3/2 + 13/12."""
        assert moment((2, 0, 0), params3.mu) == Fraction(12, 31)
        assert moment((0, 2, 0), params3.mu) == Fraction(10, 31)

    def test_second_moments_sum_to_one(self, params3: ParameterSet):
        """The second moments sum to one."""
        total = sum(moment(e, params3.mu) for e in [(2, 0, 0), (0, 2, 0), (0, 0, 2)])
        assert total == 1

    def test_length_mismatch(self):
        """Exponents and mu must have the same length."""
        with pytest.raises(DimensionMismatchError):
            moment((2, 0), ZERO3)

    def test_quadrature_uniform(self):
        """Quadrature reproduces 1/3 on the uniform sphere."""
        assert moment_quadrature((2, 0, 0), ZERO3) == pytest.approx(1 / 3, abs=1e-8)

    def test_oracle_agrees(self):
        """Closed form and quadrature agree."""
        mu = (Fraction(1, 2), Fraction(1))
        row = verify_moment_oracle((2, 0), mu)
        assert row.status == CheckStatus.PASSED
        assert row.details["exact"] == "2/5"
        assert row.parameters.extra == {"exponents": [2, 0]}

    def test_quadrature_dimension_limit(self):
        """Quadrature is only available for n = 2, 3."""
        with pytest.raises(ValueError, match="n = 2, 3"):
            moment_quadrature((2, 0, 0, 0), (0, 0, 0, 0))


class TestInnerProduct:
    def test_norm_by_hand(self, params3: ParameterSet):
        """|Psi_(1,0)|^2 = 12/31 + (36/25)(10/31)."""
        p = psi(params3, 1, 0)
        assert inner_product(p, p, params3) == Fraction(132, 155)

    def test_different_blades_are_orthogonal(self, params3: ParameterSet):
        """Distinct blades are orthogonal."""
        x1 = SpinorPolynomial.coordinate(3, 1)
        assert inner_product(x1, x1.clifford_left(Blade.generator(3, 1)), params3) == 0

    def test_degree_mismatch(self, params3: ParameterSet):
        """Polynomials of different degree cannot be paired."""
        x1 = SpinorPolynomial.coordinate(3, 1)
        with pytest.raises(DegreeMismatchError):
            inner_product(x1, x1 * x1, params3)

    def test_dimension_mismatch(self, params4: ParameterSet):
        """Parameters must match the polynomial dimension."""
        x1 = SpinorPolynomial.coordinate(3, 1)
        with pytest.raises(DimensionMismatchError):
            inner_product(x1, x1, params4)

    def test_gram_matrix(self, params3: ParameterSet):
        """The degree-one Gram matrix is diagonal with known entries."""
        gram = gram_matrix([psi(params3, 0, 1), psi(params3, 1, 0)], params3)
        assert gram.is_diagonal()
        assert gram.diagonal_entries() == (Fraction(22, 9), Fraction(132, 155))
        assert gram_matrix([], params3).rows == 0

    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_skew_adjoint(self, params3: ParameterSet, i: int):
        """Each e_i is skew-adjoint."""
        row = verify_clifford_skew_adjoint(psi(params3, 1, 0), psi(params3, 0, 1), i, params3)
        assert row.status == CheckStatus.PASSED


class TestOrthogonality:
    @pytest.mark.parametrize("k", [0, 1, 2])
    @pytest.mark.parametrize("blade_indices", [(), (2,), (1, 3)])
    def test_basis_is_orthogonal(self, params3: ParameterSet, k: int, blade_indices: tuple[int, ...]):
        """The basis is orthogonal for each blade."""
        row = verify_orthogonality(params3, k, Blade.from_indices(3, blade_indices))
        assert row.status == CheckStatus.PASSED

    def test_diagonal_detail(self, params3: ParameterSet):
        """Details carry the diagonal of the Gram matrix."""
        row = verify_orthogonality(params3, 1, Blade.unit(3))
        assert row.details == {"size": 2, "diagonal": ["22/9", "132/155"]}

    def test_n4(self, params4: ParameterSet):
        """Orthogonality for n = 4."""
        assert verify_orthogonality(params4, 2, Blade.unit(4)).status == CheckStatus.PASSED
