"""Tests for the homogenized Jacobi polynomials and the closed form."""

from fractions import Fraction

import pytest

from dunkl_dirac.algebra.blade import Blade
from dunkl_dirac.algebra.parameters import ParameterSet
from dunkl_dirac.algebra.polynomial import SpinorPolynomial
from dunkl_dirac.exceptions import DimensionMismatchError, JacobiParameterError
from dunkl_dirac.monogenics import (
    BasisLabel,
    MultiIndex,
    basis_psi,
    enumerate_labels,
    explicit_psi,
    jacobi_homogenized,
    substitute_uv,
    verify_explicit_formula,
)
from dunkl_dirac.verification import CheckStatus


class TestJacobiHomogenized:
    def test_degree_minus_one_is_zero(self):
        """Degree -1 gives the zero polynomial."""
        assert not jacobi_homogenized(-1, 0, 0)

    def test_negative_degree_rejected(self):
        """Degrees below -1 are rejected."""
        with pytest.raises(ValueError, match=">= -1"):
            jacobi_homogenized(-2, 0, 0)

    def test_degree_zero(self):
        """Degree zero is the constant one."""
        assert jacobi_homogenized(0, Fraction(1, 3), 2) == SpinorPolynomial.constant(2)

    def test_degree_one_legendre(self):
        """P_1 with alpha = beta = 0 homogenizes to u."""
        assert jacobi_homogenized(1, 0, 0) == SpinorPolynomial.coordinate(2, 1)

    def test_degree_two_legendre(self):
        """v^2 P_2(u/v) = (3u^2 - v^2)/2."""
        expected = SpinorPolynomial(2, {((2, 0), 0): Fraction(3, 2), ((0, 2), 0): Fraction(-1, 2)})
        assert jacobi_homogenized(2, 0, 0) == expected

    def test_degree_one_general(self):
        """P_1^(a,b)(x) = (a+1) + (a+b+2)(x-1)/2."""
        a, b = Fraction(1, 2), Fraction(1, 3)
        expected = SpinorPolynomial(2, {((1, 0), 0): (a + b + 2) / 2, ((0, 1), 0): (a + 1) - (a + b + 2) / 2})
        assert jacobi_homogenized(1, a, b) == expected

    def test_vanishing_denominator(self):
        """A zero denominator in the series raises."""
        with pytest.raises(JacobiParameterError, match="P_1"):
            jacobi_homogenized(1, -1, 0)


class TestSubstitution:
    def test_substitute(self):
        """Substituting u and v into a homogenized polynomial."""
        x1 = SpinorPolynomial.coordinate(3, 1)
        x3 = SpinorPolynomial.coordinate(3, 3)
        h = jacobi_homogenized(2, 0, 0)
        result = substitute_uv(h, x1, x3)
        expected = SpinorPolynomial(3, {((2, 0, 0), 0): Fraction(3, 2), ((0, 0, 2), 0): Fraction(-1, 2)})
        assert result == expected

    def test_needs_two_variable_input(self):
        """Only two-variable polynomials can be substituted into."""
        x1 = SpinorPolynomial.coordinate(3, 1)
        with pytest.raises(DimensionMismatchError):
            substitute_uv(x1, x1, x1)


class TestExplicitFormula:
    @pytest.mark.parametrize("entries", [(0, 0), (1, 0), (0, 1)])
    def test_low_degree_equals_tower(self, params3: ParameterSet, entries: tuple[int, ...]):
        """The closed form equals the tower in low degree."""
        label = BasisLabel(MultiIndex(entries), Blade.unit(3))
        assert explicit_psi(label, params3) == basis_psi(label, params3)

    def test_matches_tower_n3(self, params3: ParameterSet):
        """The closed form matches the tower for n = 3."""
        for label in enumerate_labels(3, 2, [Blade.unit(3)]):
            row = verify_explicit_formula(label, params3)
            assert row.status == CheckStatus.PASSED, row.message

    def test_matches_tower_n4(self, params4: ParameterSet):
        """The closed form matches the tower for n = 4."""
        blade = Blade.from_indices(4, [2, 4])
        rows = [verify_explicit_formula(label, params4) for label in enumerate_labels(4, 2, [blade])]
        assert {row.status for row in rows} == {CheckStatus.PASSED}
