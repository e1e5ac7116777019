"""Cauchy-Kovalevskaya extension and the CK tower of basis monogenics.

    CK_j[p] = sum_l x_j^{2l} D'^{2l} p / (4^l l! (mu_j+1/2)_l)
            + e_j sum_l x_j^{2l+1} D'^{2l+1} p / (2^{2l+1} l! (mu_j+1/2)_{l+1})

with D' = D_[j-1]. The input depends on x_1..x_{j-1} only; D_[j] kills the
output and setting x_j = 0 gives the input back.

The basis function of label (j, s) is

    Psi = CK_n[ x_[n-1]^{j_{n-1}} CK_{n-1}[ ... CK_2[ x_1^{j_1} ] ] ] v_s

with x_[l] the Clifford vector variable of the first l coordinates and v_s
multiplied on the right.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from dunkl_dirac.algebra.blade import Blade
from dunkl_dirac.algebra.parameters import ParameterSet
from dunkl_dirac.algebra.polynomial import SpinorPolynomial, clifford_vector, power
from dunkl_dirac.algebra.rational import pochhammer
from dunkl_dirac.exceptions import DimensionMismatchError, ForbiddenVariableError
from dunkl_dirac.operators.realization import get_realization

from .labels import BasisLabel, MultiIndex


def _mul_coordinate_power(p: SpinorPolynomial, i: int, exponent: int) -> SpinorPolynomial:
    for _ in range(exponent):
        p = p.mul_coordinate(i)
    return p


def ck_extend(p: SpinorPolynomial, j: int, params: ParameterSet) -> SpinorPolynomial:
    """Extend a homogeneous polynomial in x_1..x_{j-1} to a null solution of D_[j].

    Raises:
        ForbiddenVariableError: If ``p`` depends on one of x_j..x_n.
        NonHomogeneousError: If ``p`` mixes degrees.
    """
    n = p.n
    if n != params.n:
        raise DimensionMismatchError(params.n, n)
    if not 2 <= j <= n:
        raise ValueError(f"CK extension needs 2 <= j <= n, got j={j}, n={n}")
    for i in range(j, n + 1):
        if p.depends_on(i):
            raise ForbiddenVariableError(i, j)
    k = p.degree
    if k is None:
        return p

    clifford = get_realization("clifford", params)
    d_prev = clifford.dirac(range(1, j))
    half = params.mu_of(j) + Fraction(1, 2)
    e_j = Blade.generator(n, j)

    derivatives = [p]
    for _ in range(k):
        derivatives.append(d_prev.apply(derivatives[-1], clifford.cache))

    terms: list[tuple[Fraction, SpinorPolynomial]] = []
    for ell in range(k // 2 + 1):
        coeff = 1 / (4**ell * factorial(ell) * pochhammer(half, ell))
        terms.append((coeff, _mul_coordinate_power(derivatives[2 * ell], j, 2 * ell)))
    for ell in range((k - 1) // 2 + 1 if k >= 1 else 0):
        coeff = 1 / (2 ** (2 * ell + 1) * factorial(ell) * pochhammer(half, ell + 1))
        odd = _mul_coordinate_power(derivatives[2 * ell + 1], j, 2 * ell + 1).clifford_left(e_j)
        terms.append((coeff, odd))
    return SpinorPolynomial.linear_combination(n, terms)


def _build_tower(index: MultiIndex, params: ParameterSet, bottom: SpinorPolynomial) -> SpinorPolynomial:
    n = params.n
    p = bottom
    for ell in range(2, n + 1):
        p = ck_extend(p, ell, params)
        if ell <= n - 1 and index[ell]:
            p = power(clifford_vector(n, range(1, ell + 1)), index[ell]) * p
    return p


def _check_index(index: MultiIndex, params: ParameterSet) -> None:
    if index.n != params.n:
        raise DimensionMismatchError(params.n, index.n)


@lru_cache(maxsize=4096)
def ck_tower(index: MultiIndex, params: ParameterSet) -> SpinorPolynomial:
    """The CK tower started from the scalar x_1^{j_1}."""
    _check_index(index, params)
    bottom = SpinorPolynomial.monomial(params.n, [index[1]] + [0] * (params.n - 1))
    return _build_tower(index, params, bottom)


@lru_cache(maxsize=4096)
def sector_tower(index: MultiIndex, params: ParameterSet) -> SpinorPolynomial:
    """The CK tower started from (e_1 x_1)^{j_1}; equals ck_tower times e_1^{j_1}."""
    _check_index(index, params)
    bottom = power(clifford_vector(params.n, [1]), index[1])
    return _build_tower(index, params, bottom)


def basis_psi(label: BasisLabel, params: ParameterSet) -> SpinorPolynomial:
    """Basis monogenic Psi_j^s of degree k."""
    return ck_tower(label.multi_index, params).clifford_right(label.blade)


def sector_psi(label: BasisLabel, params: ParameterSet) -> SpinorPolynomial:
    """Sector basis monogenic; the span over j at fixed s is invariant under every Gamma_A."""
    return sector_tower(label.multi_index, params).clifford_right(label.blade)
