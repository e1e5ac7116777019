"""Homogenized Jacobi polynomials and the closed-form basis monogenics.

The Jacobi polynomial is expanded through its hypergeometric series

    P_m^{(a,b)}(x) = (a+1)_m/m! sum_r (-m)_r (m+a+b+1)_r / ((a+1)_r r!) ((1-x)/2)^r

and homogenized as H_m(u, v) = v^m P_m(u/v), so that it can be evaluated on
polynomials u, v without leaving exact polynomial arithmetic.

Key Features:
- ``jacobi_homogenized`` returns H_m as a polynomial in two variables (x1 = u, x2 = v)
- ``substitute_uv`` plugs polynomials in for u and v
- ``explicit_psi`` assembles Psi_j^s as the ordered product Q_n ... Q_3 m_{j_1} v_s
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from dunkl_dirac.algebra.blade import Blade
from dunkl_dirac.algebra.parameters import ParameterSet
from dunkl_dirac.algebra.polynomial import SpinorPolynomial, clifford_vector, power, squared_norm
from dunkl_dirac.algebra.rational import RationalLike, pochhammer
from dunkl_dirac.exceptions import DimensionMismatchError, JacobiParameterError

from .labels import BasisLabel, MultiIndex

HALF = Fraction(1, 2)


@lru_cache(maxsize=1024)
def jacobi_homogenized(m: int, alpha: RationalLike, beta: RationalLike) -> SpinorPolynomial:
    """v^m P_m^{(alpha, beta)}(u/v) in the variables (x1, x2) = (u, v).

    m = -1 gives the zero polynomial.

    Raises:
        JacobiParameterError: If some (alpha+1)_r with r <= m vanishes.
    """
    if m == -1:
        return SpinorPolynomial.zero(2)
    if m < 0:
        raise ValueError(f"Jacobi degree must be >= -1, got {m}")
    a, b = Fraction(alpha), Fraction(beta)
    lead = pochhammer(a + 1, m) / factorial(m)
    coefficients: dict[tuple[tuple[int, int], int], Fraction] = {}
    for r in range(m + 1):
        denominator = pochhammer(a + 1, r) * factorial(r)
        if not denominator:
            raise JacobiParameterError(m, a, b)
        c_r = lead * pochhammer(-m, r) * pochhammer(m + a + b + 1, r) / denominator
        # ((v - u)/2)^r v^(m - r)
        for i in range(r + 1):
            key = ((i, m - i), 0)
            term = c_r * comb(r, i) * (-1) ** i / 2**r
            coefficients[key] = coefficients.get(key, Fraction(0)) + term
    return SpinorPolynomial(2, coefficients)


def substitute_uv(h: SpinorPolynomial, u: SpinorPolynomial, v: SpinorPolynomial) -> SpinorPolynomial:
    """Evaluate a scalar polynomial in (x1, x2) at x1 = u, x2 = v."""
    if h.n != 2:
        raise DimensionMismatchError(2, h.n)
    if u.n != v.n:
        raise DimensionMismatchError(u.n, v.n)
    pairs = [(coeff, power(u, mono[0]) * power(v, mono[1])) for mono, _, coeff in h.items()]
    return SpinorPolynomial.linear_combination(u.n, pairs)


def _block_factor(params: ParameterSet, index: MultiIndex, ell: int) -> SpinorPolynomial:
    """Q for level ell >= 3, built from j_{ell-1}."""
    n = params.n
    previous = list(range(1, ell))
    x_prev = clifford_vector(n, previous)
    r_prev = squared_norm(n, previous)
    x_ell = SpinorPolynomial.coordinate(n, ell)
    u = x_ell * x_ell - r_prev
    v = squared_norm(n, range(1, ell + 1))
    e_x = x_ell.clifford_left(Blade.generator(n, ell))

    m = index.prefix_sum(ell - 2)
    gamma_prev = params.gamma(previous)
    mu = params.mu_of(ell)
    j = index[ell - 1]
    beta, odd = divmod(j, 2)
    prefactor = factorial(beta) / pochhammer(mu + HALF, beta)

    def h(degree: int, a: Fraction, b: Fraction) -> SpinorPolynomial:
        return substitute_uv(jacobi_homogenized(degree, a, b), u, v)

    if not odd:
        first = h(beta, m + gamma_prev - 1, mu - HALF)
        second = e_x * x_prev * h(beta - 1, m + gamma_prev, mu + HALF)
        return (first - second).scale(prefactor)
    ratio = (beta + m + gamma_prev) / (beta + mu + HALF)
    first = x_prev * h(beta, m + gamma_prev, mu - HALF)
    second = e_x * h(beta, m + gamma_prev - 1, mu + HALF)
    return (first - second.scale(ratio)).scale(prefactor)


def _bottom_factor(params: ParameterSet, j1: int) -> SpinorPolynomial:
    """m_{j_1}, the two-variable factor in x_1, x_2."""
    n = params.n
    x1 = SpinorPolynomial.coordinate(n, 1)
    x2 = SpinorPolynomial.coordinate(n, 2)
    u = x2 * x2 - x1 * x1
    v = x1 * x1 + x2 * x2
    e21 = SpinorPolynomial.from_blade(Blade.generator(n, 2)) * SpinorPolynomial.from_blade(Blade.generator(n, 1))
    mu1, mu2 = params.mu_of(1), params.mu_of(2)
    beta, odd = divmod(j1, 2)
    prefactor = (-1) ** beta * factorial(beta) / pochhammer(mu2 + HALF, beta)

    def h(degree: int, a: Fraction, b: Fraction) -> SpinorPolynomial:
        return substitute_uv(jacobi_homogenized(degree, a, b), u, v)

    if not odd:
        first = h(beta, mu1 - HALF, mu2 - HALF)
        second = e21 * x2 * x1 * h(beta - 1, mu1 + HALF, mu2 + HALF)
        return (first - second).scale(prefactor)
    ratio = (beta + mu1 + HALF) / (beta + mu2 + HALF)
    first = x1 * h(beta, mu1 + HALF, mu2 - HALF)
    second = e21 * x2 * h(beta, mu1 - HALF, mu2 + HALF)
    return (first + second.scale(ratio)).scale(prefactor)


@lru_cache(maxsize=4096)
def explicit_tower(index: MultiIndex, params: ParameterSet) -> SpinorPolynomial:
    """Q_n ... Q_3 m_{j_1}, factors multiplied on the left."""
    if index.n != params.n:
        raise DimensionMismatchError(params.n, index.n)
    p = _bottom_factor(params, index[1])
    for ell in range(3, params.n + 1):
        p = _block_factor(params, index, ell) * p
    return p


def explicit_psi(label: BasisLabel, params: ParameterSet) -> SpinorPolynomial:
    """Closed-form Psi_j^s from the homogenized Jacobi factors."""
    return explicit_tower(label.multi_index, params).clifford_right(label.blade)
