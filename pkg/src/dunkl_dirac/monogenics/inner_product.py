"""Exact sphere pairing with the reflection-invariant weight.

The weight on the unit sphere is prod_i |x_i|^{2 mu_i}, normalised to total
mass one. Its even moments have the closed form

    <x^{2c}> = prod_i (mu_i + 1/2)_{c_i} / (gamma)_{|c|},   gamma = n/2 + sum mu_i,

and every odd moment vanishes. Blades are orthonormal, so left multiplication
by e_i is skew-adjoint.

Key Features:
- ``moment`` gives the exact moments; ``moment_quadrature`` is a float oracle
  for n = 2, 3 built on ``scipy.integrate.nquad``
- ``inner_product`` and ``gram_matrix`` pair homogeneous Clifford polynomials
- ``verify_orthogonality`` checks that the basis monogenics at fixed (k, s)
  have a diagonal Gram matrix with positive diagonal
"""

from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache

import numpy as np
from loguru import logger
from scipy import integrate

from dunkl_dirac.algebra.blade import Blade
from dunkl_dirac.algebra.linalg import RationalMatrix
from dunkl_dirac.algebra.parameters import ParameterSet
from dunkl_dirac.algebra.polynomial import SpinorPolynomial
from dunkl_dirac.algebra.rational import RationalLike, format_rational, pochhammer
from dunkl_dirac.constants import QUADRATURE_TOLERANCE
from dunkl_dirac.exceptions import DegreeMismatchError, DimensionMismatchError
from dunkl_dirac.operators.oracle import check_parameters
from dunkl_dirac.verification.models import CheckParameters, RelationCheck, Witness

from .ck import basis_psi
from .labels import enumerate_labels

CLIFFORD = "clifford"


@lru_cache(maxsize=65536)
def _moment(exponents: tuple[int, ...], mu: tuple[Fraction, ...]) -> Fraction:
    if any(c % 2 for c in exponents):
        return Fraction(0)
    halves = [c // 2 for c in exponents]
    gamma = Fraction(len(mu), 2) + sum(mu, Fraction(0))
    numerator = Fraction(1)
    for mu_i, c in zip(mu, halves, strict=True):
        numerator *= pochhammer(mu_i + Fraction(1, 2), c)
    return numerator / pochhammer(gamma, sum(halves))


def moment(exponents: Sequence[int], mu: Sequence[RationalLike]) -> Fraction:
    """Normalised sphere moment of x^exponents; mu_i = 0 is allowed.

    Raises:
        DimensionMismatchError: If the exponent and parameter lengths differ.
    """
    if len(exponents) != len(mu):
        raise DimensionMismatchError(len(mu), len(exponents))
    return _moment(tuple(exponents), tuple(Fraction(m) for m in mu))


def _quadrature_options(breaks: Sequence[float]) -> dict:
    return {"points": list(breaks), "limit": 200, "epsabs": 1e-13, "epsrel": 1e-12}


def _sphere_integral(integrand, n: int) -> float:
    if n == 2:
        value, _ = integrate.nquad(integrand, [(0.0, 2 * np.pi)], opts=[_quadrature_options([np.pi / 2, np.pi, 3 * np.pi / 2])])
        return value
    if n == 3:
        opts = [_quadrature_options([np.pi / 2, np.pi, 3 * np.pi / 2]), _quadrature_options([np.pi / 2])]
        value, _ = integrate.nquad(integrand, [(0.0, 2 * np.pi), (0.0, np.pi)], opts=opts)
        return value
    raise ValueError(f"Quadrature oracle supports n = 2, 3 only, got n={n}")


def moment_quadrature(exponents: Sequence[int], mu: Sequence[RationalLike]) -> float:
    """Float moment by adaptive quadrature in polar (n = 2) or spherical (n = 3) coordinates."""
    n = len(mu)
    if len(exponents) != n:
        raise DimensionMismatchError(n, len(exponents))
    powers = np.array([2 * float(m) for m in mu])
    c = np.array(exponents, dtype=float)

    def point(*angles: float) -> np.ndarray:
        if n == 2:
            (t,) = angles
            return np.array([np.cos(t), np.sin(t)])
        phi, theta = angles
        return np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])

    def jacobian(*angles: float) -> float:
        return 1.0 if n == 2 else float(np.sin(angles[1]))

    def weight(*angles: float) -> float:
        return float(np.prod(np.abs(point(*angles)) ** powers)) * jacobian(*angles)

    def weighted_monomial(*angles: float) -> float:
        return float(np.prod(point(*angles) ** c)) * weight(*angles)

    return _sphere_integral(weighted_monomial, n) / _sphere_integral(weight, n)


def verify_moment_oracle(exponents: Sequence[int], mu: Sequence[RationalLike]) -> RelationCheck:
    """Exact moment against quadrature, within the float tolerance."""
    exact = moment(exponents, mu)
    numeric = moment_quadrature(exponents, mu)
    error = abs(float(exact) - numeric)
    logger.debug("Moment {} exact={} quadrature={} error={}", tuple(exponents), exact, numeric, error)
    parameters = CheckParameters(
        n=len(mu),
        mu=[format_rational(m) for m in mu],
        k_max=sum(exponents),
        extra={"exponents": list(exponents)},
    )
    details = {"exact": format_rational(exact), "quadrature": numeric, "error": error}
    if error <= QUADRATURE_TOLERANCE:
        return RelationCheck.passed("moment closed form", CLIFFORD, parameters, details=details)
    witness = Witness(basis_element=",".join(str(c) for c in exponents), lhs=format_rational(exact), rhs=repr(numeric))
    message = f"error {error:.3e}"
    return RelationCheck.failed("moment closed form", CLIFFORD, parameters, witness, message=message, details=details)


def inner_product(p: SpinorPolynomial, q: SpinorPolynomial, params: ParameterSet) -> Fraction:
    """Sum of c_p c_q <x^(a+b)> over the term pairs with equal blades.

    Raises:
        DegreeMismatchError: If p and q are homogeneous of different degrees.
    """
    if p.n != params.n:
        raise DimensionMismatchError(params.n, p.n)
    if q.n != params.n:
        raise DimensionMismatchError(params.n, q.n)
    left, right = p.degree, q.degree
    if left is not None and right is not None and left != right:
        raise DegreeMismatchError(left, right)
    by_blade: dict[int, list[tuple[tuple[int, ...], Fraction]]] = {}
    for (mono, mask), value in q.terms.items():
        by_blade.setdefault(mask, []).append((mono, value))
    mu = params.mu
    total = Fraction(0)
    for (mono, mask), value in p.terms.items():
        for other, weight in by_blade.get(mask, ()):
            exponents = tuple(a + b for a, b in zip(mono, other, strict=True))
            total += value * weight * _moment(exponents, mu)
    return total


def gram_matrix(polys: Sequence[SpinorPolynomial], params: ParameterSet) -> RationalMatrix:
    size = len(polys)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            rows[i][j] = rows[j][i] = inner_product(polys[i], polys[j], params)
    return RationalMatrix.from_rows(rows) if size else RationalMatrix.zeros(0, 0)


def verify_orthogonality(params: ParameterSet, k: int, blade: Blade) -> RelationCheck:
    """The Gram matrix of {Psi_j^s} at fixed (k, s) is diagonal with positive diagonal."""
    labels = list(enumerate_labels(params.n, k, [blade]))
    psis = [basis_psi(label, params) for label in labels]
    gram = gram_matrix(psis, params)
    parameters = check_parameters(params, None, None, k, blade=blade.label)
    details = {"size": len(labels), "diagonal": [format_rational(g) for g in gram.diagonal_entries()]}
    for a in range(len(labels)):
        if gram[a, a] <= 0:
            witness = Witness(basis_element=str(labels[a]), lhs=format_rational(gram[a, a]), rhs="> 0", degree=k)
            message = "non-positive norm"
            return RelationCheck.failed("Gram orthogonality", CLIFFORD, parameters, witness, message=message, details=details)
        for b in range(a + 1, len(labels)):
            if gram[a, b]:
                witness = Witness(
                    basis_element=f"{labels[a]} , {labels[b]}",
                    lhs=format_rational(gram[a, b]),
                    rhs="0/1",
                    degree=k,
                )
                return RelationCheck.failed("Gram orthogonality", CLIFFORD, parameters, witness, details=details)
    return RelationCheck.passed("Gram orthogonality", CLIFFORD, parameters, details=details)


def verify_clifford_skew_adjoint(p: SpinorPolynomial, q: SpinorPolynomial, i: int, params: ParameterSet) -> RelationCheck:
    """<e_i p, q> = -<p, e_i q>."""
    e_i = Blade.generator(params.n, i)
    lhs = inner_product(p.clifford_left(e_i), q, params)
    rhs = -inner_product(p, q.clifford_left(e_i), params)
    parameters = check_parameters(params, None, None, p.degree, generator=i)
    if lhs == rhs:
        return RelationCheck.passed("e_i skew-adjoint", CLIFFORD, parameters)
    witness = Witness(basis_element=p.serialize(), lhs=format_rational(lhs), rhs=format_rational(rhs), degree=p.degree)
    return RelationCheck.failed("e_i skew-adjoint", CLIFFORD, parameters, witness)
