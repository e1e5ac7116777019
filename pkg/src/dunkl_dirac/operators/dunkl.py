"""Dunkl operators and the Clifford-valued operators built from them."""

from collections.abc import Iterable

from dunkl_dirac.algebra.blade import Blade
from dunkl_dirac.algebra.parameters import ParameterSet
from dunkl_dirac.exceptions import DimensionMismatchError

from .expr import (
    CliffordLeft,
    MulCoord,
    OperatorExpr,
    Partial,
    Reflect,
    ReflectionQuotient,
    compose_all,
    scaled,
    sum_all,
)


def subset_members(params: ParameterSet, indices: Iterable[int]) -> list[int]:
    members = sorted(set(indices))
    for i in members:
        if not 1 <= i <= params.n:
            raise DimensionMismatchError(params.n, i)
    return members


def dunkl_T(params: ParameterSet, i: int) -> OperatorExpr:
    """T_i = d_i + mu_i (1 - r_i) / x_i."""
    mu = params.mu_of(i)
    return Partial(i) + scaled(mu, ReflectionQuotient(i))


def dirac_D(params: ParameterSet, indices: Iterable[int]) -> OperatorExpr:
    """D_A = sum of e_i T_i over A; the empty set gives the zero operator."""
    return sum_all([CliffordLeft(Blade.generator(params.n, i)) @ dunkl_T(params, i) for i in subset_members(params, indices)])


def position_X(params: ParameterSet, indices: Iterable[int]) -> OperatorExpr:
    """x_A = sum of e_i x_i over A."""
    return sum_all([CliffordLeft(Blade.generator(params.n, i)) @ MulCoord(i) for i in subset_members(params, indices)])


def euler(params: ParameterSet, indices: Iterable[int]) -> OperatorExpr:
    """E_A = sum of x_i d_i over A."""
    return sum_all([MulCoord(i) @ Partial(i) for i in subset_members(params, indices)])


def laplace(params: ParameterSet, indices: Iterable[int]) -> OperatorExpr:
    """Dunkl Laplacian: sum of T_i^2 over A."""
    return sum_all([dunkl_T(params, i) @ dunkl_T(params, i) for i in subset_members(params, indices)])


def norm2(params: ParameterSet, indices: Iterable[int]) -> OperatorExpr:
    """Multiplication by ||x_A||^2."""
    return sum_all([MulCoord(i) @ MulCoord(i) for i in subset_members(params, indices)])


def reflection_product(params: ParameterSet, indices: Iterable[int]) -> OperatorExpr:
    """Product of r_i over A (the identity for the empty set)."""
    return compose_all(*(Reflect(i) for i in subset_members(params, indices)))


def pair_operator(params: ParameterSet, i: int, j: int) -> OperatorExpr:
    """M_ij = e_i e_j (x_i T_j - x_j T_i)."""
    blade = Blade.from_indices(params.n, (i, j))
    sign = 1 if i < j else -1
    angular = MulCoord(i) @ dunkl_T(params, j) - MulCoord(j) @ dunkl_T(params, i)
    return scaled(sign, CliffordLeft(blade) @ angular)
