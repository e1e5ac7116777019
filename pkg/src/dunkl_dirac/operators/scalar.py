"""Clifford-free operators: D_A = sum T_i R_i and X_A = sum x_i R_i over A.

R_i is the product of the reflections r_j with j > i over all of [n], not
only over A, so the pair terms of Gamma_A do not depend on A. R_n is the
identity. The generic D_i of the summary definition is read as the Dunkl
operator T_i.
"""

from collections.abc import Iterable
from fractions import Fraction

from dunkl_dirac.algebra.parameters import ParameterSet

from .dunkl import dunkl_T, reflection_product, subset_members
from .expr import MulCoord, OperatorExpr, commutator, scalar, scaled, sum_all


def tail_reflections(params: ParameterSet, i: int) -> OperatorExpr:
    """R_i = r_{i+1} ... r_n."""
    return reflection_product(params, range(i + 1, params.n + 1))


def scalar_D(params: ParameterSet, indices: Iterable[int]) -> OperatorExpr:
    return sum_all([dunkl_T(params, i) @ tail_reflections(params, i) for i in subset_members(params, indices)])


def scalar_X(params: ParameterSet, indices: Iterable[int]) -> OperatorExpr:
    return sum_all([MulCoord(i) @ tail_reflections(params, i) for i in subset_members(params, indices)])


def scalar_scasimir(params: ParameterSet, indices: Iterable[int]) -> OperatorExpr:
    """S_A = ([D_A, X_A] - 1) / 2."""
    members = subset_members(params, indices)
    bracket = commutator(scalar_D(params, members), scalar_X(params, members))
    return scaled(Fraction(1, 2), bracket - scalar(1))


def scalar_gamma(params: ParameterSet, indices: Iterable[int]) -> OperatorExpr:
    members = subset_members(params, indices)
    return scalar_scasimir(params, members) @ reflection_product(params, members)
