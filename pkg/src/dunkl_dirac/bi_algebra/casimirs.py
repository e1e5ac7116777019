"""Quadratic and cubic Casimirs of the Bannai-Ito algebra of a subset A.

    Q_A = sum over pairs {i,j} in A of Gamma_ij^2
    C_A = sum over pairs of Gamma_ij Gamma_{A-ij} - (|A|-2) sum over i in A of mu_i Gamma_{A-i}

On the spinor representation both reduce to functions of Gamma_A:

    Q_A = Gamma_A^2 + (|A|-2) sum mu_i^2 - (|A|-1)(|A|-2)/8
    C_A = |A|(|A|-3)/4 Gamma_A
"""

from collections.abc import Iterable
from enum import StrEnum
from fractions import Fraction
from itertools import combinations

from dunkl_dirac.algebra.parameters import subset_text
from dunkl_dirac.operators.dunkl import subset_members
from dunkl_dirac.operators.expr import ZERO, OperatorExpr, commutator, scalar, scaled, sum_all
from dunkl_dirac.operators.identities import check_identity
from dunkl_dirac.operators.realization import Realization
from dunkl_dirac.verification.models import RelationCheck


class CasimirKind(StrEnum):
    QUADRATIC = "Q"
    CUBIC = "C"


def casimir_Q(realization: Realization, indices: Iterable[int]) -> OperatorExpr:
    members = subset_members(realization.params, indices)

    def build() -> OperatorExpr:
        squares = []
        for pair in combinations(members, 2):
            gamma = realization.gamma(pair)
            squares.append(gamma @ gamma)
        return sum_all(squares)

    return realization.named(f"Q{subset_text(members)}", build)


def casimir_C(realization: Realization, indices: Iterable[int]) -> OperatorExpr:
    members = subset_members(realization.params, indices)
    whole = frozenset(members)

    def build() -> OperatorExpr:
        products = [realization.gamma(pair) @ realization.gamma(whole - set(pair)) for pair in combinations(members, 2)]
        weighted = [scaled(realization.params.mu_of(i), realization.gamma(whole - {i})) for i in members]
        return sum_all(products) - scaled(len(members) - 2, sum_all(weighted))

    return realization.named(f"C{subset_text(members)}", build)


def casimir(realization: Realization, kind: CasimirKind | str, indices: Iterable[int]) -> OperatorExpr:
    if CasimirKind(kind) == CasimirKind.QUADRATIC:
        return casimir_Q(realization, indices)
    return casimir_C(realization, indices)


def verify_casimir_commutes(
    realization: Realization,
    kind: CasimirKind | str,
    indices: Iterable[int],
    other: Iterable[int],
    k_max: int,
) -> RelationCheck:
    """[Q_A, Gamma_B] = 0 (or [C_A, Gamma_B] = 0) for B inside A."""
    members = subset_members(realization.params, indices)
    inner = subset_members(realization.params, other)
    if not set(inner) <= set(members):
        raise ValueError(f"Gamma_B commutes with the Casimir of A only for B inside A: B={inner}, A={members}")
    kind = CasimirKind(kind)
    bracket = commutator(casimir(realization, kind, members), realization.gamma(inner))
    return check_identity(realization, f"[{kind.value}_A,Gamma_B]=0", bracket, ZERO, k_max, subset_a=members, subset_b=inner)


def casimir_Q_value(realization: Realization, indices: Iterable[int]) -> OperatorExpr:
    members = subset_members(realization.params, indices)
    size = len(members)
    gamma = realization.gamma(members)
    squares = sum((realization.params.mu_of(i) ** 2 for i in members), Fraction(0))
    constant = (size - 2) * squares - Fraction((size - 1) * (size - 2), 8)
    return gamma @ gamma + scalar(constant)


def verify_casimir_Q_value(realization: Realization, indices: Iterable[int], k_max: int) -> RelationCheck:
    members = subset_members(realization.params, indices)
    return check_identity(
        realization, "Q_A value", casimir_Q(realization, members), casimir_Q_value(realization, members), k_max, subset_a=members
    )


def verify_casimir_C_value(realization: Realization, indices: Iterable[int], k_max: int) -> RelationCheck:
    members = subset_members(realization.params, indices)
    size = len(members)
    factor = Fraction(size * (size - 3), 4)
    return check_identity(
        realization,
        "C_A value",
        casimir_C(realization, members),
        scaled(factor, realization.gamma(members)),
        k_max,
        subset_a=members,
        factor=str(factor),
    )
