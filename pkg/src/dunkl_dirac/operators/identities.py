"""Operator identities of a single realization.

Each ``verify_*`` function evaluates one identity on the test space of
degree at most ``k_max`` and returns one report row.
"""

from collections.abc import Iterable
from typing import Any

from dunkl_dirac.algebra.polynomial import SpinorPolynomial
from dunkl_dirac.verification.models import RelationCheck

from .dunkl import dunkl_T, subset_members
from .expr import ZERO, OperatorExpr, anticommutator, commutator
from .oracle import EqualityResult, check_parameters, relation_row
from .realization import CliffordRealization, Realization, osp_relations, square_relations


def check_identity(
    realization: Realization,
    name: str,
    lhs: OperatorExpr,
    rhs: OperatorExpr,
    k_max: int,
    subset_a: Iterable[int] | None = None,
    subset_b: Iterable[int] | None = None,
    **extra: Any,
) -> RelationCheck:
    """Compare two operators of ``realization`` and report the outcome as a row."""
    parameters = check_parameters(realization.params, subset_a, subset_b, k_max, **extra)
    result = realization.equal_on_degree(lhs, rhs, k_max)
    return relation_row(name, str(realization.kind), parameters, result, lhs, rhs)


def verify_dunkl_commutativity(realization: Realization, i: int, j: int, k_max: int) -> RelationCheck:
    params = realization.params
    ti, tj = dunkl_T(params, i), dunkl_T(params, j)
    return check_identity(realization, f"T{i}T{j}=T{j}T{i}", ti @ tj, tj @ ti, k_max, pair=[i, j])


def verify_osp_relation(realization: Realization, indices: Iterable[int], relation: str, k_max: int) -> RelationCheck:
    """One osp(1|2) bracket of (D_A, X_A), looked up by name in ``osp_relations``."""
    members = subset_members(realization.params, indices)
    for name, lhs, rhs in osp_relations(realization, members) + square_relations(realization, members):
        if name == relation:
            return check_identity(realization, f"osp {name}", lhs, rhs, k_max, subset_a=members)
    raise ValueError(f"Unknown osp relation: {relation!r}")


def verify_scasimir_anticommutation(realization: Realization, indices: Iterable[int], k_max: int) -> RelationCheck:
    """{S_A, D_A} = 0 and {S_A, X_A} = 0, reported as one row."""
    members = subset_members(realization.params, indices)
    s = realization.scasimir(members)
    d, x = realization.dirac(members), realization.position(members)
    first = check_identity(realization, "{S,D}=0", anticommutator(s, d), ZERO, k_max, subset_a=members)
    if first.is_failure:
        return first
    second = check_identity(realization, "{S,X}=0", anticommutator(s, x), ZERO, k_max, subset_a=members)
    return second.model_copy(update={"name": "{S,D}={S,X}=0"}) if not second.is_failure else second


def verify_gamma_symmetry(realization: Realization, indices: Iterable[int], k_max: int) -> RelationCheck:
    """Gamma_A commutes with the odd pair of the realization and with Gamma_[n]."""
    members = subset_members(realization.params, indices)
    gamma = realization.gamma(members)
    d, x = realization.symmetry_partners(members)
    partners = [("D", d), ("X", x), ("Gamma[n]", realization.gamma(realization.full()))]
    for label, partner in partners:
        row = check_identity(realization, f"[Gamma,{label}]=0", commutator(gamma, partner), ZERO, k_max, subset_a=members)
        if row.is_failure:
            return row
    return row.model_copy(update={"name": "Gamma symmetry"})


def verify_gamma_forms(realization: CliffordRealization, indices: Iterable[int], k_max: int) -> RelationCheck:
    """The sCasimir form of Gamma_A agrees with the explicit pair-operator form."""
    members = subset_members(realization.params, indices)
    return check_identity(
        realization,
        "Gamma=GammaExplicit",
        realization.gamma(members),
        realization.gamma_explicit(members),
        k_max,
        subset_a=members,
    )


def _degree_escape(image: SpinorPolynomial, k: int) -> bool:
    return bool(image) and image.degrees() != {k}


def verify_degree_preservation(realization: Realization, indices: Iterable[int], k_max: int) -> RelationCheck:
    """Gamma_A maps each graded component into itself."""
    members = subset_members(realization.params, indices)
    gamma = realization.gamma(members)
    parameters = check_parameters(realization.params, members, None, k_max)
    checked = 0
    for k in range(k_max + 1):
        for element in realization.basis(k):
            checked += 1
            image = gamma.apply(element, realization.cache)
            if _degree_escape(image, k):
                result = EqualityResult(False, checked, k, element, image, image.graded_part(k))
                return relation_row("Gamma preserves degree", str(realization.kind), parameters, result)
    return relation_row("Gamma preserves degree", str(realization.kind), parameters, EqualityResult(True, checked))
