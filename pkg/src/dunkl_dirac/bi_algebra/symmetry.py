"""Symmetries of the Gamma operators.

Relabelling the indices by a permutation carries Gamma^mu_A to
Gamma^{pi_* mu}_{pi(A)}; the parity operators Z_i = r_i (x) (e_i -> -e_i)
commute with every Gamma_A.
"""

from collections.abc import Iterable

from dunkl_dirac.algebra.parameters import Permutation, permute_subset, validate_permutation
from dunkl_dirac.exceptions import DimensionMismatchError
from dunkl_dirac.operators.dunkl import subset_members
from dunkl_dirac.operators.expr import ZERO, ParityFlip, commutator
from dunkl_dirac.operators.identities import check_identity
from dunkl_dirac.operators.oracle import EqualityResult, check_parameters, relation_row
from dunkl_dirac.operators.realization import CliffordRealization, Realization, get_realization
from dunkl_dirac.verification.models import RelationCheck


def verify_permutation_equivariance(
    realization: Realization,
    indices: Iterable[int],
    perm: Permutation,
    k_max: int,
) -> RelationCheck:
    """pi o Gamma^mu_A = Gamma^{pi_* mu}_{pi(A)} o pi on the test space.

    The two sides live in different realizations, so each is evaluated with
    its own cache.
    """
    perm = validate_permutation(perm)
    if len(perm) != realization.n:
        raise DimensionMismatchError(realization.n, len(perm))
    members = subset_members(realization.params, indices)
    image = get_realization(str(realization.kind), realization.params.pushforward(perm))
    source = realization.gamma(members)
    target = image.gamma(permute_subset(perm, members))
    parameters = check_parameters(realization.params, members, None, k_max, permutation=list(perm))

    checked = 0
    for k in range(k_max + 1):
        for element in realization.basis(k):
            checked += 1
            lhs = source.apply(element, realization.cache).permute(perm)
            rhs = target.apply(element.permute(perm), image.cache)
            if lhs != rhs:
                result = EqualityResult(False, checked, k, element, lhs, rhs)
                return relation_row("permutation equivariance", str(realization.kind), parameters, result)
    return relation_row("permutation equivariance", str(realization.kind), parameters, EqualityResult(True, checked))


def verify_parity_symmetry(realization: CliffordRealization, i: int, indices: Iterable[int], k_max: int) -> RelationCheck:
    """[Z_i, Gamma_A] = 0."""
    members = subset_members(realization.params, indices)
    bracket = commutator(ParityFlip(i), realization.gamma(members))
    return check_identity(realization, f"[Z{i},Gamma_A]=0", bracket, ZERO, k_max, subset_a=members, parity_index=i)
