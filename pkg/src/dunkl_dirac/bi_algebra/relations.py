"""Higher-rank Bannai-Ito relations between the Gamma operators.

For subsets A, B of [n]:

    {Gamma_A, Gamma_B} = Gamma_{A^B} + 2 Gamma_{A&B} Gamma_{A|B} + 2 Gamma_{A-B} Gamma_{B-A}

Key Features:
- Check of the anticommutation relation with a sign-flip negative control
- Reconstruction of Gamma_A from the operators of at most two indices
- Commutativity of the labelling chains Gamma_{pi([2])}, ..., Gamma_{pi([n-1])}
- The square identity behind the ladder factorization
"""

from collections.abc import Sequence
from fractions import Fraction
from itertools import combinations, product

from loguru import logger

from dunkl_dirac.algebra.parameters import Permutation, all_subsets, validate_permutation
from dunkl_dirac.exceptions import DimensionMismatchError, ZeroPivotError
from dunkl_dirac.operators.expr import ZERO, OperatorExpr, anticommutator, commutator, scalar, scaled
from dunkl_dirac.operators.identities import check_identity
from dunkl_dirac.operators.oracle import check_parameters
from dunkl_dirac.operators.realization import Realization
from dunkl_dirac.verification.models import RelationCheck


def bi_relation_sides(
    realization: Realization,
    a: frozenset[int],
    b: frozenset[int],
    flip_sign: bool = False,
) -> tuple[OperatorExpr, OperatorExpr]:
    """Both sides of the anticommutation relation for the pair (A, B)."""
    gamma = realization.gamma
    lhs = anticommutator(gamma(a), gamma(b))
    sign = -1 if flip_sign else 1
    rhs = scaled(sign, gamma(a ^ b)) + scaled(2, gamma(a & b) @ gamma(a | b)) + scaled(2, gamma(a - b) @ gamma(b - a))
    return lhs, rhs


def verify_bi_relation(
    realization: Realization,
    a: frozenset[int],
    b: frozenset[int],
    k_max: int,
    flip_sign: bool = False,
) -> RelationCheck:
    """Check the anticommutation relation of Gamma_A and Gamma_B.

    Args:
        realization: Clifford or scalar realization.
        a: First subset.
        b: Second subset.
        k_max: Highest test degree.
        flip_sign: Negate the Gamma_{A^B} term; the result must then fail
            whenever Gamma_{A^B} is not identically zero.

    Returns:
        RelationCheck: Pass, or fail with the first differing basis element.
    """
    lhs, rhs = bi_relation_sides(realization, a, b, flip_sign)
    name = "BI {A,B}" + (" (sign flipped)" if flip_sign else "")
    return check_identity(realization, name, lhs, rhs, k_max, subset_a=a, subset_b=b, flip_sign=flip_sign)


def bi_relation_pairs(n: int) -> list[tuple[frozenset[int], frozenset[int]]]:
    """All ordered pairs (A, B) of subsets of [n], lexicographic on the masks."""
    return list(product(all_subsets(n), repeat=2))


def pair_level(
    anti: OperatorExpr,
    symmetric: OperatorExpr,
    c_rest: OperatorExpr,
    d_rest: OperatorExpr,
    mu_pivot: Fraction,
    pivot: int,
) -> OperatorExpr:
    """Gamma_{C|D} = ({Gamma_C, Gamma_D} - Gamma_{C^D} - 2 Gamma_{C-k} Gamma_{D-k}) / (2 mu_k).

    Raises:
        ZeroPivotError: If mu_k vanishes.
    """
    if not mu_pivot:
        raise ZeroPivotError(pivot)
    return scaled(1 / (2 * mu_pivot), anti - symmetric - scaled(2, c_rest @ d_rest))


def gamma_via_pairs(realization: Realization, order: Sequence[int]) -> OperatorExpr:
    """Build Gamma over ``order`` from Gamma_B with |B| <= 2 and scalars.

    With order (a_1, ..., a_m), C = {a_1..a_{m-1}}, D = {a_{m-1}, a_m} and
    pivot k = a_{m-1}, the relation for (C, D) is solved for Gamma_{C|D}.
    Both Gamma_C and Gamma_{C^D} are expanded the same way along the induced
    orders.
    """
    members = list(order)
    if len(set(members)) != len(members):
        raise ValueError(f"Order must not repeat indices: {members}")
    for i in members:
        if not 1 <= i <= realization.n:
            raise DimensionMismatchError(realization.n, i)
    if len(members) <= 2:
        return realization.gamma(members)

    label = "GammaPairs(" + ",".join(str(i) for i in members) + ")"

    def build() -> OperatorExpr:
        *head, pivot, last = members
        gamma_c = gamma_via_pairs(realization, [*head, pivot])
        gamma_d = realization.gamma([pivot, last])
        gamma_sym = gamma_via_pairs(realization, [*head, last])
        c_rest = gamma_via_pairs(realization, head)
        d_rest = realization.gamma([last])
        return pair_level(anticommutator(gamma_c, gamma_d), gamma_sym, c_rest, d_rest, realization.params.mu_of(pivot), pivot)

    return realization.named(label, build)


def verify_gamma_via_pairs(realization: Realization, order: Sequence[int], k_max: int) -> RelationCheck:
    built = gamma_via_pairs(realization, order)
    target = realization.gamma(order)
    return check_identity(realization, "Gamma via pairs", built, target, k_max, subset_a=order, order=list(order))


def verify_pair_chain_independence(
    realization: Realization,
    first: Sequence[int],
    second: Sequence[int],
    k_max: int,
) -> RelationCheck:
    """Two orders of the same subset give the same reconstructed Gamma."""
    if set(first) != set(second):
        raise ValueError(f"Orders {list(first)} and {list(second)} cover different subsets")
    return check_identity(
        realization,
        "Gamma via pairs, order independence",
        gamma_via_pairs(realization, first),
        gamma_via_pairs(realization, second),
        k_max,
        subset_a=first,
        orders=[list(first), list(second)],
    )


def labelling_chain(n: int, perm: Permutation) -> list[frozenset[int]]:
    """The subsets pi([j]) for j = 2..n-1."""
    perm = validate_permutation(perm)
    if len(perm) != n:
        raise DimensionMismatchError(n, len(perm))
    return [frozenset(perm[:j]) for j in range(2, n)]


def verify_abelian_subalgebra(realization: Realization, perm: Permutation, k_max: int) -> RelationCheck:
    """The generators Gamma_{pi([j])}, 2 <= j <= n-1, commute pairwise."""
    chain = labelling_chain(realization.n, perm)
    parameters = check_parameters(realization.params, None, None, k_max, permutation=list(perm))
    name = "abelian labelling chain"
    checked = 0
    for first, second in combinations(chain, 2):
        bracket = commutator(realization.gamma(first), realization.gamma(second))
        row = check_identity(realization, name, bracket, ZERO, k_max, subset_a=first, subset_b=second, permutation=list(perm))
        if row.is_failure:
            logger.debug("Labelling chain for {} fails at ({}, {})", perm, sorted(first), sorted(second))
            return row
        checked += 1
    return RelationCheck.passed(name, str(realization.kind), parameters, details={"commutators": checked})


def verify_square_identity(realization: Realization, ell: int, k_max: int) -> RelationCheck:
    """The square identity linking consecutive Gamma_[m]:

    Gamma_{l+1,l+2}^2 + Gamma_{[l+2]-{l+1}}^2
        = Gamma_[l+2]^2 - Gamma_[l+1]^2 + Gamma_[l]^2 + Gamma_{l+2}^2 + Gamma_{l+1}^2 - 1/4
    """
    if not 1 <= ell <= realization.n - 2:
        raise ValueError(f"Square identity needs 1 <= l <= n-2, got l={ell} for n={realization.n}")
    g = realization.gamma

    def sq(indices: frozenset[int]) -> OperatorExpr:
        op = g(indices)
        return op @ op

    upto = [frozenset(range(1, m + 1)) for m in range(ell + 3)]
    lhs = sq(frozenset({ell + 1, ell + 2})) + sq(upto[ell + 2] - {ell + 1})
    rhs = (
        sq(upto[ell + 2])
        - sq(upto[ell + 1])
        + sq(upto[ell])
        + sq(frozenset({ell + 2}))
        + sq(frozenset({ell + 1}))
        - scalar(Fraction(1, 4))
    )
    return check_identity(realization, "square identity", lhs, rhs, k_max, ell=ell)
