"""The rank-one Bannai-Ito algebra for n = 3.

With K_1 = Gamma_{23}, K_2 = Gamma_{13}, K_3 = Gamma_{12} the relations read

    {K_1, K_2} = K_3 + omega_3,   omega_3 = 2 mu_3 Gamma_[3] + 2 mu_1 mu_2

and cyclically. Gamma_[3] is central in the algebra they generate, and acts on
the monogenics of degree k as (-1)^k (k + gamma_[3] - 1/2).
"""

from fractions import Fraction
from typing import NamedTuple

from dunkl_dirac.algebra.parameters import ParameterSet
from dunkl_dirac.algebra.rational import format_rational
from dunkl_dirac.exceptions import DimensionMismatchError
from dunkl_dirac.monogenics.ck import basis_psi
from dunkl_dirac.monogenics.labels import BasisLabel
from dunkl_dirac.operators.expr import OperatorExpr, anticommutator, scalar, scaled
from dunkl_dirac.operators.identities import check_identity
from dunkl_dirac.operators.oracle import check_parameters, polynomials_equal, relation_row
from dunkl_dirac.operators.realization import Realization, get_realization
from dunkl_dirac.verification.models import RelationCheck

FULL = (1, 2, 3)


class RankOneRelation(NamedTuple):
    name: str
    lhs: OperatorExpr
    rhs: OperatorExpr
    indices: tuple[int, int, int]


def _require_rank_one(n: int) -> None:
    if n != 3:
        raise DimensionMismatchError(3, n)


def omega(realization: Realization, i: int, j: int, k: int) -> OperatorExpr:
    """2 mu_k Gamma_[3] + 2 mu_i mu_j."""
    params = realization.params
    return scaled(2 * params.mu_of(k), realization.gamma(FULL)) + scalar(2 * params.mu_of(i) * params.mu_of(j))


def rank_one_relations(realization: Realization) -> list[RankOneRelation]:
    """The three cyclic relations, keyed by the index left out of the right-hand Gamma."""
    _require_rank_one(realization.n)
    gamma = realization.gamma
    relations = []
    for i, j, k in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        # {Gamma_{jk}, Gamma_{ik}} = Gamma_{ij} + 2 mu_k Gamma_[3] + 2 mu_i mu_j
        lhs = anticommutator(gamma([j, k]), gamma([i, k]))
        rhs = gamma([i, j]) + omega(realization, i, j, k)
        relations.append(RankOneRelation(f"{{K{i},K{j}}}=K{k}+w{k}", lhs, rhs, (i, j, k)))
    return relations


def verify_rank_one_relation(realization: Realization, index: int, k_max: int) -> RelationCheck:
    for relation in rank_one_relations(realization):
        if relation.indices[2] == index:
            return check_identity(realization, relation.name, relation.lhs, relation.rhs, k_max, subset_a=FULL)
    raise ValueError(f"Rank-one relation index must be 1, 2 or 3, got {index}")


def rank_one_structure_constants(realization: Realization, k_max: int) -> list[RelationCheck]:
    """All three cyclic relations, one row each."""
    return [verify_rank_one_relation(realization, index, k_max) for index in (3, 1, 2)]


def omega_value(params: ParameterSet, k: int) -> Fraction:
    """2 mu_3 (-1)^k (k + gamma_[3] - 1/2) + 2 mu_1 mu_2."""
    _require_rank_one(params.n)
    sign = -1 if k % 2 else 1
    central = sign * (k + params.gamma(FULL) - Fraction(1, 2))
    return 2 * params.mu_of(3) * central + 2 * params.mu_of(1) * params.mu_of(2)


def verify_rank_one_on_monogenics(label: BasisLabel, params: ParameterSet) -> RelationCheck:
    """omega_3 acts on each Psi of degree k by the scalar omega_value(k)."""
    _require_rank_one(params.n)
    clifford = get_realization("clifford", params)
    psi = basis_psi(label, params)
    value = omega_value(params, label.k)
    image = omega(clifford, 1, 2, 3).apply(psi, clifford.cache)
    parameters = check_parameters(params, FULL, None, label.k, label=str(label), omega=format_rational(value))
    return relation_row("omega_3 on monogenics", "clifford", parameters, polynomials_equal(image, psi.scale(value), psi))
