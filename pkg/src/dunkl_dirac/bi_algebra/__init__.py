"""Bannai-Ito algebra of the spherical Dirac-Dunkl operators Gamma_A."""

from .casimirs import (
    CasimirKind,
    casimir,
    casimir_C,
    casimir_Q,
    casimir_Q_value,
    verify_casimir_C_value,
    verify_casimir_commutes,
    verify_casimir_Q_value,
)
from .rank_one import (
    omega_value,
    rank_one_relations,
    rank_one_structure_constants,
    verify_rank_one_on_monogenics,
    verify_rank_one_relation,
)
from .relations import (
    bi_relation_pairs,
    bi_relation_sides,
    gamma_via_pairs,
    labelling_chain,
    verify_abelian_subalgebra,
    verify_bi_relation,
    verify_gamma_via_pairs,
    verify_pair_chain_independence,
    verify_square_identity,
)
from .symmetry import verify_parity_symmetry, verify_permutation_equivariance

__all__ = [
    "CasimirKind",
    "bi_relation_pairs",
    "bi_relation_sides",
    "casimir",
    "casimir_C",
    "casimir_Q",
    "casimir_Q_value",
    "gamma_via_pairs",
    "labelling_chain",
    "omega_value",
    "rank_one_relations",
    "rank_one_structure_constants",
    "verify_abelian_subalgebra",
    "verify_bi_relation",
    "verify_casimir_C_value",
    "verify_casimir_Q_value",
    "verify_casimir_commutes",
    "verify_gamma_via_pairs",
    "verify_pair_chain_independence",
    "verify_parity_symmetry",
    "verify_permutation_equivariance",
    "verify_rank_one_on_monogenics",
    "verify_rank_one_relation",
    "verify_square_identity",
]
