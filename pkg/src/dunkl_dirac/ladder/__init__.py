"""Ladder operators K_l^(+-), their spectra and their action on the sector basis."""

from .action import (
    LadderAction,
    ladder_actions,
    ladder_coefficient,
    ladder_graph,
    verify_irreducibility,
    verify_ladder_action,
    verify_spectral_value,
)
from .operators import (
    LadderStep,
    all_steps,
    extra_symmetry,
    ladder_K,
    ladder_parts,
    square_factors,
    verify_covariance,
    verify_extra_symmetry,
    verify_square_factorization,
)
from .spectrum import alpha_coeff, lambda_value, predicted_vanishing, target_label, verify_alpha_sign

__all__ = [
    "LadderAction",
    "LadderStep",
    "all_steps",
    "alpha_coeff",
    "extra_symmetry",
    "ladder_K",
    "ladder_actions",
    "ladder_coefficient",
    "ladder_graph",
    "ladder_parts",
    "lambda_value",
    "predicted_vanishing",
    "square_factors",
    "target_label",
    "verify_alpha_sign",
    "verify_covariance",
    "verify_extra_symmetry",
    "verify_irreducibility",
    "verify_ladder_action",
    "verify_spectral_value",
    "verify_square_factorization",
]
