"""Dunkl monogenics: labels, CK towers, Jacobi closed forms, sphere pairing and connection coefficients."""

from .ck import basis_psi, ck_extend, ck_tower, sector_psi, sector_tower
from .connection import (
    ConnectionData,
    bannai_ito_recurrence_oracle,
    connection_matrix,
    permute_basis,
    verify_connection_unitarity,
)
from .inner_product import (
    gram_matrix,
    inner_product,
    moment,
    moment_quadrature,
    verify_clifford_skew_adjoint,
    verify_moment_oracle,
    verify_orthogonality,
)
from .jacobi import explicit_psi, jacobi_homogenized, substitute_uv
from .labels import BasisLabel, MultiIndex, enumerate_labels, enumerate_multi_indices
from .spectral import (
    fischer_decompose,
    gamma_eigenvalue,
    power_action_coefficient,
    verify_ck_restriction,
    verify_eigenvalues,
    verify_explicit_formula,
    verify_kernel,
    verify_monogenic_count,
    verify_power_actions,
)

__all__ = [
    "BasisLabel",
    "ConnectionData",
    "MultiIndex",
    "bannai_ito_recurrence_oracle",
    "basis_psi",
    "ck_extend",
    "ck_tower",
    "connection_matrix",
    "enumerate_labels",
    "enumerate_multi_indices",
    "explicit_psi",
    "fischer_decompose",
    "gamma_eigenvalue",
    "gram_matrix",
    "inner_product",
    "jacobi_homogenized",
    "moment",
    "moment_quadrature",
    "permute_basis",
    "power_action_coefficient",
    "sector_psi",
    "sector_tower",
    "substitute_uv",
    "verify_ck_restriction",
    "verify_clifford_skew_adjoint",
    "verify_connection_unitarity",
    "verify_eigenvalues",
    "verify_explicit_formula",
    "verify_kernel",
    "verify_moment_oracle",
    "verify_monogenic_count",
    "verify_orthogonality",
    "verify_power_actions",
]
