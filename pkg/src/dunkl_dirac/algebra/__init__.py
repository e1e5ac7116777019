"""Exact rational, Clifford and polynomial arithmetic."""

from .blade import Blade, all_blades, blade_mul
from .linalg import RationalMatrix, coordinate_matrix, matrix_rank, polynomial_rank
from .parameters import (
    ParameterSet,
    Permutation,
    SubsetLabel,
    all_subsets,
    cyclic_permutation,
    full_set,
    identity_permutation,
    prefix,
    subset,
)
from .polynomial import (
    Monomial,
    SpinorPolynomial,
    basis_of_graded_component,
    clifford_left,
    clifford_vector,
    graded_dimension,
    monomials_of_degree,
    permute_polynomial,
    poly_add,
    poly_mul_coordinate,
    poly_scale,
    scalar_basis_of_graded_component,
    squared_norm,
)
from .rational import Rational, format_rational, parse_rational, pochhammer

__all__ = [
    "Blade",
    "Monomial",
    "ParameterSet",
    "Permutation",
    "Rational",
    "RationalMatrix",
    "SpinorPolynomial",
    "SubsetLabel",
    "all_blades",
    "all_subsets",
    "basis_of_graded_component",
    "blade_mul",
    "clifford_left",
    "clifford_vector",
    "coordinate_matrix",
    "cyclic_permutation",
    "format_rational",
    "full_set",
    "graded_dimension",
    "identity_permutation",
    "matrix_rank",
    "monomials_of_degree",
    "parse_rational",
    "permute_polynomial",
    "pochhammer",
    "poly_add",
    "poly_mul_coordinate",
    "poly_scale",
    "polynomial_rank",
    "prefix",
    "scalar_basis_of_graded_component",
    "squared_norm",
    "subset",
]
