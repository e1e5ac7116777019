"""Connection coefficients between the sector basis and its cyclic relabelling.

With pi the cycle 1 -> 2 -> ... -> n -> 1 and nu = pi^* mu, the functions

    Phi_j' = pi( sector_psi^nu(j') ) v_s

are Dunkl monogenics for mu again and span the same sector as the
Psi_j = sector_psi^mu(j) v_s. The connection matrix expresses one basis in
the other: Phi_j' = sum_j C_{j j'} Psi_j, with C_{j j'} = <Psi_j, Phi_j'> / <Psi_j, Psi_j>.

For n = 3 the Psi basis diagonalises Gamma_{12} and the Phi basis
diagonalises Gamma_{23}; the matrix of Gamma_{23} on the Psi basis is
tridiagonal, so each column of C also follows from a three-term recurrence.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from loguru import logger

from dunkl_dirac.algebra.blade import Blade
from dunkl_dirac.algebra.linalg import RationalMatrix
from dunkl_dirac.algebra.parameters import ParameterSet, Permutation, cyclic_permutation
from dunkl_dirac.algebra.polynomial import SpinorPolynomial
from dunkl_dirac.algebra.rational import format_rational
from dunkl_dirac.operators.oracle import check_parameters
from dunkl_dirac.operators.realization import get_realization
from dunkl_dirac.verification.models import RelationCheck, Witness

from .ck import sector_tower
from .inner_product import gram_matrix, inner_product
from .labels import MultiIndex, enumerate_multi_indices

CLIFFORD = "clifford"


def permute_basis(p: SpinorPolynomial, perm: Permutation) -> SpinorPolynomial:
    """Relabel variables and generators: x_i -> x_{pi(i)}, e_i -> e_{pi(i)}."""
    return p.permute(perm)


@dataclass(frozen=True)
class ConnectionData:
    """The two bases of one sector and the matrices relating them."""

    params: ParameterSet
    k: int
    blade: Blade
    labels: tuple[MultiIndex, ...]
    psi: tuple[SpinorPolynomial, ...]
    phi: tuple[SpinorPolynomial, ...]
    overlaps: RationalMatrix
    gram: RationalMatrix
    gram_prime: RationalMatrix
    coefficients: RationalMatrix

    @property
    def size(self) -> int:
        return len(self.labels)


def _sector_basis(params: ParameterSet, k: int, blade: Blade) -> tuple[list[MultiIndex], list[SpinorPolynomial]]:
    labels = enumerate_multi_indices(params.n, k)
    return labels, [sector_tower(index, params).clifford_right(blade) for index in labels]


def _relabelled_basis(params: ParameterSet, labels: Sequence[MultiIndex], blade: Blade) -> list[SpinorPolynomial]:
    perm = cyclic_permutation(params.n)
    nu = params.pullback(perm)
    return [permute_basis(sector_tower(index, nu), perm).clifford_right(blade) for index in labels]


@lru_cache(maxsize=256)
def connection_matrix(params: ParameterSet, k: int, blade: Blade) -> ConnectionData:
    labels, psi = _sector_basis(params, k, blade)
    phi = _relabelled_basis(params, labels, blade)
    size = len(labels)
    gram = gram_matrix(psi, params)
    gram_prime = gram_matrix(phi, params)
    overlaps = RationalMatrix.from_rows([[inner_product(psi[a], phi[b], params) for b in range(size)] for a in range(size)])
    coefficients = RationalMatrix.from_rows([[overlaps[a, b] / gram[a, a] for b in range(size)] for a in range(size)])
    logger.debug("Connection matrix n={} k={} s={} of size {}", params.n, k, blade.label, size)
    return ConnectionData(params, k, blade, tuple(labels), tuple(psi), tuple(phi), overlaps, gram, gram_prime, coefficients)


def _expansion(data: ConnectionData, column: int) -> SpinorPolynomial:
    return SpinorPolynomial.linear_combination(
        data.params.n, ((data.coefficients[a, column], data.psi[a]) for a in range(data.size))
    )


def verify_connection_unitarity(params: ParameterSet, k: int, blade: Blade) -> RelationCheck:
    """Phi_j' = sum_j C_{j j'} Psi_j exactly, and C^T G C = G'."""
    data = connection_matrix(params, k, blade)
    parameters = check_parameters(params, None, None, k, blade=blade.label)
    if not data.gram.is_diagonal():
        witness = Witness(basis_element="Gram(Psi)", lhs="non-diagonal", rhs="diagonal", degree=k)
        return RelationCheck.failed("connection unitarity", CLIFFORD, parameters, witness, message="sector basis not orthogonal")
    for column, label in enumerate(data.labels):
        expansion = _expansion(data, column)
        if expansion != data.phi[column]:
            witness = Witness(basis_element=f"j'={label}", lhs=data.phi[column].serialize(), rhs=expansion.serialize(), degree=k)
            return RelationCheck.failed("connection unitarity", CLIFFORD, parameters, witness, message="expansion is not exact")
    transported = data.coefficients.transpose() @ data.gram @ data.coefficients
    if transported != data.gram_prime:
        witness = Witness(basis_element="C^T G C", lhs=_render(transported), rhs=_render(data.gram_prime), degree=k)
        return RelationCheck.failed("connection unitarity", CLIFFORD, parameters, witness)
    return RelationCheck.passed("connection unitarity", CLIFFORD, parameters, details={"size": data.size})


def _render(matrix: RationalMatrix) -> str:
    return "\n".join(" ".join(format_rational(value) for value in row) for row in matrix.entries)


def coordinate_matrix_of(operator_images: Sequence[SpinorPolynomial], data: ConnectionData) -> RationalMatrix:
    """M[a][b] = <Psi_a, op Psi_b> / <Psi_a, Psi_a>."""
    size = data.size
    rows = [
        [inner_product(data.psi[a], operator_images[b], data.params) / data.gram[a, a] for b in range(size)] for a in range(size)
    ]
    return RationalMatrix.from_rows(rows)


def recurrence_vector(matrix: RationalMatrix, eigenvalue: Fraction) -> list[Fraction] | None:
    """Solve (M - lambda) v = 0 row by row from v_0 = 1; None if a super-diagonal entry vanishes or the last row fails."""
    size = matrix.rows
    vector = [Fraction(1)]
    for a in range(size - 1):
        if not matrix[a, a + 1]:
            return None
        previous = matrix[a, a - 1] * vector[a - 1] if a else Fraction(0)
        vector.append(((eigenvalue - matrix[a, a]) * vector[a] - previous) / matrix[a, a + 1])
    last = size - 1
    residual = matrix[last, last] * vector[last] - eigenvalue * vector[last]
    if last:
        residual += matrix[last, last - 1] * vector[last - 1]
    return vector if residual == 0 else None


def proportional(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    return all(u[a] * v[b] == u[b] * v[a] for a in range(len(u)) for b in range(a + 1, len(u)))


def bannai_ito_recurrence_oracle(params: ParameterSet, k: int, blade: Blade) -> RelationCheck:
    """For n = 3: Gamma_{23} is tridiagonal on Psi and its recurrence eigenvectors are the columns of C."""
    if params.n != 3:
        raise ValueError(f"Recurrence oracle is defined for n = 3, got n={params.n}")
    data = connection_matrix(params, k, blade)
    clifford = get_realization(CLIFFORD, params)
    gamma = clifford.gamma([2, 3])
    images = [gamma.apply(p, clifford.cache) for p in data.psi]
    matrix = coordinate_matrix_of(images, data)
    parameters = check_parameters(params, [2, 3], None, k, blade=blade.label)

    for b, image in enumerate(images):
        rebuilt = SpinorPolynomial.linear_combination(params.n, ((matrix[a, b], data.psi[a]) for a in range(data.size)))
        if rebuilt != image:
            witness = Witness(basis_element=data.psi[b].serialize(), lhs=image.serialize(), rhs=rebuilt.serialize(), degree=k)
            return RelationCheck.failed("Gamma_23 recurrence", CLIFFORD, parameters, witness, message="sector not invariant")
    if not matrix.is_tridiagonal():
        witness = Witness(basis_element="Gamma_23 on Psi", lhs=_render(matrix), rhs="tridiagonal", degree=k)
        return RelationCheck.failed("Gamma_23 recurrence", CLIFFORD, parameters, witness, message="not tridiagonal")

    offset = params.mu_of(2) + params.mu_of(3) + Fraction(1, 2)
    for column, label in enumerate(data.labels):
        j1 = label[1]
        eigenvalue = (-1) ** j1 * (j1 + offset)
        vector = recurrence_vector(matrix, eigenvalue)
        expected = data.coefficients.column(column)
        if vector is None or not proportional(vector, expected):
            rendered = " ".join(format_rational(v) for v in vector) if vector is not None else "no eigenvector"
            witness = Witness(
                basis_element=f"j'={label}",
                lhs=rendered,
                rhs=" ".join(format_rational(c) for c in expected),
                degree=k,
            )
            details = {"eigenvalue": format_rational(eigenvalue)}
            return RelationCheck.failed("Gamma_23 recurrence", CLIFFORD, parameters, witness, details=details)
    return RelationCheck.passed("Gamma_23 recurrence", CLIFFORD, parameters, details={"size": data.size})
