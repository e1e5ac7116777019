"""Dense rational matrices and exact rank.

Rank is computed with fraction-free (Bareiss) elimination on integer rows
obtained by clearing each row's denominators.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from dunkl_dirac.algebra.polynomial import SpinorPolynomial, TermKey
from dunkl_dirac.algebra.rational import RationalLike
from dunkl_dirac.exceptions import DimensionMismatchError


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise DimensionMismatchError(self.rows * self.cols, sum(len(row) for row in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> RationalMatrix:
        data = tuple(tuple(Fraction(value) for value in row) for row in rows)
        return cls(len(data), len(data[0]) if data else 0, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, size: int) -> RationalMatrix:
        return cls(size, size, tuple(tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size)))

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> RationalMatrix:
        size = len(values)
        rows = tuple(tuple(Fraction(values[i]) if i == j else Fraction(0) for j in range(size)) for i in range(size))
        return cls(size, size, rows)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        row, col = index
        return self.entries[row][col]

    def column(self, col: int) -> tuple[Fraction, ...]:
        return tuple(row[col] for row in self.entries)

    def transpose(self) -> RationalMatrix:
        if not self.rows:
            return RationalMatrix(self.cols, 0, tuple(() for _ in range(self.cols)))
        return RationalMatrix(self.cols, self.rows, tuple(zip(*self.entries, strict=True)))

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise DimensionMismatchError(self.cols, other.rows)
        columns = [other.column(c) for c in range(other.cols)]
        data = tuple(
            tuple(sum((a * b for a, b in zip(row, col, strict=True)), Fraction(0)) for col in columns) for row in self.entries
        )
        return RationalMatrix(self.rows, other.cols, data)

    def is_diagonal(self) -> bool:
        return all(value == 0 for i, row in enumerate(self.entries) for j, value in enumerate(row) if i != j)

    def is_tridiagonal(self) -> bool:
        return all(value == 0 for i, row in enumerate(self.entries) for j, value in enumerate(row) if abs(i - j) > 1)

    def diagonal_entries(self) -> tuple[Fraction, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    scale = lcm(*(value.denominator for value in row)) if row else 1
    return [int(value * scale) for value in row]


def matrix_rank(matrix: RationalMatrix) -> int:
    """Exact rank over the rationals."""
    rows = [_integer_row(row) for row in matrix.entries if any(row)]
    if not rows:
        return 0
    width = matrix.cols
    rank = 0
    previous = 1
    for col in range(width):
        pivot_row = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            factor = rows[r][col]
            # Bareiss step: every entry is a minor, so the division is exact.
            rows[r] = [(pivot * rows[r][c] - factor * rows[rank][c]) // previous for c in range(width)]
        previous = pivot
        rank += 1
        if rank == len(rows):
            break
    return rank


def coordinate_matrix(polys: Sequence[SpinorPolynomial]) -> RationalMatrix:
    """Rows are the coefficient vectors of the polynomials over their joint support."""
    if not polys:
        return RationalMatrix(0, 0, ())
    support: set[TermKey] = set()
    for poly in polys:
        support.update(poly.terms)
    keys = sorted(support)
    return RationalMatrix(
        len(polys),
        len(keys),
        tuple(tuple(poly.terms.get(key, Fraction(0)) for key in keys) for poly in polys),
    )


def polynomial_rank(polys: Sequence[SpinorPolynomial]) -> int:
    return matrix_rank(coordinate_matrix(polys))
