"""Labels of the monogenic basis.

A multi-index j = (j_1, ..., j_{n-1}) of degree k has non-negative entries
summing to k; the last entry is determined by the others.
"""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import product

from dunkl_dirac.algebra.blade import Blade, all_blades
from dunkl_dirac.exceptions import InvalidMultiIndexError


@dataclass(frozen=True, order=True)
class MultiIndex:
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(j) for j in self.entries)
        if not entries or any(j < 0 for j in entries):
            raise InvalidMultiIndexError(entries, len(entries) + 1, sum(entries))
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, n: int, k: int, head: Sequence[int]) -> MultiIndex:
        """Complete (j_1, ..., j_{n-2}) with j_{n-1} = k - sum of the head.

        Raises:
            InvalidMultiIndexError: If the head is too long or exceeds k.
        """
        head = tuple(head)
        if len(head) != n - 2 or sum(head) > k or any(j < 0 for j in head):
            raise InvalidMultiIndexError(head, n, k)
        return cls((*head, k - sum(head)))

    @property
    def n(self) -> int:
        return len(self.entries) + 1

    @property
    def k(self) -> int:
        return sum(self.entries)

    def __getitem__(self, ell: int) -> int:
        """j_ell, 1-based."""
        return self.entries[ell - 1]

    def prefix_sum(self, ell: int) -> int:
        """|j_ell| = j_1 + ... + j_ell; zero for ell = 0."""
        return sum(self.entries[:ell])

    def step(self, ell: int, direction: int) -> MultiIndex | None:
        """j + direction * h_ell, where h_ell is +1 at ell and -1 at ell+1; None if an entry goes negative."""
        if not 1 <= ell <= len(self.entries) - 1:
            raise ValueError(f"Step index must satisfy 1 <= l <= n-2, got {ell} for n={self.n}")
        entries = list(self.entries)
        entries[ell - 1] += direction
        entries[ell] -= direction
        if min(entries) < 0:
            return None
        return MultiIndex(tuple(entries))

    def __str__(self) -> str:
        return "(" + ",".join(str(j) for j in self.entries) + ")"


@dataclass(frozen=True, order=True)
class BasisLabel:
    multi_index: MultiIndex
    blade: Blade

    def __post_init__(self) -> None:
        if self.blade.n != self.multi_index.n:
            raise InvalidMultiIndexError(self.multi_index.entries, self.blade.n, self.multi_index.k)

    @property
    def n(self) -> int:
        return self.multi_index.n

    @property
    def k(self) -> int:
        return self.multi_index.k

    def __str__(self) -> str:
        return f"j={self.multi_index} s={self.blade.label}"


def enumerate_multi_indices(n: int, k: int) -> list[MultiIndex]:
    """All multi-indices of degree k over n variables, lexicographic; C(n+k-2, k) of them."""
    if n < 2:
        raise ValueError(f"Monogenic labels need n >= 2, got {n}")
    found = [MultiIndex((*head, k - sum(head))) for head in product(range(k + 1), repeat=n - 2) if sum(head) <= k]
    return sorted(found)


def enumerate_labels(n: int, k: int, blades: Sequence[Blade] | None = None) -> Iterator[BasisLabel]:
    for blade in blades if blades is not None else all_blades(n):
        for index in enumerate_multi_indices(n, k):
            yield BasisLabel(index, blade)
