"""Clifford blades of the negative-signature algebra Cl_n.

A blade e_S = e_{i1}...e_{im} (i1 < ... < im) is stored as a bitmask where
bit i-1 encodes the generator e_i. Products follow e_i e_j + e_j e_i = -2 delta_ij.
"""

from collections.abc import Iterable, Iterator
from typing import NamedTuple

from dunkl_dirac.exceptions import DimensionMismatchError


class Blade(NamedTuple):
    """Canonically ordered product of Clifford generators over dimension n."""

    mask: int
    n: int

    @classmethod
    def unit(cls, n: int) -> Blade:
        return cls(0, n)

    @classmethod
    def generator(cls, n: int, i: int) -> Blade:
        if not 1 <= i <= n:
            raise DimensionMismatchError(n, i)
        return cls(1 << (i - 1), n)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> Blade:
        """Build a blade from a set of generator indices (order and repeats must not matter)."""
        mask = 0
        for i in indices:
            if not 1 <= i <= n:
                raise DimensionMismatchError(n, i)
            mask |= 1 << (i - 1)
        return cls(mask, n)

    @property
    def indices(self) -> tuple[int, ...]:
        return mask_indices(self.mask)

    @property
    def grade(self) -> int:
        return self.mask.bit_count()

    @property
    def label(self) -> str:
        """Compact label used in file names: ``1`` for the unit, ``e1_2`` for e1e2."""
        if not self.mask:
            return "1"
        return "e" + "_".join(str(i) for i in self.indices)

    def __str__(self) -> str:
        if not self.mask:
            return "1"
        return "".join(f"e{i}" for i in self.indices)


def mask_indices(mask: int) -> tuple[int, ...]:
    """Ascending generator indices encoded by a bitmask."""
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def mask_product_sign(left: int, right: int) -> int:
    """Sign of e_left * e_right once brought to canonical order.

    Each generator of ``right`` moves left past every larger generator of
    ``left``; every shared generator then contracts with e_i^2 = -1.
    """
    swaps = 0
    remaining = right
    while remaining:
        low = remaining & -remaining
        swaps += (left >> low.bit_length()).bit_count()
        remaining ^= low
    swaps += (left & right).bit_count()
    return -1 if swaps & 1 else 1


def blade_mul(a: Blade, b: Blade) -> tuple[int, Blade]:
    """Canonical product of two blades.

    Returns:
        ``(sign, blade)`` with ``sign`` in {+1, -1}.

    Raises:
        DimensionMismatchError: If the blades live over different n.
    """
    if a.n != b.n:
        raise DimensionMismatchError(a.n, b.n)
    return mask_product_sign(a.mask, b.mask), Blade(a.mask ^ b.mask, a.n)


def all_blades(n: int) -> Iterator[Blade]:
    """All 2^n blades ordered by their index tuples (unit first)."""
    for mask in sorted(range(1 << n), key=mask_indices):
        yield Blade(mask, n)


def permutation_sign(sequence: Iterable[int]) -> int:
    """Parity sign of the permutation sorting a sequence of distinct integers."""
    items = list(sequence)
    inversions = sum(1 for i in range(len(items)) for j in range(i + 1, len(items)) if items[i] > items[j])
    return -1 if inversions & 1 else 1
