"""Dunkl parameter sets and index permutations.

A permutation of [n] is a tuple ``perm`` with ``perm[i - 1] = pi(i)``.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import TypeAlias

from dunkl_dirac.algebra.rational import RationalLike, format_rational, parse_rational
from dunkl_dirac.exceptions import DimensionMismatchError, InvalidConfigError

Permutation: TypeAlias = tuple[int, ...]
SubsetLabel: TypeAlias = frozenset[int]


def subset(indices: Iterable[int]) -> SubsetLabel:
    return frozenset(indices)


def full_set(n: int) -> SubsetLabel:
    return frozenset(range(1, n + 1))


def prefix(m: int) -> SubsetLabel:
    """The subset [m] = {1, ..., m}."""
    return frozenset(range(1, m + 1))


def subset_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def all_subsets(n: int) -> list[SubsetLabel]:
    """Every subset of [n], ordered by bitmask."""
    return [frozenset(i + 1 for i in range(n) if mask >> i & 1) for mask in range(1 << n)]


def subset_text(indices: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(indices)) + "}"


def identity_permutation(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def cyclic_permutation(n: int) -> Permutation:
    """The cycle (1 2 ... n): i -> i + 1, n -> 1."""
    return tuple(list(range(2, n + 1)) + [1])


def validate_permutation(perm: Sequence[int]) -> Permutation:
    result = tuple(perm)
    if sorted(result) != list(range(1, len(result) + 1)):
        raise InvalidConfigError("permutation", result, "must be a permutation of 1..n")
    return result


def permute_subset(perm: Permutation, indices: Iterable[int]) -> SubsetLabel:
    return frozenset(perm[i - 1] for i in indices)


def invert_permutation(perm: Permutation) -> Permutation:
    inverse = [0] * len(perm)
    for i, image in enumerate(perm, start=1):
        inverse[image - 1] = i
    return tuple(inverse)


@dataclass(frozen=True)
class ParameterSet:
    """The Dunkl parameters mu_1..mu_n, all strictly positive rationals."""

    mu: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = tuple(Fraction(m) for m in self.mu)
        if not values:
            raise InvalidConfigError("mu", values, "at least one parameter is required")
        for value in values:
            if value <= 0:
                raise InvalidConfigError("mu", format_rational(value), "Dunkl parameters must be positive")
        object.__setattr__(self, "mu", values)

    @classmethod
    def of(cls, *mu: RationalLike | str) -> ParameterSet:
        return cls(tuple(parse_rational(m) if isinstance(m, str) else Fraction(m) for m in mu))

    @classmethod
    def parse(cls, text: str) -> ParameterSet:
        """Parse a comma separated list such as ``1/2,1/3,1/4``."""
        return cls(tuple(parse_rational(part) for part in text.split(",")))

    @property
    def n(self) -> int:
        return len(self.mu)

    def mu_of(self, i: int) -> Fraction:
        if not 1 <= i <= self.n:
            raise DimensionMismatchError(self.n, i)
        return self.mu[i - 1]

    def gamma(self, indices: Iterable[int]) -> Fraction:
        """gamma_A = |A|/2 + sum of mu_i over A."""
        members = frozenset(indices)
        return Fraction(len(members), 2) + sum((self.mu_of(i) for i in members), Fraction(0))

    def pushforward(self, perm: Permutation) -> ParameterSet:
        """Parameters nu with nu_{pi(i)} = mu_i."""
        self._check_permutation(perm)
        nu = [Fraction(0)] * self.n
        for i, image in enumerate(perm, start=1):
            nu[image - 1] = self.mu[i - 1]
        return ParameterSet(tuple(nu))

    def pullback(self, perm: Permutation) -> ParameterSet:
        """Parameters nu with nu_i = mu_{pi(i)}; pushing nu forward along pi gives back mu."""
        self._check_permutation(perm)
        return ParameterSet(tuple(self.mu[image - 1] for image in perm))

    def as_strings(self) -> list[str]:
        return [format_rational(m) for m in self.mu]

    def _check_permutation(self, perm: Permutation) -> None:
        if len(perm) != self.n:
            raise DimensionMismatchError(self.n, len(perm))
        validate_permutation(perm)

    def __str__(self) -> str:
        return "(" + ", ".join(self.as_strings()) + ")"
