"""Sparse Clifford-valued polynomials with exact rational coefficients.

A ``SpinorPolynomial`` is an element of P(R^n) (x) Cl_n stored as a map
(exponent tuple, blade mask) -> Fraction. Instances never store zeros and
are immutable after construction, so they hash and compare exactly.
"""

from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from types import MappingProxyType
from typing import TypeAlias

from dunkl_dirac.algebra.blade import Blade, all_blades, mask_indices, mask_product_sign, permutation_sign
from dunkl_dirac.algebra.parameters import Permutation, validate_permutation
from dunkl_dirac.algebra.rational import RationalLike, format_rational
from dunkl_dirac.exceptions import DimensionMismatchError, InexactDivisionError, NonHomogeneousError

Monomial: TypeAlias = tuple[int, ...]
TermKey: TypeAlias = tuple[Monomial, int]


def _accumulate(target: dict[TermKey, Fraction], key: TermKey, value: Fraction) -> None:
    total = target.get(key, 0) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


class SpinorPolynomial:
    """Element of P(R^n) (x) Cl_n with exact coefficients."""

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[tuple[Monomial, Blade | int], RationalLike] | None = None):
        if n < 1:
            raise ValueError(f"Dimension must be positive, got {n}")
        clean: dict[TermKey, Fraction] = {}
        for (exponents, blade), coeff in (terms or {}).items():
            mono = tuple(int(a) for a in exponents)
            if len(mono) != n or any(a < 0 for a in mono):
                raise DimensionMismatchError(n, len(mono))
            if isinstance(blade, Blade):
                if blade.n != n:
                    raise DimensionMismatchError(n, blade.n)
                mask = blade.mask
            else:
                mask = int(blade)
            if mask >> n:
                raise DimensionMismatchError(n, mask.bit_length())
            _accumulate(clean, (mono, mask), Fraction(coeff))
        self._n = n
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, n: int, terms: dict[TermKey, Fraction]) -> SpinorPolynomial:
        obj = cls.__new__(cls)
        obj._n = n
        obj._terms = terms
        obj._hash = None
        return obj

    # Constructors

    @classmethod
    def zero(cls, n: int) -> SpinorPolynomial:
        return cls._wrap(n, {})

    @classmethod
    def constant(cls, n: int, value: RationalLike = 1, blade: Blade | None = None) -> SpinorPolynomial:
        return cls.monomial(n, (0,) * n, blade, value)

    @classmethod
    def monomial(
        cls,
        n: int,
        exponents: Iterable[int],
        blade: Blade | None = None,
        coeff: RationalLike = 1,
    ) -> SpinorPolynomial:
        return cls(n, {(tuple(exponents), blade if blade is not None else 0): coeff})

    @classmethod
    def coordinate(cls, n: int, i: int) -> SpinorPolynomial:
        """The scalar polynomial x_i."""
        if not 1 <= i <= n:
            raise DimensionMismatchError(n, i)
        exponents = [0] * n
        exponents[i - 1] = 1
        return cls._wrap(n, {(tuple(exponents), 0): Fraction(1)})

    @classmethod
    def from_blade(cls, blade: Blade) -> SpinorPolynomial:
        return cls._wrap(blade.n, {((0,) * blade.n, blade.mask): Fraction(1)})

    @classmethod
    def basis_term(cls, n: int, key: TermKey) -> SpinorPolynomial:
        """The single term x^mono (x) e_mask with coefficient 1."""
        return cls._wrap(n, {key: Fraction(1)})

    @classmethod
    def linear_combination(cls, n: int, pairs: Iterable[tuple[RationalLike, SpinorPolynomial]]) -> SpinorPolynomial:
        """Sum of coeff * poly over the pairs, accumulated in one dictionary."""
        result: dict[TermKey, Fraction] = {}
        for coeff, poly in pairs:
            if poly._n != n:
                raise DimensionMismatchError(n, poly._n)
            factor = Fraction(coeff)
            if not factor:
                continue
            for key, value in poly._terms.items():
                _accumulate(result, key, factor * value)
        return cls._wrap(n, result)

    # Accessors

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Mapping[TermKey, Fraction]:
        """Read-only view keyed by (exponents, blade mask)."""
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Blade, Fraction]]:
        """Terms in canonical order: by exponents, then blade indices."""
        for mono, mask in sorted(self._terms, key=lambda key: (key[0], mask_indices(key[1]))):
            yield mono, Blade(mask, self._n), self._terms[(mono, mask)]

    def coefficient(self, exponents: Iterable[int], blade: Blade | None = None) -> Fraction:
        mask = blade.mask if blade is not None else 0
        return self._terms.get((tuple(exponents), mask), Fraction(0))

    def degrees(self) -> frozenset[int]:
        return frozenset(sum(mono) for mono, _ in self._terms)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int | None:
        """Total degree of a homogeneous polynomial; ``None`` for zero.

        Raises:
            NonHomogeneousError: If several degrees are present.
        """
        found = self.degrees()
        if not found:
            return None
        if len(found) > 1:
            raise NonHomogeneousError(found)
        return next(iter(found))

    def depends_on(self, i: int) -> bool:
        return any(mono[i - 1] for mono, _ in self._terms)

    def is_scalar(self) -> bool:
        return all(mask == 0 for _, mask in self._terms)

    def blades(self) -> frozenset[int]:
        return frozenset(mask for _, mask in self._terms)

    # Arithmetic

    def _check_same(self, other: SpinorPolynomial) -> None:
        if other._n != self._n:
            raise DimensionMismatchError(self._n, other._n)

    def __add__(self, other: SpinorPolynomial) -> SpinorPolynomial:
        if not isinstance(other, SpinorPolynomial):
            return NotImplemented
        self._check_same(other)
        result = dict(self._terms)
        for key, value in other._terms.items():
            _accumulate(result, key, value)
        return SpinorPolynomial._wrap(self._n, result)

    def __sub__(self, other: SpinorPolynomial) -> SpinorPolynomial:
        if not isinstance(other, SpinorPolynomial):
            return NotImplemented
        self._check_same(other)
        result = dict(self._terms)
        for key, value in other._terms.items():
            _accumulate(result, key, -value)
        return SpinorPolynomial._wrap(self._n, result)

    def __neg__(self) -> SpinorPolynomial:
        return SpinorPolynomial._wrap(self._n, {key: -value for key, value in self._terms.items()})

    def scale(self, factor: RationalLike) -> SpinorPolynomial:
        c = Fraction(factor)
        if not c:
            return SpinorPolynomial.zero(self._n)
        return SpinorPolynomial._wrap(self._n, {key: c * value for key, value in self._terms.items()})

    def __mul__(self, other: SpinorPolynomial | RationalLike) -> SpinorPolynomial:
        if isinstance(other, SpinorPolynomial):
            return self.clifford_product(other)
        if isinstance(other, Fraction | int):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: RationalLike) -> SpinorPolynomial:
        if isinstance(other, Fraction | int):
            return self.scale(other)
        return NotImplemented

    def clifford_product(self, other: SpinorPolynomial) -> SpinorPolynomial:
        """Full product in P(R^n) (x) Cl_n; coordinates commute with generators."""
        self._check_same(other)
        result: dict[TermKey, Fraction] = {}
        for (mono_a, mask_a), coeff_a in self._terms.items():
            for (mono_b, mask_b), coeff_b in other._terms.items():
                mono = tuple(a + b for a, b in zip(mono_a, mono_b, strict=True))
                sign = mask_product_sign(mask_a, mask_b)
                _accumulate(result, (mono, mask_a ^ mask_b), sign * coeff_a * coeff_b)
        return SpinorPolynomial._wrap(self._n, result)

    def mul_coordinate(self, i: int) -> SpinorPolynomial:
        """Multiply by x_i."""
        if not 1 <= i <= self._n:
            raise DimensionMismatchError(self._n, i)
        pos = i - 1
        result = {}
        for (mono, mask), value in self._terms.items():
            shifted = mono[:pos] + (mono[pos] + 1,) + mono[pos + 1 :]
            result[(shifted, mask)] = value
        return SpinorPolynomial._wrap(self._n, result)

    def clifford_left(self, blade: Blade) -> SpinorPolynomial:
        """Left multiplication by a blade."""
        if blade.n != self._n:
            raise DimensionMismatchError(self._n, blade.n)
        b = blade.mask
        return SpinorPolynomial._wrap(
            self._n,
            {(mono, b ^ mask): mask_product_sign(b, mask) * value for (mono, mask), value in self._terms.items()},
        )

    def clifford_right(self, blade: Blade) -> SpinorPolynomial:
        """Right multiplication by a blade; commutes with every operator built from left multiplications."""
        if blade.n != self._n:
            raise DimensionMismatchError(self._n, blade.n)
        b = blade.mask
        return SpinorPolynomial._wrap(
            self._n,
            {(mono, mask ^ b): mask_product_sign(mask, b) * value for (mono, mask), value in self._terms.items()},
        )

    def reflect(self, i: int) -> SpinorPolynomial:
        """Apply r_i: x_i -> -x_i."""
        if not 1 <= i <= self._n:
            raise DimensionMismatchError(self._n, i)
        pos = i - 1
        return SpinorPolynomial._wrap(
            self._n,
            {key: (-value if key[0][pos] & 1 else value) for key, value in self._terms.items()},
        )

    def flip_generator(self, i: int) -> SpinorPolynomial:
        """Apply the Clifford automorphism e_i -> -e_i."""
        if not 1 <= i <= self._n:
            raise DimensionMismatchError(self._n, i)
        bit = 1 << (i - 1)
        return SpinorPolynomial._wrap(self._n, {key: (-value if key[1] & bit else value) for key, value in self._terms.items()})

    def differentiate(self, i: int) -> SpinorPolynomial:
        """Apply the partial derivative with respect to x_i."""
        if not 1 <= i <= self._n:
            raise DimensionMismatchError(self._n, i)
        pos = i - 1
        result = {}
        for (mono, mask), value in self._terms.items():
            a = mono[pos]
            if a:
                result[(mono[:pos] + (a - 1,) + mono[pos + 1 :], mask)] = a * value
        return SpinorPolynomial._wrap(self._n, result)

    def divide_coordinate(self, i: int) -> SpinorPolynomial:
        """Exact division by x_i.

        Raises:
            InexactDivisionError: If some term does not contain x_i.
        """
        if not 1 <= i <= self._n:
            raise DimensionMismatchError(self._n, i)
        pos = i - 1
        result = {}
        for (mono, mask), value in self._terms.items():
            if not mono[pos]:
                raise InexactDivisionError(i, mono)
            result[(mono[:pos] + (mono[pos] - 1,) + mono[pos + 1 :], mask)] = value
        return SpinorPolynomial._wrap(self._n, result)

    def restrict_zero(self, i: int) -> SpinorPolynomial:
        """Set x_i = 0."""
        if not 1 <= i <= self._n:
            raise DimensionMismatchError(self._n, i)
        pos = i - 1
        return SpinorPolynomial._wrap(self._n, {key: value for key, value in self._terms.items() if not key[0][pos]})

    def graded_part(self, k: int) -> SpinorPolynomial:
        """The terms of total degree k."""
        return SpinorPolynomial._wrap(self._n, {key: value for key, value in self._terms.items() if sum(key[0]) == k})

    def permute(self, perm: Permutation) -> SpinorPolynomial:
        """Relabel x_i -> x_{pi(i)} and e_i -> e_{pi(i)} simultaneously, with reordering signs."""
        perm = validate_permutation(perm)
        if len(perm) != self._n:
            raise DimensionMismatchError(self._n, len(perm))
        result: dict[TermKey, Fraction] = {}
        for (mono, mask), value in self._terms.items():
            new_mono = [0] * self._n
            for i, a in enumerate(mono):
                new_mono[perm[i] - 1] = a
            images = [perm[i - 1] for i in mask_indices(mask)]
            new_mask = 0
            for image in images:
                new_mask |= 1 << (image - 1)
            _accumulate(result, (tuple(new_mono), new_mask), permutation_sign(images) * value)
        return SpinorPolynomial._wrap(self._n, result)

    # Comparison and rendering

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpinorPolynomial):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def serialize(self) -> str:
        """Canonical text: one ``a1,...,an | i1 i2 | num/den`` line per term."""
        lines = []
        for mono, blade, value in self.items():
            exponents = ",".join(str(a) for a in mono)
            indices = " ".join(str(i) for i in blade.indices)
            lines.append(f"{exponents} | {indices} | {format_rational(value)}")
        return "\n".join(lines)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, blade, value in self.items():
            factors = [f"x{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(mono) if a]
            parts.append(" ".join([format_rational(value), *factors, str(blade)]))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SpinorPolynomial(n={self._n}, {self})"


def _check_index(p: SpinorPolynomial, i: int) -> None:
    if not 1 <= i <= p.n:
        raise DimensionMismatchError(p.n, i)


def poly_add(p: SpinorPolynomial, q: SpinorPolynomial) -> SpinorPolynomial:
    return p + q


def poly_scale(p: SpinorPolynomial, factor: RationalLike) -> SpinorPolynomial:
    return p.scale(factor)


def poly_mul_coordinate(p: SpinorPolynomial, i: int) -> SpinorPolynomial:
    _check_index(p, i)
    return p.mul_coordinate(i)


def clifford_left(p: SpinorPolynomial, blade: Blade) -> SpinorPolynomial:
    return p.clifford_left(blade)


def permute_polynomial(p: SpinorPolynomial, perm: Permutation) -> SpinorPolynomial:
    return p.permute(perm)


def monomials_of_degree(n: int, k: int) -> list[Monomial]:
    """Exponent tuples of total degree k in lexicographic order."""
    if k < 0:
        return []
    found = []
    for combo in combinations_with_replacement(range(n), k):
        exponents = [0] * n
        for index in combo:
            exponents[index] += 1
        found.append(tuple(exponents))
    return sorted(found)


def basis_of_graded_component(n: int, k: int) -> list[SpinorPolynomial]:
    """Every monomial (x) blade of degree k; C(n+k-1, k) * 2^n elements."""
    blades = list(all_blades(n))
    return [
        SpinorPolynomial._wrap(n, {(mono, blade.mask): Fraction(1)}) for mono in monomials_of_degree(n, k) for blade in blades
    ]


def scalar_basis_of_graded_component(n: int, k: int) -> list[SpinorPolynomial]:
    """Unit-blade monomials of degree k; the test space of the scalar realization."""
    return [SpinorPolynomial._wrap(n, {(mono, 0): Fraction(1)}) for mono in monomials_of_degree(n, k)]


def graded_dimension(n: int, k: int) -> int:
    return comb(n + k - 1, k) * 2**n


def clifford_vector(n: int, indices: Iterable[int]) -> SpinorPolynomial:
    """The vector variable x_A = sum of e_i x_i over A."""
    terms: dict[TermKey, Fraction] = {}
    for i in sorted(set(indices)):
        exponents = [0] * n
        exponents[i - 1] = 1
        terms[(tuple(exponents), 1 << (i - 1))] = Fraction(1)
    return SpinorPolynomial._wrap(n, terms)


def squared_norm(n: int, indices: Iterable[int]) -> SpinorPolynomial:
    """The scalar polynomial ||x_A||^2."""
    terms: dict[TermKey, Fraction] = {}
    for i in sorted(set(indices)):
        exponents = [0] * n
        exponents[i - 1] = 2
        terms[(tuple(exponents), 0)] = Fraction(1)
    return SpinorPolynomial._wrap(n, terms)


def power(p: SpinorPolynomial, exponent: int) -> SpinorPolynomial:
    result = SpinorPolynomial.constant(p.n)
    for _ in range(exponent):
        result = result * p
    return result
