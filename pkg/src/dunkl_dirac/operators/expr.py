"""Operator expression trees over spinor polynomials.

Operators are immutable trees of primitives (derivative, coordinate
multiplication, reflection, Clifford left multiplication, scalar multiple)
combined by sums and compositions. Composition follows function notation:
the rightmost factor acts first, so ``a @ b`` means "apply b, then a".

Key Features:
- Python operators: ``+``, ``-``, unary ``-``, ``c * op`` and ``a @ b``
- Lazy evaluation with ``op(p)`` or ``op.apply(p, cache)``
- ``Named`` nodes memoize images of single terms in an ``EvaluationCache``
- Canonical prefix rendering for failure reports
"""

from abc import ABC, abstractmethod
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from dunkl_dirac.algebra.blade import Blade
from dunkl_dirac.algebra.polynomial import SpinorPolynomial, TermKey
from dunkl_dirac.algebra.rational import RationalLike, format_rational


class EvaluationCache:
    """Memo of single-term images under named operators.

    Linearity makes the image of a polynomial the weighted sum of the images
    of its terms, so each (label, term) pair is computed once. A cache is tied
    to one parameter set; labels must be unique within it.
    """

    def __init__(self) -> None:
        self._images: dict[tuple[str, TermKey], SpinorPolynomial] = {}
        self.hits = 0
        self.misses = 0

    def image(self, label: str, key: TermKey, compute: Callable[[], SpinorPolynomial]) -> SpinorPolynomial:
        entry = (label, key)
        cached = self._images.get(entry)
        if cached is not None:
            self.hits += 1
            return cached
        self.misses += 1
        value = compute()
        self._images[entry] = value
        return value

    def clear(self) -> None:
        self._images.clear()
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._images)


class OperatorExpr(ABC):
    """Linear operator on P(R^n) (x) Cl_n."""

    @abstractmethod
    def apply(self, p: SpinorPolynomial, cache: EvaluationCache | None = None) -> SpinorPolynomial:
        """Evaluate the operator on ``p``."""

    @abstractmethod
    def render(self) -> str:
        """Prefix-notation rendering."""

    def __call__(self, p: SpinorPolynomial, cache: EvaluationCache | None = None) -> SpinorPolynomial:
        return self.apply(p, cache)

    def __add__(self, other: OperatorExpr) -> OperatorExpr:
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return Sum.of(self, other)

    def __sub__(self, other: OperatorExpr) -> OperatorExpr:
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return Sum.of(self, scaled(-1, other))

    def __neg__(self) -> OperatorExpr:
        return scaled(-1, self)

    def __rmul__(self, factor: RationalLike) -> OperatorExpr:
        if isinstance(factor, Fraction | int):
            return scaled(factor, self)
        return NotImplemented

    def __matmul__(self, other: OperatorExpr) -> OperatorExpr:
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return Compose.of(self, other)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True, eq=True)
class Identity(OperatorExpr):
    def apply(self, p: SpinorPolynomial, cache: EvaluationCache | None = None) -> SpinorPolynomial:
        return p

    def render(self) -> str:
        return "id"


@dataclass(frozen=True, eq=True)
class Partial(OperatorExpr):
    index: int

    def apply(self, p: SpinorPolynomial, cache: EvaluationCache | None = None) -> SpinorPolynomial:
        return p.differentiate(self.index)

    def render(self) -> str:
        return f"d{self.index}"


@dataclass(frozen=True, eq=True)
class MulCoord(OperatorExpr):
    index: int

    def apply(self, p: SpinorPolynomial, cache: EvaluationCache | None = None) -> SpinorPolynomial:
        return p.mul_coordinate(self.index)

    def render(self) -> str:
        return f"x{self.index}"


@dataclass(frozen=True, eq=True)
class Reflect(OperatorExpr):
    index: int

    def apply(self, p: SpinorPolynomial, cache: EvaluationCache | None = None) -> SpinorPolynomial:
        return p.reflect(self.index)

    def render(self) -> str:
        return f"r{self.index}"


@dataclass(frozen=True, eq=True)
class ReflectionQuotient(OperatorExpr):
    """p -> (1 - r_i)p / x_i, with the difference taken before dividing."""

    index: int

    def apply(self, p: SpinorPolynomial, cache: EvaluationCache | None = None) -> SpinorPolynomial:
        return (p - p.reflect(self.index)).divide_coordinate(self.index)

    def render(self) -> str:
        return f"q{self.index}"


@dataclass(frozen=True, eq=True)
class ParityFlip(OperatorExpr):
    """Z_i: the reflection r_i together with e_i -> -e_i on the spinor factor."""

    index: int

    def apply(self, p: SpinorPolynomial, cache: EvaluationCache | None = None) -> SpinorPolynomial:
        return p.reflect(self.index).flip_generator(self.index)

    def render(self) -> str:
        return f"z{self.index}"


@dataclass(frozen=True, eq=True)
class CliffordLeft(OperatorExpr):
    blade: Blade

    def apply(self, p: SpinorPolynomial, cache: EvaluationCache | None = None) -> SpinorPolynomial:
        return p.clifford_left(self.blade)

    def render(self) -> str:
        return str(self.blade)


@dataclass(frozen=True, eq=True)
class ScalarMul(OperatorExpr):
    """c times the identity."""

    factor: Fraction

    def apply(self, p: SpinorPolynomial, cache: EvaluationCache | None = None) -> SpinorPolynomial:
        return p.scale(self.factor)

    def render(self) -> str:
        return f"(scale {format_rational(self.factor)})"


@dataclass(frozen=True, eq=True)
class Sum(OperatorExpr):
    terms: tuple[OperatorExpr, ...]

    @classmethod
    def of(cls, *operands: OperatorExpr) -> Sum:
        flat: list[OperatorExpr] = []
        for operand in operands:
            flat.extend(operand.terms if isinstance(operand, Sum) else (operand,))
        return cls(tuple(flat))

    def apply(self, p: SpinorPolynomial, cache: EvaluationCache | None = None) -> SpinorPolynomial:
        return SpinorPolynomial.linear_combination(p.n, ((1, term.apply(p, cache)) for term in self.terms))

    def render(self) -> str:
        if not self.terms:
            return "0"
        return "(+ " + " ".join(term.render() for term in self.terms) + ")"


@dataclass(frozen=True, eq=True)
class Compose(OperatorExpr):
    """Product of operators; the last factor acts first."""

    factors: tuple[OperatorExpr, ...]

    @classmethod
    def of(cls, *operands: OperatorExpr) -> Compose:
        flat: list[OperatorExpr] = []
        for operand in operands:
            flat.extend(operand.factors if isinstance(operand, Compose) else (operand,))
        return cls(tuple(flat))

    def apply(self, p: SpinorPolynomial, cache: EvaluationCache | None = None) -> SpinorPolynomial:
        for factor in reversed(self.factors):
            if not p:
                break
            p = factor.apply(p, cache)
        return p

    def render(self) -> str:
        if not self.factors:
            return "id"
        return "(* " + " ".join(factor.render() for factor in self.factors) + ")"


@dataclass(frozen=True, eq=True)
class Named(OperatorExpr):
    """A labelled subtree; its single-term images are memoized when a cache is given."""

    label: str
    inner: OperatorExpr

    def apply(self, p: SpinorPolynomial, cache: EvaluationCache | None = None) -> SpinorPolynomial:
        if cache is None:
            return self.inner.apply(p, None)
        n = p.n
        images = []
        for key, coeff in p.terms.items():
            image = cache.image(self.label, key, lambda key=key: self.inner.apply(SpinorPolynomial.basis_term(n, key), cache))
            images.append((coeff, image))
        return SpinorPolynomial.linear_combination(n, images)

    def render(self) -> str:
        return self.label


ZERO = Sum(())
IDENTITY = Identity()


def scaled(factor: RationalLike, op: OperatorExpr) -> OperatorExpr:
    """c * op as a composition with a scalar multiple."""
    c = Fraction(factor)
    if c == 1:
        return op
    if not c:
        return ZERO
    return Compose.of(ScalarMul(c), op)


def scalar(factor: RationalLike) -> OperatorExpr:
    return ScalarMul(Fraction(factor))


def commutator(a: OperatorExpr, b: OperatorExpr) -> OperatorExpr:
    """[a, b] = ab - ba."""
    return a @ b - b @ a


def anticommutator(a: OperatorExpr, b: OperatorExpr) -> OperatorExpr:
    """{a, b} = ab + ba."""
    return a @ b + b @ a


def compose_all(*factors: OperatorExpr) -> OperatorExpr:
    if not factors:
        return IDENTITY
    return Compose.of(*factors)


def sum_all(terms: list[OperatorExpr]) -> OperatorExpr:
    return Sum.of(*terms) if terms else ZERO
