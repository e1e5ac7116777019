"""Tests for operator expression trees."""

from fractions import Fraction

from dunkl_dirac.algebra.blade import Blade
from dunkl_dirac.algebra.polynomial import SpinorPolynomial
from dunkl_dirac.operators.expr import (
    IDENTITY,
    ZERO,
    CliffordLeft,
    Compose,
    EvaluationCache,
    MulCoord,
    Named,
    ParityFlip,
    Partial,
    Reflect,
    ReflectionQuotient,
    anticommutator,
    commutator,
    compose_all,
    scaled,
)

N = 3


def x(i: int) -> SpinorPolynomial:
    return SpinorPolynomial.coordinate(N, i)


class TestPrimitives:
    def test_reflection_quotient(self):
        """(1 - r_1) x1^3 / x1 = 2 x1^2 and even powers vanish."""
        q = ReflectionQuotient(1)
        assert q(x(1) * x(1) * x(1)) == (x(1) * x(1)).scale(2)
        assert q(x(1) * x(1)) == SpinorPolynomial.zero(N)

    def test_parity_flip_acts_on_both_factors(self):
        """Z_i flips both x_i and e_i."""
        p = x(1).clifford_left(Blade.generator(N, 1))
        assert ParityFlip(1)(p) == p

    def test_clifford_left(self):
        """e1 e1 = -1 under left multiplication."""
        e1 = Blade.generator(N, 1)
        assert CliffordLeft(e1)(SpinorPolynomial.from_blade(e1)) == SpinorPolynomial.constant(N, -1)


class TestComposition:
    def test_rightmost_factor_acts_first(self):
        """d1 x1 - x1 d1 = 1."""
        op = commutator(Partial(1), MulCoord(1))
        p = SpinorPolynomial.monomial(N, (2, 1, 0))
        assert op(p) == p

    def test_anticommutator_of_reflection_and_coordinate(self):
        """{r_1, x_1} vanishes."""
        assert anticommutator(Reflect(1), MulCoord(1))(x(2)) == SpinorPolynomial.zero(N)

    def test_sums_and_compositions_flatten(self):
        """Nested sums and compositions are flattened."""
        op = (Partial(1) + Partial(2)) + MulCoord(3)
        assert len(op.terms) == 3
        composed = (Partial(1) @ Partial(2)) @ MulCoord(3)
        assert isinstance(composed, Compose)
        assert len(composed.factors) == 3

    def test_scalar_multiples(self):
        """Scaling by 1 is a no-op and by 0 gives zero."""
        assert scaled(1, Partial(1)) == Partial(1)
        assert scaled(0, Partial(1)) == ZERO
        assert (Fraction(1, 2) * MulCoord(1))(x(2)) == (x(1) * x(2)).scale(Fraction(1, 2))

    def test_subtraction_and_negation(self):
        """A - A is zero and -1 negates."""
        assert (MulCoord(1) - MulCoord(1))(x(2)) == SpinorPolynomial.zero(N)
        assert (-IDENTITY)(x(2)) == -x(2)

    def test_compose_all_of_nothing_is_identity(self):
        """An empty composition is the identity."""
        assert compose_all() is IDENTITY


class TestRender:
    def test_prefix_notation(self):
        """Expressions render in prefix form."""
        assert (Partial(1) + MulCoord(2)).render() == "(+ d1 x2)"
        assert (Partial(1) @ Reflect(2)).render() == "(* d1 r2)"
        assert scaled(2, Partial(1)).render() == "(* (scale 2/1) d1)"
        assert ZERO.render() == "0"
        assert str(CliffordLeft(Blade.from_indices(N, [1, 3]))) == "e1e3"

    def test_named_renders_label(self):
        """Named operators render as their label."""
        assert Named("D{1,2}", Partial(1)).render() == "D{1,2}"


class TestEvaluationCache:
    def test_named_images_memoized(self):
        """Images under a named operator are cached."""
        cache = EvaluationCache()
        op = Named("d1", Partial(1))
        p = x(1) * x(2) + x(1)
        first = op.apply(p, cache)
        second = op.apply(p, cache)
        assert first == second == x(2) + SpinorPolynomial.constant(N)
        assert cache.misses == 2
        assert cache.hits == 2
        assert len(cache) == 2

    def test_clear(self):
        """Clearing the cache drops stored images."""
        cache = EvaluationCache()
        Named("x1", MulCoord(1)).apply(x(2), cache)
        cache.clear()
        assert len(cache) == 0
        assert cache.misses == 0

    def test_without_cache(self):
        """Named operators also apply without a cache."""
        assert Named("x1", MulCoord(1)).apply(x(2)) == x(1) * x(2)
