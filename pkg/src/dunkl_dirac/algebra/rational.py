"""Exact rational helpers on top of ``fractions.Fraction``."""

from fractions import Fraction
from math import factorial
from typing import TypeAlias

Rational: TypeAlias = Fraction
RationalLike: TypeAlias = Fraction | int


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or an integer literal into a Fraction.

    Raises:
        ValueError: If the text is not a rational literal.
    """
    value = text.strip()
    if not value:
        raise ValueError("Empty rational literal")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Not a rational literal: {text!r}") from e


def format_rational(value: RationalLike) -> str:
    """Render a rational as ``num/den``, always with an explicit denominator."""
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def pochhammer(a: RationalLike, m: int) -> Fraction:
    """Rising factorial (a)_m = a(a+1)...(a+m-1); (a)_0 = 1."""
    if m < 0:
        raise ValueError(f"Pochhammer length must be non-negative, got {m}")
    result = Fraction(1)
    base = Fraction(a)
    for i in range(m):
        result *= base + i
    return result


def falling_ratio(k: int, j: int) -> Fraction:
    """k!/(k-j)!, zero when j > k."""
    if j > k:
        return Fraction(0)
    return Fraction(factorial(k), factorial(k - j))
