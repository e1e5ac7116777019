"""Common exceptions for the Dunkl-Dirac engine.

Every exception keeps the offending values as attributes so that check rows
can report them without parsing the message.
"""

from collections.abc import Sequence
from typing import Any


class DimensionMismatchError(ValueError):
    """Raised when two objects live over different dimensions n."""

    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Dimension mismatch: expected n={expected}, got n={actual}")


class InexactDivisionError(ArithmeticError):
    """Raised when a coordinate division leaves a remainder.

    Signals an implementation bug: the reflection difference (1 - r_i)p is
    always divisible by x_i.
    """

    def __init__(self, index: int, exponents: Sequence[int]):
        self.index = index
        self.exponents = tuple(exponents)
        super().__init__(f"Inexact division by x{index} of monomial with exponents {self.exponents}")


class ForbiddenVariableError(ValueError):
    """Raised when a CK input depends on a variable it must not contain."""

    def __init__(self, variable: int, limit: int):
        self.variable = variable
        self.limit = limit
        super().__init__(f"Input depends on x{variable}; only x1..x{limit - 1} are allowed")


class NonHomogeneousError(ValueError):
    """Raised when a homogeneous polynomial is required."""

    def __init__(self, degrees: Sequence[int]):
        self.degrees = tuple(sorted(degrees))
        super().__init__(f"Polynomial is not homogeneous, degrees present: {self.degrees}")


class DegreeMismatchError(ValueError):
    """Raised when the sphere pairing is asked for polynomials of different degrees."""

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"Degree mismatch in inner product: {left} != {right}")


class InvalidMultiIndexError(ValueError):
    """Raised for a multi-index that does not label a monogenic basis function."""

    def __init__(self, entries: Sequence[int], n: int, k: int):
        self.entries = tuple(entries)
        self.n = n
        self.k = k
        super().__init__(f"Invalid multi-index {self.entries} for n={n}, k={k}")


class ZeroPivotError(ZeroDivisionError):
    """Raised when the generating-set recursion pivots on a vanishing parameter."""

    def __init__(self, pivot: int):
        self.pivot = pivot
        super().__init__(f"Pivot parameter mu_{pivot} is zero")


class JacobiParameterError(ValueError):
    """Raised when a Jacobi series denominator vanishes."""

    def __init__(self, m: int, alpha: Any, beta: Any):
        self.m = m
        self.alpha = alpha
        self.beta = beta
        super().__init__(f"Jacobi polynomial P_{m}^({alpha}, {beta}) has a vanishing Pochhammer denominator")


class InvalidConfigError(ValueError):
    """Raised when a run configuration or parameter set is invalid."""

    def __init__(self, field: str, value: Any, reason: str):
        self.field = field
        self.value = value
        self.reason = reason
        super().__init__(f"Invalid {field}={value!r}: {reason}")
