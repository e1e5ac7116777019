"""Equality of operators on finite-degree test spaces.

Two operators are compared by evaluating both on every basis element of
degree at most ``k_max``. The first difference is kept as a witness.
"""

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from typing import Any

from dunkl_dirac.algebra.parameters import ParameterSet
from dunkl_dirac.algebra.polynomial import SpinorPolynomial, basis_of_graded_component
from dunkl_dirac.verification.models import CheckParameters, RelationCheck, Witness

from .expr import EvaluationCache, OperatorExpr

BasisProvider = Callable[[int], list[SpinorPolynomial]]

RENDER_LIMIT = 2000


@dataclass(frozen=True)
class EqualityResult:
    """Outcome of an operator comparison; truthy when the operators agree."""

    equal: bool
    checked: int = 0
    degree: int | None = None
    element: SpinorPolynomial | None = None
    lhs: SpinorPolynomial | None = None
    rhs: SpinorPolynomial | None = None

    def __bool__(self) -> bool:
        return self.equal

    def to_witness(self) -> Witness | None:
        if self.equal or self.element is None:
            return None
        return Witness(
            basis_element=self.element.serialize(),
            lhs=self.lhs.serialize() if self.lhs is not None else "",
            rhs=self.rhs.serialize() if self.rhs is not None else "",
            degree=self.degree,
        )


def operators_equal_on_degree(
    op1: OperatorExpr,
    op2: OperatorExpr,
    n: int,
    k_max: int,
    basis: BasisProvider | None = None,
    cache: EvaluationCache | None = None,
) -> EqualityResult:
    """Compare two operators on the graded components of degree 0..k_max.

    Args:
        op1: Left-hand operator.
        op2: Right-hand operator.
        n: Dimension.
        k_max: Highest degree tested.
        basis: Test-space basis per degree; defaults to every monomial (x) blade.
        cache: Evaluation cache shared by the ``Named`` nodes of both sides.

    Returns:
        EqualityResult: Equal, or the first differing basis element in basis
            order together with both images.
    """
    provider = basis or (lambda k: basis_of_graded_component(n, k))
    checked = 0
    for k in range(k_max + 1):
        for element in provider(k):
            checked += 1
            lhs = op1.apply(element, cache)
            rhs = op2.apply(element, cache)
            if lhs != rhs:
                return EqualityResult(False, checked, k, element, lhs, rhs)
    return EqualityResult(True, checked)


def polynomials_equal(lhs: SpinorPolynomial, rhs: SpinorPolynomial, element: SpinorPolynomial) -> EqualityResult:
    """Wrap a single polynomial comparison as an ``EqualityResult``."""
    if lhs == rhs:
        return EqualityResult(True, 1)
    degree = element.degree if element.is_homogeneous() else None
    return EqualityResult(False, 1, degree, element, lhs, rhs)


def check_parameters(
    params: ParameterSet,
    subset_a: Iterable[int] | None = None,
    subset_b: Iterable[int] | None = None,
    k_max: int | None = None,
    **extra: Any,
) -> CheckParameters:
    return CheckParameters(
        n=params.n,
        mu=params.as_strings(),
        subset_a=sorted(subset_a) if subset_a is not None else None,
        subset_b=sorted(subset_b) if subset_b is not None else None,
        k_max=k_max,
        extra=extra,
    )


def _clip(text: str) -> str:
    return text if len(text) <= RENDER_LIMIT else text[:RENDER_LIMIT] + "..."


def relation_row(
    name: str,
    realization: str,
    parameters: CheckParameters,
    result: EqualityResult,
    lhs: OperatorExpr | None = None,
    rhs: OperatorExpr | None = None,
    details: dict[str, Any] | None = None,
) -> RelationCheck:
    """Turn an equality result into a report row.

    On failure the row carries the witness and the prefix renderings of both
    operators.
    """
    details = dict(details or {})
    details["test_elements"] = result.checked
    if result.equal:
        return RelationCheck.passed(name, realization, parameters, details=details)
    if lhs is not None:
        details["lhs_operator"] = _clip(lhs.render())
    if rhs is not None:
        details["rhs_operator"] = _clip(rhs.render())
    return RelationCheck.failed(
        name,
        realization,
        parameters,
        result.to_witness(),
        message=f"differs at degree {result.degree}",
        details=details,
    )
