"""Raising and lowering operators built from the Gamma operators.

For 1 <= l <= n-2,

    K_l^(+-) = (Gamma_{l+1,l+2} +- Gamma_{[l+2]-{l+1}})(Gamma_[l+1] -+ 1/2)
             - (Gamma_{l+2} +- Gamma_[l+2])(Gamma_[l] +- Gamma_{l+1})

split as A + B with A the first product and B the second, negated. K commutes
with Gamma_[j] for j != l+1 and anticommutes with Gamma_[l+1] up to +-K, and
its square factors into four commuting factors linear in the Gammas.
"""

from dataclasses import dataclass
from fractions import Fraction

from dunkl_dirac.algebra.blade import Blade
from dunkl_dirac.algebra.parameters import prefix
from dunkl_dirac.operators.expr import (
    ZERO,
    CliffordLeft,
    OperatorExpr,
    Reflect,
    anticommutator,
    commutator,
    compose_all,
    scalar,
    scaled,
)
from dunkl_dirac.operators.identities import check_identity
from dunkl_dirac.operators.oracle import check_parameters
from dunkl_dirac.operators.realization import Realization
from dunkl_dirac.verification.models import RelationCheck

HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class LadderStep:
    ell: int
    sign: int

    def __post_init__(self) -> None:
        if self.ell < 1:
            raise ValueError(f"Ladder index must be >= 1, got {self.ell}")
        if self.sign not in (1, -1):
            raise ValueError(f"Ladder sign must be +1 or -1, got {self.sign}")

    def validate(self, n: int) -> LadderStep:
        if self.ell > n - 2:
            raise ValueError(f"Ladder index must satisfy 1 <= l <= n-2, got l={self.ell} for n={n}")
        return self

    @property
    def symbol(self) -> str:
        return "+" if self.sign > 0 else "-"

    def __str__(self) -> str:
        return f"K{self.ell}{self.symbol}"


def all_steps(n: int) -> list[LadderStep]:
    return [LadderStep(ell, sign) for ell in range(1, n - 1) for sign in (1, -1)]


def ladder_parts(realization: Realization, step: LadderStep) -> tuple[OperatorExpr, OperatorExpr]:
    """(A, B) with K = A + B."""
    step.validate(realization.n)
    g = realization.gamma
    ell, s = step.ell, step.sign
    pair = g([ell + 1, ell + 2]) + scaled(s, g(prefix(ell + 2) - {ell + 1}))
    shifted = g(prefix(ell + 1)) - scalar(s * HALF)
    outer = g([ell + 2]) + scaled(s, g(prefix(ell + 2)))
    inner = g(prefix(ell)) + scaled(s, g([ell + 1]))
    return pair @ shifted, scaled(-1, outer @ inner)


def ladder_K(realization: Realization, step: LadderStep) -> OperatorExpr:
    a, b = ladder_parts(realization, step)
    return realization.named(str(step), lambda: a + b)


def square_factors(realization: Realization, step: LadderStep) -> list[OperatorExpr]:
    """The four commuting factors whose product is K^2."""
    step.validate(realization.n)
    g = realization.gamma
    ell, s = step.ell, step.sign
    top, middle, bottom = g(prefix(ell + 2)), g(prefix(ell + 1)), g(prefix(ell))
    outer, inner = g([ell + 2]), g([ell + 1])
    return [
        top - middle + scaled(s, outer) + scalar(s * HALF),
        top + middle + scaled(s, outer) - scalar(s * HALF),
        bottom - middle + scaled(s, inner) + scalar(s * HALF),
        bottom + middle + scaled(s, inner) - scalar(s * HALF),
    ]


def verify_covariance(realization: Realization, step: LadderStep, j: int, k_max: int) -> RelationCheck:
    """[K, Gamma_[j]] = 0 for j != l+1 and {K, Gamma_[l+1]} = +-K."""
    if not 1 <= j <= realization.n:
        raise ValueError(f"Covariance needs 1 <= j <= n, got j={j}")
    k_op = ladder_K(realization, step)
    gamma = realization.gamma(prefix(j))
    if j == step.ell + 1:
        lhs, rhs, name = anticommutator(k_op, gamma), scaled(step.sign, k_op), f"{{{step},Gamma_[{j}]}}=+-K"
    else:
        lhs, rhs, name = commutator(k_op, gamma), ZERO, f"[{step},Gamma_[{j}]]=0"
    return check_identity(realization, name, lhs, rhs, k_max, subset_a=prefix(j), step=str(step))


def verify_square_factorization(realization: Realization, step: LadderStep, k_max: int) -> RelationCheck:
    k_op = ladder_K(realization, step)
    product = compose_all(*square_factors(realization, step))
    return check_identity(realization, f"{step}^2 factorization", k_op @ k_op, product, k_max, step=str(step))


def extra_symmetry(realization: Realization) -> OperatorExpr:
    """P = e_1 e_2 r_1 r_2."""
    blade = Blade.from_indices(realization.n, (1, 2))
    return realization.named("P12", lambda: CliffordLeft(blade) @ Reflect(1) @ Reflect(2))


def verify_extra_symmetry(realization: Realization, k_max: int) -> RelationCheck:
    """P commutes with every Gamma_[j], 2 <= j <= n-1."""
    if realization.n < 3:
        raise ValueError(f"Extra symmetry check needs n >= 3, got n={realization.n}")
    p_op = extra_symmetry(realization)
    rows = []
    for j in range(2, realization.n):
        bracket = commutator(p_op, realization.gamma(prefix(j)))
        row = check_identity(realization, "[P,Gamma_[j]]=0", bracket, ZERO, k_max, subset_a=prefix(j))
        if row.is_failure:
            return row
        rows.append(row)
    checked = sum(row.details.get("test_elements", 0) for row in rows)
    parameters = check_parameters(realization.params, None, None, k_max)
    return RelationCheck.passed("[P,Gamma_[j]]=0", str(realization.kind), parameters, details={"test_elements": checked})
