"""Eigenvalue bookkeeping for the ladder operators.

On the basis function of multi-index j, K_l^(+-) squares to

    alpha = (L2 - L1 +- mu_{l+2} +- 1/2)(L2 + L1 +- mu_{l+2} -+ 1/2)
          * (L0 - L1 +- mu_{l+1} +- 1/2)(L0 + L1 +- mu_{l+1} -+ 1/2)

with L0, L1, L2 the eigenvalues of Gamma_[l], Gamma_[l+1], Gamma_[l+2].
The image of Psi_j is proportional to Psi_{j + h_l} when the sign is + and
|j_l| is odd or the sign is - and |j_l| is even, and to Psi_{j - h_l}
otherwise. alpha vanishes exactly when that target leaves the simplex.
"""

from fractions import Fraction

from dunkl_dirac.algebra.parameters import ParameterSet
from dunkl_dirac.algebra.rational import format_rational
from dunkl_dirac.monogenics.labels import MultiIndex
from dunkl_dirac.monogenics.spectral import gamma_eigenvalue
from dunkl_dirac.operators.oracle import check_parameters
from dunkl_dirac.verification.models import RelationCheck, Witness

from .operators import HALF, LadderStep


def lambda_value(index: MultiIndex, ell: int, params: ParameterSet) -> Fraction:
    """Eigenvalue of Gamma_[l] on Psi_j; l = 1 gives mu_1."""
    return gamma_eigenvalue(index, ell, params)


def alpha_coeff(step: LadderStep, index: MultiIndex, params: ParameterSet) -> Fraction:
    step.validate(params.n)
    ell, s = step.ell, step.sign
    l0 = lambda_value(index, ell, params)
    l1 = lambda_value(index, ell + 1, params)
    l2 = lambda_value(index, ell + 2, params)
    mu_outer, mu_inner = params.mu_of(ell + 2), params.mu_of(ell + 1)
    return (
        (l2 - l1 + s * mu_outer + s * HALF)
        * (l2 + l1 + s * mu_outer - s * HALF)
        * (l0 - l1 + s * mu_inner + s * HALF)
        * (l0 + l1 + s * mu_inner - s * HALF)
    )


def step_direction(step: LadderStep, index: MultiIndex) -> int:
    """+1 for j + h_l, -1 for j - h_l."""
    odd = index.prefix_sum(step.ell) % 2 == 1
    return 1 if (step.sign > 0) == odd else -1


def target_label(step: LadderStep, index: MultiIndex) -> MultiIndex | None:
    """The label K maps j to, or None when it leaves the simplex."""
    step.validate(index.n)
    return index.step(step.ell, step_direction(step, index))


def predicted_vanishing(step: LadderStep, index: MultiIndex) -> bool:
    """alpha = 0 when j_{l+1} = 0 or j_l = 0, with sign and |j_l| parity matched."""
    step.validate(index.n)
    even = index.prefix_sum(step.ell) % 2 == 0
    ell = step.ell
    if index[ell + 1] == 0 and (step.sign < 0) == even:
        return True
    return index[ell] == 0 and (step.sign > 0) == even


def verify_alpha_sign(step: LadderStep, index: MultiIndex, params: ParameterSet) -> RelationCheck:
    """alpha <= 0, and alpha = 0 exactly on the predicted vanishing set."""
    alpha = alpha_coeff(step, index, params)
    vanishes = predicted_vanishing(step, index)
    parameters = check_parameters(params, None, None, index.k, step=str(step), j=str(index))
    details = {"alpha": format_rational(alpha), "predicted_zero": vanishes}
    if alpha <= 0 and (alpha == 0) == vanishes:
        return RelationCheck.passed("alpha sign and zeros", "clifford", parameters, details=details)
    witness = Witness(
        basis_element=f"j={index}",
        lhs=format_rational(alpha),
        rhs="0/1" if vanishes else "< 0",
        degree=index.k,
    )
    return RelationCheck.failed("alpha sign and zeros", "clifford", parameters, witness, details=details)
