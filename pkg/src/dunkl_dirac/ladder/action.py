"""Action of the ladder operators on the sector basis.

K_l^(+-) maps the sector function of label j to a multiple of the sector
function of the target label, or to zero when the target leaves the simplex.
The multiple is found by projecting onto the target with the sphere pairing
and then confirmed by exact reconstruction.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from dunkl_dirac.algebra.blade import Blade
from dunkl_dirac.algebra.parameters import ParameterSet
from dunkl_dirac.algebra.polynomial import SpinorPolynomial
from dunkl_dirac.algebra.rational import format_rational
from dunkl_dirac.monogenics.ck import sector_psi
from dunkl_dirac.monogenics.inner_product import inner_product
from dunkl_dirac.monogenics.labels import BasisLabel, MultiIndex, enumerate_multi_indices
from dunkl_dirac.operators.oracle import EqualityResult, check_parameters, polynomials_equal, relation_row
from dunkl_dirac.operators.realization import get_realization
from dunkl_dirac.verification.models import RelationCheck, Witness

from .operators import LadderStep, all_steps, ladder_K
from .spectrum import alpha_coeff, target_label

CLIFFORD = "clifford"


@dataclass(frozen=True)
class LadderAction:
    """K Psi_j = coefficient * Psi_target; target None means the image is zero."""

    step: LadderStep
    source: MultiIndex
    target: MultiIndex | None
    coefficient: Fraction


def ladder_image(step: LadderStep, label: BasisLabel, params: ParameterSet) -> SpinorPolynomial:
    clifford = get_realization(CLIFFORD, params)
    return ladder_K(clifford, step).apply(sector_psi(label, params), clifford.cache)


def ladder_coefficient(step: LadderStep, label: BasisLabel, params: ParameterSet) -> LadderAction:
    """Gram projection of K Psi_j onto the predicted target."""
    target = target_label(step, label.multi_index)
    if target is None:
        return LadderAction(step, label.multi_index, None, Fraction(0))
    image = ladder_image(step, label, params)
    psi_target = sector_psi(BasisLabel(target, label.blade), params)
    coefficient = inner_product(psi_target, image, params) / inner_product(psi_target, psi_target, params)
    return LadderAction(step, label.multi_index, target, coefficient)


def _parameters(params: ParameterSet, step: LadderStep, label: BasisLabel):
    return check_parameters(params, None, None, label.k, step=str(step), label=str(label))


def verify_ladder_action(step: LadderStep, label: BasisLabel, params: ParameterSet) -> RelationCheck:
    """K Psi_j is exactly c Psi_target, or zero when the target is outside the simplex."""
    action = ladder_coefficient(step, label, params)
    image = ladder_image(step, label, params)
    element = sector_psi(label, params)
    if action.target is None:
        expected = SpinorPolynomial.zero(params.n)
    else:
        expected = sector_psi(BasisLabel(action.target, label.blade), params).scale(action.coefficient)
    details = {
        "target": str(action.target) if action.target is not None else None,
        "coefficient": format_rational(action.coefficient),
    }
    result = polynomials_equal(image, expected, element)
    return relation_row(f"{step} action", CLIFFORD, _parameters(params, step, label), result, details=details)


def verify_spectral_value(step: LadderStep, label: BasisLabel, params: ParameterSet) -> RelationCheck:
    """K^2 Psi_j = alpha(j) Psi_j, and c(j -> j') c(j' -> j) = alpha(j)."""
    clifford = get_realization(CLIFFORD, params)
    k_op = ladder_K(clifford, step)
    psi = sector_psi(label, params)
    alpha = alpha_coeff(step, label.multi_index, params)
    square = k_op.apply(k_op.apply(psi, clifford.cache), clifford.cache)
    parameters = _parameters(params, step, label)
    details = {"alpha": format_rational(alpha)}
    result = polynomials_equal(square, psi.scale(alpha), psi)
    if not result:
        return relation_row(f"{step}^2 on Psi", CLIFFORD, parameters, result, details=details)

    forward = ladder_coefficient(step, label, params)
    if forward.target is None:
        return relation_row(f"{step}^2 on Psi", CLIFFORD, parameters, result, details=details)
    backward = ladder_coefficient(step, BasisLabel(forward.target, label.blade), params)
    product = forward.coefficient * backward.coefficient
    details["coefficient_product"] = format_rational(product)
    if backward.target == label.multi_index and product == alpha:
        return relation_row(f"{step}^2 on Psi", CLIFFORD, parameters, EqualityResult(True, 2), details=details)
    witness = Witness(basis_element=str(label), lhs=format_rational(product), rhs=format_rational(alpha), degree=label.k)
    message = "round-trip coefficients"
    return RelationCheck.failed(f"{step}^2 on Psi", CLIFFORD, parameters, witness, message=message, details=details)


def ladder_graph(params: ParameterSet, k: int, blade: Blade) -> dict[MultiIndex, set[MultiIndex]]:
    """Directed edges j -> j' for every ladder operator with a nonzero coefficient."""
    graph: dict[MultiIndex, set[MultiIndex]] = {index: set() for index in enumerate_multi_indices(params.n, k)}
    for index in graph:
        label = BasisLabel(index, blade)
        for step in all_steps(params.n):
            action = ladder_coefficient(step, label, params)
            if action.target is not None and action.coefficient:
                graph[index].add(action.target)
    return graph


def _reachable(graph: dict[MultiIndex, set[MultiIndex]], start: MultiIndex) -> set[MultiIndex]:
    seen = {start}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        for neighbour in graph[node] - seen:
            seen.add(neighbour)
            queue.append(neighbour)
    return seen


def verify_irreducibility(params: ParameterSet, k: int, blade: Blade) -> RelationCheck:
    """The ladder graph on the labels of degree k is strongly connected."""
    graph = ladder_graph(params, k, blade)
    nodes = sorted(graph)
    reverse: dict[MultiIndex, set[MultiIndex]] = {index: set() for index in graph}
    for source, targets in graph.items():
        for target in targets:
            reverse[target].add(source)
    forward, backward = _reachable(graph, nodes[0]), _reachable(reverse, nodes[0])
    parameters = check_parameters(params, None, None, k, blade=blade.label)
    details = {"labels": len(nodes), "edges": sum(len(targets) for targets in graph.values())}
    missing = sorted(set(nodes) - (forward & backward))
    if not missing:
        return RelationCheck.passed("ladder irreducibility", CLIFFORD, parameters, details=details)
    logger.warning("Ladder graph n={} k={} is not strongly connected; {} labels cut off", params.n, k, len(missing))
    witness = Witness(
        basis_element=f"j={nodes[0]}",
        lhs=" ".join(str(index) for index in sorted(forward & backward)),
        rhs=" ".join(str(index) for index in nodes),
        degree=k,
    )
    return RelationCheck.failed("ladder irreducibility", CLIFFORD, parameters, witness, details=details)


def ladder_actions(params: ParameterSet, k: int, blade: Blade) -> list[LadderAction]:
    """Every (step, label) action at degree k, in step then label order."""
    return [
        ladder_coefficient(step, BasisLabel(index, blade), params)
        for step in all_steps(params.n)
        for index in enumerate_multi_indices(params.n, k)
    ]
