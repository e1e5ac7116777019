"""Suite stage builders.

Each ``add_*_stage`` function adds one suite to a pipeline builder and fills it
with one ``OperationCheck`` per identity, realization, dimension and parameter
set. Check order is fixed by the loops below, which makes the report order
deterministic.
"""

from collections.abc import Callable, Iterator
from functools import partial
from itertools import combinations, product

from dunkl_dirac.algebra.blade import Blade
from dunkl_dirac.algebra.parameters import (
    ParameterSet,
    all_subsets,
    cyclic_permutation,
    full_set,
    identity_permutation,
    prefix,
    subset_text,
)
from dunkl_dirac.algebra.polynomial import SpinorPolynomial
from dunkl_dirac.bi_algebra import (
    CasimirKind,
    bi_relation_pairs,
    verify_abelian_subalgebra,
    verify_bi_relation,
    verify_casimir_C_value,
    verify_casimir_commutes,
    verify_casimir_Q_value,
    verify_gamma_via_pairs,
    verify_pair_chain_independence,
    verify_parity_symmetry,
    verify_permutation_equivariance,
    verify_rank_one_on_monogenics,
    verify_rank_one_relation,
    verify_square_identity,
)
from dunkl_dirac.constants import (
    REALIZATION_CLIFFORD,
    REALIZATION_SCALAR,
    SUITE_BI_RELATIONS,
    SUITE_CASIMIRS,
    SUITE_DESCRIPTIONS,
    SUITE_LADDER,
    SUITE_MONOGENICS,
    SUITE_OSP,
    SUITE_SCALAR,
)
from dunkl_dirac.ladder import (
    all_steps,
    verify_alpha_sign,
    verify_covariance,
    verify_extra_symmetry,
    verify_irreducibility,
    verify_ladder_action,
    verify_spectral_value,
    verify_square_factorization,
)
from dunkl_dirac.monogenics import (
    BasisLabel,
    bannai_ito_recurrence_oracle,
    basis_psi,
    enumerate_labels,
    fischer_decompose,
    verify_ck_restriction,
    verify_clifford_skew_adjoint,
    verify_connection_unitarity,
    verify_eigenvalues,
    verify_explicit_formula,
    verify_kernel,
    verify_moment_oracle,
    verify_monogenic_count,
    verify_orthogonality,
    verify_power_actions,
)
from dunkl_dirac.operators import (
    Realization,
    get_realization,
    osp_relations,
    square_relations,
)
from dunkl_dirac.operators.identities import (
    verify_degree_preservation,
    verify_dunkl_commutativity,
    verify_gamma_forms,
    verify_gamma_symmetry,
    verify_osp_relation,
    verify_scasimir_anticommutation,
)
from dunkl_dirac.operators.oracle import check_parameters
from dunkl_dirac.run_config import RunConfig
from dunkl_dirac.verification import VerificationPipeline, VerificationPipelineBuilder

from .operation import Operation, OperationCheck

# Fischer decompositions solve a rank problem over the whole graded component
FISCHER_MAX_DEGREE = 3

# (l, j, k) triples for the power actions of D
POWER_ACTION_CASES = tuple(product(range(3), repeat=3))

# Even exponent vectors whose spherical moments are compared with quadrature (n = 3)
MOMENT_CASES = ((2, 0, 0), (2, 2, 0), (0, 2, 4), (2, 2, 2))

CheckFactory = Callable[..., OperationCheck]
ChecksFor = Callable[[Realization, int], Iterator[OperationCheck]]


def make_check(
    name: str,
    operation: Operation,
    *args,
    params: ParameterSet,
    realization: str = REALIZATION_CLIFFORD,
    subset_a=None,
    subset_b=None,
    k_max: int | None = None,
    **extra,
) -> OperationCheck:
    """An ``OperationCheck`` whose error rows echo ``params`` and the given labels."""
    parameters = check_parameters(params, subset_a, subset_b, k_max, **extra)
    return OperationCheck(name, operation, *args, realization=realization, parameters=parameters)


def _grid(config: RunConfig) -> Iterator[tuple[int, ParameterSet]]:
    for n in config.dimensions:
        for params in config.parameter_sets_for(n):
            yield n, params


def _nonempty_subsets(n: int) -> list[frozenset[int]]:
    return [a for a in all_subsets(n) if a]


def _add_realization_stage(
    builder: VerificationPipelineBuilder,
    config: RunConfig,
    suite: str,
    kinds: list[str],
    checks_for: ChecksFor,
) -> VerificationPipelineBuilder:
    """One stage running ``checks_for`` at each realization kind, dimension and parameter set."""
    stage = builder.add_stage(name=suite, description=SUITE_DESCRIPTIONS[suite])
    for kind in kinds:
        for n, params in _grid(config):
            stage.add_checks(list(checks_for(get_realization(kind, params), config.depth(kind, n))))
    return builder


def _identity_factory(realization: Realization, k_max: int) -> CheckFactory:
    return partial(make_check, params=realization.params, realization=str(realization.kind), k_max=k_max)


# --- osp(1|2) -------------------------------------------------------------------------------


def osp_checks(realization: Realization, k_max: int) -> Iterator[OperationCheck]:
    """osp(1|2) brackets and sCasimir anticommutation for every non-empty A.

    The Clifford realization adds the squares D_A^2 = -Lap_A and X_A^2 = -|x_A|^2,
    Dunkl commutativity, Gamma symmetry, degree preservation and the explicit
    Gamma forms; their scalar counterparts live in the scalar suite.
    """
    check = _identity_factory(realization, k_max)
    n = realization.n
    clifford = realization.kind == REALIZATION_CLIFFORD
    if clifford:
        for i, j in combinations(range(1, n + 1), 2):
            yield check(f"T{i}T{j}=T{j}T{i}", verify_dunkl_commutativity, realization, i, j, k_max, pair=[i, j])
    for a in _nonempty_subsets(n):
        text = subset_text(a)
        relations = osp_relations(realization, a) + (square_relations(realization, a) if clifford else [])
        for name, _, _ in relations:
            yield check(f"osp {name} A={text}", verify_osp_relation, realization, a, name, k_max, subset_a=a)
        yield check(f"{{S,D}}={{S,X}}=0 A={text}", verify_scasimir_anticommutation, realization, a, k_max, subset_a=a)
        if not clifford:
            continue
        yield check(f"Gamma symmetry A={text}", verify_gamma_symmetry, realization, a, k_max, subset_a=a)
        yield check(f"degree preservation A={text}", verify_degree_preservation, realization, a, k_max, subset_a=a)
        if len(a) >= 2:
            yield check(f"Gamma forms A={text}", verify_gamma_forms, realization, a, k_max, subset_a=a)


def add_osp_stage(builder: VerificationPipelineBuilder, config: RunConfig) -> VerificationPipelineBuilder:
    """Add the osp(1|2) suite for every selected realization."""
    return _add_realization_stage(builder, config, SUITE_OSP, config.realizations, osp_checks)


# --- Bannai-Ito relations --------------------------------------------------------------------


def bi_relation_checks(realization: Realization, k_max: int, flip_sign: bool = False) -> Iterator[OperationCheck]:
    """Every pair (A, B), the pair-operator recursion, the labelling chains and the square identities.

    The Clifford realization adds permutation equivariance and the parity symmetries.
    """
    check = _identity_factory(realization, k_max)
    n = realization.n
    for a, b in bi_relation_pairs(n):
        name = f"BI {subset_text(a)},{subset_text(b)}"
        yield check(name, verify_bi_relation, realization, a, b, k_max, flip_sign, subset_a=a, subset_b=b)

    order = identity_permutation(n)
    reverse = tuple(reversed(order))
    yield check("Gamma via pairs", verify_gamma_via_pairs, realization, order, k_max, subset_a=order)
    yield check("Gamma via pairs, order independence", verify_pair_chain_independence, realization, order, reverse, k_max)
    for perm in (order, cyclic_permutation(n)):
        yield check("abelian labelling chain", verify_abelian_subalgebra, realization, perm, k_max, permutation=list(perm))
    for ell in range(1, n - 1):
        yield check(f"square identity l={ell}", verify_square_identity, realization, ell, k_max, ell=ell)

    if realization.kind != REALIZATION_CLIFFORD:
        return
    cycle = cyclic_permutation(n)
    for m in range(1, n + 1):
        a = prefix(m)
        yield check("permutation equivariance", verify_permutation_equivariance, realization, a, cycle, k_max, subset_a=a)
    for a in (full_set(n), prefix(n - 1)):
        for i in range(1, n + 1):
            yield check(f"[Z{i},Gamma_A]=0", verify_parity_symmetry, realization, i, a, k_max, subset_a=a)


def add_bi_relations_stage(builder: VerificationPipelineBuilder, config: RunConfig) -> VerificationPipelineBuilder:
    """Add the Bannai-Ito suite; ``inject_sign_flip`` turns every pair relation into a negative control."""
    checks_for = partial(bi_relation_checks, flip_sign=config.inject_sign_flip)
    return _add_realization_stage(builder, config, SUITE_BI_RELATIONS, config.realizations, checks_for)


# --- Casimirs --------------------------------------------------------------------------------


def casimir_checks(realization: Realization, k_max: int) -> Iterator[OperationCheck]:
    """Casimir values on the prefixes [m], their centrality, and the rank-one structure constants."""
    check = _identity_factory(realization, k_max)
    n = realization.n
    for m in range(2, n + 1):
        a = prefix(m)
        yield check(f"Q value A={subset_text(a)}", verify_casimir_Q_value, realization, a, k_max, subset_a=a)
        yield check(f"C value A={subset_text(a)}", verify_casimir_C_value, realization, a, k_max, subset_a=a)
        for b in (b for b in _nonempty_subsets(n) if b <= a):
            for kind in CasimirKind:
                name = f"[{kind.value}_A,Gamma_B]=0"
                yield check(name, verify_casimir_commutes, realization, kind, a, b, k_max, subset_a=a, subset_b=b)
    if n == 3:
        for index in (1, 2, 3):
            yield check("rank-one relation", verify_rank_one_relation, realization, index, k_max, relation=index)


def add_casimirs_stage(builder: VerificationPipelineBuilder, config: RunConfig) -> VerificationPipelineBuilder:
    return _add_realization_stage(builder, config, SUITE_CASIMIRS, config.realizations, casimir_checks)


# --- Monogenics ------------------------------------------------------------------------------


def _ck_inputs(n: int, k: int) -> list[tuple[SpinorPolynomial, int]]:
    """Polynomials in x_1..x_{j-1}, paired with the level j they extend to."""
    inputs = [(SpinorPolynomial.monomial(n, (k,) + (0,) * (n - 1)), 2)]
    if n >= 3:
        exponents = (k // 2, k - k // 2) + (0,) * (n - 2)
        inputs.append((SpinorPolynomial.monomial(n, exponents, Blade.generator(n, 1)), 3))
    return inputs


def _label_checks(check: CheckFactory, label: BasisLabel, params: ParameterSet) -> Iterator[OperationCheck]:
    tag = {"k_max": label.k, "label": str(label)}
    yield check(f"D Psi = 0 {label}", verify_kernel, label, params, **tag)
    yield check(f"explicit formula {label}", verify_explicit_formula, label, params, **tag)
    for ell in range(2, params.n + 1):
        yield check(f"Gamma_[{ell}] eigenvalue {label}", verify_eigenvalues, label, ell, params, **tag)
    if params.n == 3:
        yield check(f"rank-one action {label}", verify_rank_one_on_monogenics, label, params, **tag)


def _degree_checks(check: CheckFactory, params: ParameterSet, k: int) -> Iterator[OperationCheck]:
    n = params.n
    unit = Blade.unit(n)
    labels = list(enumerate_labels(n, k, [unit]))
    for label in labels:
        yield from _label_checks(check, label, params)
    for blade in (unit, Blade.generator(n, 1)):
        yield check(f"monogenic count k={k}", verify_monogenic_count, params, k, blade, k_max=k, blade=blade.label)
    yield check(f"orthogonality k={k}", verify_orthogonality, params, k, unit, k_max=k)
    yield check(f"connection unitarity k={k}", verify_connection_unitarity, params, k, unit, k_max=k)
    if n == 3:
        yield check(f"recurrence k={k}", bannai_ito_recurrence_oracle, params, k, unit, k_max=k)
    if k <= FISCHER_MAX_DEGREE:
        yield check(f"Fischer decomposition k={k}", fischer_decompose, params, k, k_max=k)
    if k >= 1:
        for p, level in _ck_inputs(n, k):
            yield check(f"CK restriction j={level}", verify_ck_restriction, p, level, params, k_max=k, level=level)
    if k == 1:
        p, q = basis_psi(labels[0], params), basis_psi(labels[-1], params)
        for i in range(1, n + 1):
            yield check(f"e{i} skew-adjoint", verify_clifford_skew_adjoint, p, q, i, params, k_max=k, generator=i)


def monogenic_checks(params: ParameterSet, depth: int, with_moments: bool = False) -> Iterator[OperationCheck]:
    """Basis, spectral, pairing and connection checks up to degree ``depth``."""
    check = partial(make_check, params=params)
    for k in range(depth + 1):
        yield from _degree_checks(check, params, k)
    for ell, j, k in POWER_ACTION_CASES:
        yield check("power actions of D", verify_power_actions, ell, j, k, params, ell=ell, j=j, k=k)
    if with_moments:
        for exponents in MOMENT_CASES:
            yield check("moment closed form", verify_moment_oracle, exponents, params.mu, exponents=list(exponents))


def add_monogenics_stage(builder: VerificationPipelineBuilder, config: RunConfig) -> VerificationPipelineBuilder:
    """Add the monogenics suite; it needs the Clifford realization.

    Quadrature moments run once, on the first parameter set at n = 3.
    """
    if REALIZATION_CLIFFORD not in config.realizations:
        return builder
    stage = builder.add_stage(name=SUITE_MONOGENICS, description=SUITE_DESCRIPTIONS[SUITE_MONOGENICS])
    moments_pending = 3 in config.dimensions
    for n, params in _grid(config):
        with_moments = moments_pending and n == 3
        moments_pending = moments_pending and not with_moments
        stage.add_checks(list(monogenic_checks(params, config.depth("monogenic", n), with_moments)))
    return builder


# --- Ladder ----------------------------------------------------------------------------------


def ladder_checks(realization: Realization, depth: int) -> Iterator[OperationCheck]:
    """Covariance, factorization, spectral values and irreducibility up to degree ``depth``."""
    params = realization.params
    n = realization.n
    unit = Blade.unit(n)
    check = partial(make_check, params=params)
    for step in all_steps(n):
        tag = {"k_max": depth, "step": str(step)}
        for j in range(1, n + 1):
            yield check(f"{step} covariance j={j}", verify_covariance, realization, step, j, depth, **tag)
        yield check(f"{step}^2 factorization", verify_square_factorization, realization, step, depth, **tag)
        for k in range(depth + 1):
            for label in enumerate_labels(n, k, [unit]):
                tag = {"k_max": k, "step": str(step), "label": str(label)}
                yield check(f"alpha {step} {label}", verify_alpha_sign, step, label.multi_index, params, **tag)
                yield check(f"{step} action {label}", verify_ladder_action, step, label, params, **tag)
                yield check(f"{step} spectral value {label}", verify_spectral_value, step, label, params, **tag)
    for k in range(depth + 1):
        yield check(f"irreducibility k={k}", verify_irreducibility, params, k, unit, k_max=k)
    yield check("extra symmetry", verify_extra_symmetry, realization, depth, k_max=depth)


def add_ladder_stage(builder: VerificationPipelineBuilder, config: RunConfig) -> VerificationPipelineBuilder:
    """Add the ladder suite; it needs the Clifford realization and runs at the monogenic depth."""
    if REALIZATION_CLIFFORD not in config.realizations:
        return builder
    stage = builder.add_stage(name=SUITE_LADDER, description=SUITE_DESCRIPTIONS[SUITE_LADDER])
    for n, params in _grid(config):
        realization = get_realization(REALIZATION_CLIFFORD, params)
        stage.add_checks(list(ladder_checks(realization, config.depth("monogenic", n))))
    return builder


# --- Scalar realization ----------------------------------------------------------------------


def scalar_checks(realization: Realization, k_max: int) -> Iterator[OperationCheck]:
    """The positive squares, the Gamma symmetry partners and degree preservation of the scalar operators."""
    check = _identity_factory(realization, k_max)
    for a in _nonempty_subsets(realization.n):
        text = subset_text(a)
        for name, _, _ in square_relations(realization, a):
            yield check(f"osp {name} A={text}", verify_osp_relation, realization, a, name, k_max, subset_a=a)
        yield check(f"Gamma symmetry A={text}", verify_gamma_symmetry, realization, a, k_max, subset_a=a)
        yield check(f"degree preservation A={text}", verify_degree_preservation, realization, a, k_max, subset_a=a)


def add_scalar_stage(builder: VerificationPipelineBuilder, config: RunConfig) -> VerificationPipelineBuilder:
    if REALIZATION_SCALAR not in config.realizations:
        return builder
    return _add_realization_stage(builder, config, SUITE_SCALAR, [REALIZATION_SCALAR], scalar_checks)


STAGE_BUILDERS = {
    SUITE_OSP: add_osp_stage,
    SUITE_BI_RELATIONS: add_bi_relations_stage,
    SUITE_CASIMIRS: add_casimirs_stage,
    SUITE_MONOGENICS: add_monogenics_stage,
    SUITE_LADDER: add_ladder_stage,
    SUITE_SCALAR: add_scalar_stage,
}


def build_verification_pipeline(config: RunConfig) -> VerificationPipeline:
    """One stage per selected suite, in canonical suite order."""
    builder = VerificationPipelineBuilder(jobs=config.jobs)
    for suite in config.suites:
        STAGE_BUILDERS[suite](builder, config)
    return builder.build()
