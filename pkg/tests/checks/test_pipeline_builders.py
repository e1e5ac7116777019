"""Tests for the suite stage builders."""

import pytest

from dunkl_dirac.checks import build_verification_pipeline
from dunkl_dirac.checks.operation import OperationCheck
from dunkl_dirac.checks.pipeline_builders import (
    MOMENT_CASES,
    POWER_ACTION_CASES,
    bi_relation_checks,
    make_check,
    monogenic_checks,
    osp_checks,
)
from dunkl_dirac.constants import SUITE_BI_RELATIONS, SUITE_CASIMIRS, SUITE_LADDER, SUITE_MONOGENICS, SUITE_OSP, SUITE_SCALAR
from dunkl_dirac.operators import get_realization
from dunkl_dirac.operators.identities import verify_dunkl_commutativity
from dunkl_dirac.run_config import RunConfig
from dunkl_dirac.verification import CheckStatus, SuiteStage

MU3 = "1/2,1/3,1/4"


def _config(**values) -> RunConfig:
    values.setdefault("dimensions", [3])
    values.setdefault("mu", MU3)
    values.setdefault("k_max", 0)
    return RunConfig.create(**values)


class TestMakeCheck:
    def test_parameters(self, clifford3, params3):
        """Subsets, pairs and k_max land in the check parameters."""
        check = make_check(
            "T1T2=T2T1", verify_dunkl_commutativity, clifford3, 1, 2, 1, params=params3, subset_a={2, 1}, k_max=1, pair=[1, 2]
        )
        assert isinstance(check, OperationCheck)
        assert check.realization == "clifford"
        assert check.parameters.n == 3
        assert check.parameters.mu == ["1/2", "1/3", "1/4"]
        assert check.parameters.subset_a == [1, 2]
        assert check.parameters.subset_b is None
        assert check.parameters.k_max == 1
        assert check.parameters.extra == {"pair": [1, 2]}

    def test_repr(self, clifford3, params3):
        """The repr names the wrapped operation."""
        check = make_check("T1T2=T2T1", verify_dunkl_commutativity, clifford3, 1, 2, 1, params=params3)
        assert repr(check) == "OperationCheck(name='T1T2=T2T1', operation=verify_dunkl_commutativity, realization='clifford')"

    def test_execute_runs_the_operation(self, clifford3, params3):
        """Executing the check calls the operation."""
        check = make_check("T1T2=T2T1", verify_dunkl_commutativity, clifford3, 1, 2, 1, params=params3)
        row = check.run()
        assert row.status == CheckStatus.PASSED
        assert row.realization == "clifford"


class TestCheckGenerators:
    def test_osp_clifford_extras(self, clifford3, scalar3):
        """Dunkl commutativity and Gamma symmetry only run on the Clifford side."""
        clifford_names = [check.name for check in osp_checks(clifford3, 0)]
        scalar_names = [check.name for check in osp_checks(scalar3, 0)]
        assert "T1T2=T2T1" in clifford_names
        assert "Gamma symmetry A={1,2}" in clifford_names
        assert not any(name.startswith("T1T2") for name in scalar_names)
        assert not any(name.startswith("Gamma symmetry") for name in scalar_names)
        assert "{S,D}={S,X}=0 A={1,3}" in scalar_names

    def test_osp_realization_tag(self, scalar3):
        """Checks carry the realization they were built for."""
        assert {check.realization for check in osp_checks(scalar3, 0)} == {"scalar"}

    def test_bi_relations_sign_flip_argument(self, clifford3):
        """The sign-flip flag reaches every relation check."""
        flipped = [c for c in bi_relation_checks(clifford3, 0, flip_sign=True) if c.name.startswith("BI ")]
        assert flipped
        assert all(check.args[-1] is True for check in flipped)

    def test_monogenic_moments_only_when_requested(self, params3):
        """Moment checks are added on request and power actions run once per case."""
        without = list(monogenic_checks(params3, 0))
        with_moments = list(monogenic_checks(params3, 0, with_moments=True))
        assert len(with_moments) - len(without) == len(MOMENT_CASES)
        assert sum(check.name == "power actions of D" for check in without) == len(POWER_ACTION_CASES)


class TestBuildVerificationPipeline:
    def test_all_suites_in_order(self):
        """Suites run in their canonical order."""
        pipeline = build_verification_pipeline(_config())
        assert pipeline.get_stage_names() == [
            SUITE_OSP,
            SUITE_BI_RELATIONS,
            SUITE_CASIMIRS,
            SUITE_MONOGENICS,
            SUITE_LADDER,
            SUITE_SCALAR,
        ]

    def test_suite_subset(self):
        """Only the requested suites are built, still in canonical order."""
        pipeline = build_verification_pipeline(_config(suites=[SUITE_CASIMIRS, SUITE_OSP]))
        assert pipeline.get_stage_names() == [SUITE_OSP, SUITE_CASIMIRS]

    def test_clifford_only_has_no_scalar_stage(self):
        """A Clifford-only run has no scalar stage."""
        pipeline = build_verification_pipeline(_config(realization="clifford"))
        assert SUITE_SCALAR not in pipeline.get_stage_names()
        assert {check.realization for check in pipeline.get_stage(SUITE_OSP).checks} == {"clifford"}

    def test_scalar_only_skips_clifford_suites(self):
        """A scalar-only run skips the suites that need spinors."""
        pipeline = build_verification_pipeline(_config(realization="scalar"))
        names = pipeline.get_stage_names()
        assert SUITE_MONOGENICS not in names
        assert SUITE_LADDER not in names
        assert SUITE_SCALAR in names

    def test_both_realizations_double_the_osp_grid(self):
        """Both realizations share the osp stage."""
        both = build_verification_pipeline(_config(suites=[SUITE_OSP]))
        realizations = {check.realization for check in both.get_stage(SUITE_OSP).checks}
        assert realizations == {"clifford", "scalar"}

    def test_moments_run_once(self):
        """Moment checks run once, not per dimension or parameter set."""
        config = _config(dimensions=[3, 4], mu="random:1", parameter_sets=2, suites=[SUITE_MONOGENICS])
        stage = build_verification_pipeline(config).get_stage(SUITE_MONOGENICS)
        assert sum(check.name == "moment closed form" for check in stage.checks) == len(MOMENT_CASES)

    def test_jobs_propagate(self):
        """The worker count reaches each stage."""
        pipeline = build_verification_pipeline(_config(jobs=3, suites=[SUITE_OSP]))
        assert pipeline.get_stage(SUITE_OSP).jobs == 3


@pytest.mark.slow
class TestParallelStage:
    def test_parallel_rows_match_serial(self, params3):
        """Worker processes produce the same rows as a serial run."""
        realization = get_realization("clifford", params3)

        def stage(jobs: int) -> SuiteStage:
            checks = [
                make_check(f"T{i}T{j}=T{j}T{i}", verify_dunkl_commutativity, realization, i, j, 1, params=params3)
                for i, j in ((1, 2), (1, 3), (2, 3))
            ]
            return SuiteStage("osp", "parallel", jobs=jobs).add_checks(checks)

        serial = stage(1).execute()
        parallel = stage(2).execute()
        assert [row.name for row in parallel.checks] == [row.name for row in serial.checks]
        assert all(row.status == CheckStatus.PASSED for row in parallel.checks)
