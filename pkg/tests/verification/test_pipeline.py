"""Tests for the verification pipeline, its builder and the result calculator."""

import arrow
import pytest

from dunkl_dirac.verification import (
    CheckStatus,
    RelationCheck,
    RunOutcome,
    SuiteResult,
    VerificationCheck,
    VerificationPipeline,
    VerificationPipelineBuilder,
    VerificationReport,
    Witness,
)
from dunkl_dirac.verification.calculator import ResultCalculator


class MockCheck(VerificationCheck):
    """Mock identity check for testing."""

    def __init__(self, name: str, should_fail: bool = False, should_raise: bool = False):
        super().__init__(name)
        self.should_fail = should_fail
        self.should_raise = should_raise

    def _execute(self) -> RelationCheck:
        if self.should_raise:
            raise TypeError("unsupported operand")
        if self.should_fail:
            return self.failed("does not hold", Witness(basis_element="1", lhs="1/1", rhs="0/1"))
        return self.passed()


def _pipeline(*stages: tuple[str, list[MockCheck]]) -> VerificationPipeline:
    builder = VerificationPipelineBuilder()
    for name, checks in stages:
        builder.add_stage(name, f"{name} suite").add_checks(checks)
    return builder.build()


class TestVerificationPipeline:
    def test_all_passed(self):
        """All stages passing gives a verified report."""
        pipeline = _pipeline(("osp", [MockCheck("a"), MockCheck("b")]), ("casimirs", [MockCheck("c")]))

        report = pipeline.execute(config={"dimensions": [3]})

        assert report.outcome == RunOutcome.VERIFIED
        assert report.status == CheckStatus.PASSED
        assert report.total_checks == 3
        assert report.passed_checks == 3
        assert report.message == "All 3 checks passed"
        assert report.config == {"dimensions": [3]}
        assert report.total_execution_time_ms is not None
        assert pipeline.last_result is report

    def test_refuted(self):
        """A failed check refutes the run."""
        report = _pipeline(("bi-relations", [MockCheck("a", should_fail=True), MockCheck("b")])).execute()

        assert report.outcome == RunOutcome.REFUTED
        assert report.status == CheckStatus.FAILED
        assert report.message == "1 of 2 checks failed"
        assert not report.succeeded

    def test_error_outcome(self):
        """An error outranks a failure."""
        stages = ("osp", [MockCheck("a", should_fail=True)]), ("ladder", [MockCheck("b", should_raise=True)])
        report = _pipeline(*stages).execute()

        assert report.outcome == RunOutcome.ERROR
        assert report.error_checks == 1
        assert report.failed_checks == 1

    def test_lookup(self):
        """Stages are looked up by name."""
        pipeline = _pipeline(("osp", [MockCheck("a")]), ("scalar", [MockCheck("b")]))

        assert pipeline.get_stage_names() == ["osp", "scalar"]
        assert pipeline.get_stage("scalar").name == "scalar"
        assert pipeline.get_stage("missing") is None
        assert pipeline.get_stage_result("osp") is None

        pipeline.execute()
        stage, check = pipeline.get_check("b")

        assert pipeline.get_stage_result("osp").passed_checks == 1
        assert stage.name == "scalar"
        assert check.name == "b"
        assert pipeline.get_check("missing") == (None, None)

    def test_string_forms(self):
        """str and repr of a pipeline."""
        pipeline = _pipeline(("osp", []))

        assert str(pipeline) == "VerificationPipeline(stages=1)"
        assert repr(pipeline) == "VerificationPipeline(stages=['osp'])"


class TestVerificationPipelineBuilder:
    def test_stage_jobs_default_to_builder(self):
        """Stages inherit the builder's worker count."""
        builder = VerificationPipelineBuilder(jobs=3)

        assert builder.add_stage("osp", "osp").jobs == 3
        assert builder.add_stage("ladder", "ladder", jobs=1).jobs == 1
        assert str(builder) == "VerificationPipelineBuilder(stages=2)"

    def test_duplicate_stage(self):
        """Stage names must be unique."""
        builder = VerificationPipelineBuilder()
        builder.add_stage("osp", "osp")

        with pytest.raises(ValueError, match="already exists"):
            builder.add_stage("osp", "again")

    def test_add_check_to_stage(self):
        """Checks are added to an existing stage."""
        builder = VerificationPipelineBuilder()
        builder.add_stage("osp", "osp")

        assert builder.add_check_to_stage("osp", MockCheck("a")) is builder
        assert builder.get_stage("osp").get_check_names() == ["a"]
        with pytest.raises(ValueError, match="not found"):
            builder.add_check_to_stage("missing", MockCheck("b"))


class TestResultCalculator:
    def test_counters_are_summed(self):
        """Suite counters add up in the report."""
        suites = [
            SuiteResult(suite="a", status=CheckStatus.PASSED, message="", total_checks=2, passed_checks=2),
            SuiteResult(suite="b", status=CheckStatus.SKIPPED, message="", total_checks=1, skipped_checks=1),
        ]
        report = VerificationReport(
            status=CheckStatus.RUNNING, outcome=RunOutcome.PENDING, message="", suite_results=suites
        )

        result = ResultCalculator().finalize_result(report, arrow.utcnow().float_timestamp)

        assert result is report
        assert (report.total_checks, report.passed_checks, report.skipped_checks) == (3, 2, 1)
        assert report.outcome == RunOutcome.VERIFIED
        assert report.total_execution_time_ms >= 0

