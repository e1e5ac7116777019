"""Pipeline orchestrating verification suites in sequence.

Typical Usage:
    pipeline = VerificationPipeline([osp_stage, bi_stage])
    report = pipeline.execute(config={"dimensions": [3]})
    if report.outcome == RunOutcome.VERIFIED:
        print("all identities hold")
"""

from typing import Any

import arrow
from loguru import logger

from .base import VerificationCheck
from .calculator import ResultCalculator
from .enums import CheckStatus, RunOutcome
from .models import SuiteResult, VerificationReport
from .stage import SuiteStage


class VerificationPipeline:
    """Runs suite stages in order and produces a ``VerificationReport``.

    Attributes:
        stages: Stages in execution order
        last_result: The report of the most recent run
    """

    def __init__(self, stages: list[SuiteStage]):
        self.stages = stages
        self.last_result: VerificationReport | None = None
        self._calculator = ResultCalculator()

    def execute(self, config: dict[str, Any] | None = None) -> VerificationReport:
        """Run every stage and finalize the report.

        Args:
            config: Run configuration echoed into the report.

        Returns:
            VerificationReport: Finalized report with counters and outcome
        """
        logger.info("Starting verification pipeline with {} suites", len(self.stages))
        start_time = arrow.utcnow().float_timestamp
        report = VerificationReport(
            status=CheckStatus.RUNNING,
            outcome=RunOutcome.PENDING,
            message="Verification running",
            config=config or {},
        )
        for stage in self.stages:
            report.suite_results.append(stage.execute())

        report = self._calculator.finalize_result(report, start_time)
        self.last_result = report
        logger.info("Pipeline completed with outcome {}", report.outcome)
        return report

    def get_stage_names(self) -> list[str]:
        return [stage.name for stage in self.stages]

    def get_stage(self, name: str) -> SuiteStage | None:
        return next((stage for stage in self.stages if stage.name == name), None)

    def get_stage_result(self, name: str) -> SuiteResult | None:
        if not self.last_result:
            return None
        return next((suite for suite in self.last_result.suite_results if suite.suite == name), None)

    def get_check(self, check_name: str) -> tuple[SuiteStage | None, VerificationCheck | None]:
        """Find a check by name across all stages."""
        for stage in self.stages:
            for check in stage.checks:
                if check.name == check_name:
                    return stage, check
        return None, None

    def __str__(self) -> str:
        return f"VerificationPipeline(stages={len(self.stages)})"

    def __repr__(self) -> str:
        return f"VerificationPipeline(stages={self.get_stage_names()})"
