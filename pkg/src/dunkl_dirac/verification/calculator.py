"""Run result finalization.

Key Features:
- Aggregation of row counters across suites
- Run outcome: VERIFIED when nothing failed or errored, REFUTED when some
  identity failed with a witness, ERROR when a check raised
- Total execution time measurement
"""

import arrow
from loguru import logger

from .enums import CheckStatus, RunOutcome
from .models import VerificationReport


class ResultCalculator:
    """Turns the raw suite results of a run into a finalized report."""

    def finalize_result(self, report: VerificationReport, start_time: float) -> VerificationReport:
        """Aggregate counters and decide the run outcome.

        Args:
            report: Report holding completed suite results.
            start_time: Unix timestamp at which the run began.

        Returns:
            VerificationReport: The same report, finalized in place.
        """
        for suite in report.suite_results:
            report.total_checks += suite.total_checks
            report.passed_checks += suite.passed_checks
            report.failed_checks += suite.failed_checks
            report.error_checks += suite.error_checks
            report.skipped_checks += suite.skipped_checks

        if report.error_checks:
            report.status = CheckStatus.ERROR
            report.outcome = RunOutcome.ERROR
            report.message = f"{report.error_checks} checks raised errors, {report.failed_checks} failed"
            logger.error("Verification finished with {} errors", report.error_checks)
        elif report.failed_checks:
            report.status = CheckStatus.FAILED
            report.outcome = RunOutcome.REFUTED
            report.message = f"{report.failed_checks} of {report.total_checks} checks failed"
            logger.warning("Verification finished with {} failures", report.failed_checks)
        else:
            report.status = CheckStatus.PASSED
            report.outcome = RunOutcome.VERIFIED
            report.message = f"All {report.passed_checks} checks passed"
            logger.info("Verification finished: {} checks passed", report.passed_checks)

        report.total_execution_time_ms = (arrow.utcnow().float_timestamp - start_time) * 1000
        return report
