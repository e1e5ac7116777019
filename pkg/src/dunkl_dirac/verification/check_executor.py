"""Check execution for verification suites.

Key Features:
- Individual check execution with timing measurement
- Conversion of exceptions into ``error`` rows so the run continues
- Result enrichment with the suite name and an execution timestamp
"""

import arrow
from loguru import logger

from .base import VerificationCheck
from .enums import CheckStatus
from .models import RelationCheck

# Arithmetic failures (inexact division, zero pivots) are ArithmeticError subclasses;
# missing labels or cache entries surface as LookupError.
RECOVERABLE_ERRORS = (ValueError, TypeError, RuntimeError, AttributeError, ArithmeticError, LookupError)


class CheckExecutor:
    """Runs single checks inside a suite.

    Stateless: every call produces a fresh, fully stamped row.
    """

    def execute_single_check(self, check: VerificationCheck, suite: str) -> RelationCheck:
        """Execute a check and return its enriched row.

        Args:
            check: The check to run.
            suite: Name of the suite running it, copied into the row.

        Returns:
            RelationCheck: The row, with timing and suite filled in. Exceptions
                never escape; they become rows with status ``error``.
        """
        logger.debug("Running check: {}", check.name)
        start_time = arrow.utcnow().float_timestamp
        executed_at = arrow.utcnow().isoformat()

        try:
            row = check.run()
        except RECOVERABLE_ERRORS as e:
            return self._handle_check_exception(check, e, start_time, suite)

        row.suite = suite
        row.executed_at = executed_at
        row.execution_time_ms = (arrow.utcnow().float_timestamp - start_time) * 1000
        if row.status == CheckStatus.FAILED:
            logger.warning("Check {} failed: {}", check.name, row.message)
        return row

    def _handle_check_exception(
        self,
        check: VerificationCheck,
        e: Exception,
        start_time: float,
        suite: str,
    ) -> RelationCheck:
        """Convert an exception raised by a check into an ``error`` row."""
        logger.error("Check {} threw exception: {}", check.name, e)
        return RelationCheck(
            name=check.name,
            realization=check.realization,
            parameters=check.parameters,
            status=CheckStatus.ERROR,
            message=f"Check execution failed: {e}",
            suite=suite,
            executed_at=arrow.utcnow().isoformat(),
            execution_time_ms=(arrow.utcnow().float_timestamp - start_time) * 1000,
            details={"exception": str(e), "type": type(e).__name__},
        )


def run_check(check: VerificationCheck, suite: str) -> RelationCheck:
    """Module-level entry point for worker processes."""
    return CheckExecutor().execute_single_check(check, suite)
