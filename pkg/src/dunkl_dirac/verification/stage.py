"""Verification suite stage.

A stage is a named group of checks (one suite at one realization, dimension
and parameter set, or several of them). Checks run serially or on a process
pool; rows are always merged in submission order, so both modes produce the
same report.

Key Features:
- Fluent ``add_check``/``add_checks``
- Optional process pool with ``jobs`` workers
- Optional fail-fast: remaining checks are reported as skipped
- Suite-level counters and timing

Typical Usage:
    stage = SuiteStage("osp", "osp(1|2) relations", jobs=4)
    stage.add_checks(checks)
    result = stage.execute()
"""

from concurrent.futures import ProcessPoolExecutor
from itertools import repeat

import arrow
from loguru import logger

from .base import VerificationCheck
from .check_executor import CheckExecutor, run_check
from .enums import CheckStatus
from .models import RelationCheck, SuiteResult


class SuiteStage:
    """A pipeline stage holding the checks of one suite.

    Attributes:
        name: Suite name, copied into every row
        description: Human-readable description
        jobs: Worker processes; 1 runs in-process
        fail_fast: Stop at the first failed or errored check (serial mode only)
        checks: The checks, in report order
    """

    def __init__(self, name: str, description: str, jobs: int = 1, fail_fast: bool = False):
        if jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {jobs}")
        self.name = name
        self.description = description
        self.jobs = jobs
        self.fail_fast = fail_fast
        self.checks: list[VerificationCheck] = []
        self._check_executor = CheckExecutor()
        self._last_result: SuiteResult | None = None

    def add_check(self, check: VerificationCheck) -> SuiteStage:
        """Add a check to this stage (fluent interface)."""
        self.checks.append(check)
        return self

    def add_checks(self, checks: list[VerificationCheck]) -> SuiteStage:
        """Add several checks to this stage.

        Returns:
            This stage for method chaining
        """
        self.checks.extend(checks)
        return self

    def get_check_names(self) -> list[str]:
        return [check.name for check in self.checks]

    def get_last_result(self) -> SuiteResult | None:
        return self._last_result

    def execute(self) -> SuiteResult:
        """Run every check and aggregate the rows.

        Returns:
            SuiteResult: Rows in submission order plus counters
        """
        logger.info("Running suite {} ({} checks)", self.name, len(self.checks))
        start_time = arrow.utcnow().float_timestamp
        result = SuiteResult(
            suite=self.name,
            description=self.description,
            status=CheckStatus.RUNNING,
            message=f"Running {self.name} suite",
            executed_at=arrow.utcnow().isoformat(),
            total_checks=len(self.checks),
        )

        if self.jobs > 1 and len(self.checks) > 1 and not self.fail_fast:
            rows = self._run_parallel()
        else:
            rows = self._run_serial()
        for row in rows:
            self._count(result, row)
            result.checks.append(row)

        self._finalize(result)
        result.execution_time_ms = (arrow.utcnow().float_timestamp - start_time) * 1000
        logger.info("Suite {} completed with status {} in {:.1f}ms", self.name, result.status, result.execution_time_ms)
        self._last_result = result
        return result

    def _run_serial(self) -> list[RelationCheck]:
        rows: list[RelationCheck] = []
        for position, check in enumerate(self.checks):
            row = self._check_executor.execute_single_check(check, self.name)
            rows.append(row)
            if self.fail_fast and row.is_failure:
                rows.extend(self._skip(check, self.checks[position + 1 :]))
                break
        return rows

    def _run_parallel(self) -> list[RelationCheck]:
        logger.debug("Suite {} dispatching to {} worker processes", self.name, self.jobs)
        with ProcessPoolExecutor(max_workers=self.jobs) as pool:
            return list(pool.map(run_check, self.checks, repeat(self.name)))

    def _skip(self, cause: VerificationCheck, remaining: list[VerificationCheck]) -> list[RelationCheck]:
        rows = []
        for check in remaining:
            row = check.skipped(f"Skipped after failure of {cause.name}")
            row.suite = self.name
            rows.append(row)
        return rows

    @staticmethod
    def _count(result: SuiteResult, row: RelationCheck) -> None:
        match row.status:
            case CheckStatus.PASSED:
                result.passed_checks += 1
            case CheckStatus.FAILED:
                result.failed_checks += 1
            case CheckStatus.ERROR:
                result.error_checks += 1
            case _:
                result.skipped_checks += 1

    @staticmethod
    def _finalize(result: SuiteResult) -> None:
        if result.error_checks:
            result.status = CheckStatus.ERROR
            result.message = f"{result.error_checks} checks raised errors"
        elif result.failed_checks:
            result.status = CheckStatus.FAILED
            result.message = f"{result.failed_checks} of {result.total_checks} checks failed"
        elif result.passed_checks == 0 and result.total_checks:
            result.status = CheckStatus.SKIPPED
            result.message = "All checks skipped"
        else:
            result.status = CheckStatus.PASSED
            result.message = f"All {result.passed_checks} checks passed"

    def __str__(self) -> str:
        return f"SuiteStage(name='{self.name}', checks={len(self.checks)})"

    def __repr__(self) -> str:
        return f"SuiteStage(name='{self.name}', description='{self.description}', jobs={self.jobs}, checks={len(self.checks)})"
