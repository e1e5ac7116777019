"""Data models for the verification pipeline.

``RelationCheck`` is the one row type every suite produces. The report splits
into a deterministic part (``report.json``) and wall-clock data
(``timings.json``) so that repeated runs give byte-identical reports.
"""

from typing import Any

import arrow
from pydantic import BaseModel, Field, model_validator

from .enums import CheckStatus, RunOutcome

REPORT_SCHEMA_VERSION = 1

TIMING_FIELDS = frozenset({"executed_at", "execution_time_ms", "total_execution_time_ms"})


class Witness(BaseModel):
    """A basis element on which two operators differ, with both images in canonical text."""

    basis_element: str
    lhs: str
    rhs: str
    degree: int | None = None


class CheckParameters(BaseModel):
    """The parameters a check ran with."""

    n: int = 0
    mu: list[str] = Field(default_factory=list)
    subset_a: list[int] | None = None
    subset_b: list[int] | None = None
    k_max: int | None = None
    extra: dict[str, Any] = Field(default_factory=dict)


class RelationCheck(BaseModel):
    """Outcome of checking one identity at one parameter point."""

    model_config = {"use_enum_values": True}

    name: str
    realization: str
    parameters: CheckParameters = Field(default_factory=CheckParameters)
    status: CheckStatus
    message: str = ""
    witness: Witness | None = None
    details: dict[str, Any] = Field(default_factory=dict)
    suite: str | None = None
    executed_at: str | None = None  # ISO 8601 UTC timestamp
    execution_time_ms: float | None = None

    @model_validator(mode="after")
    def _failure_has_witness(self) -> RelationCheck:
        if self.status == CheckStatus.FAILED and self.witness is None:
            raise ValueError(f"Failed check '{self.name}' must carry a witness")
        return self

    @classmethod
    def passed(
        cls,
        name: str,
        realization: str,
        parameters: CheckParameters,
        message: str = "holds",
        details: dict[str, Any] | None = None,
    ) -> RelationCheck:
        return cls(
            name=name,
            realization=realization,
            parameters=parameters,
            status=CheckStatus.PASSED,
            message=message,
            details=details or {},
        )

    @classmethod
    def failed(
        cls,
        name: str,
        realization: str,
        parameters: CheckParameters,
        witness: Witness,
        message: str = "does not hold",
        details: dict[str, Any] | None = None,
    ) -> RelationCheck:
        return cls(
            name=name,
            realization=realization,
            parameters=parameters,
            status=CheckStatus.FAILED,
            message=message,
            witness=witness,
            details=details or {},
        )

    @classmethod
    def skipped(
        cls,
        name: str,
        realization: str,
        parameters: CheckParameters,
        message: str,
        details: dict[str, Any] | None = None,
    ) -> RelationCheck:
        return cls(
            name=name,
            realization=realization,
            parameters=parameters,
            status=CheckStatus.SKIPPED,
            message=message,
            details=details or {},
        )

    @property
    def is_failure(self) -> bool:
        return self.status in (CheckStatus.FAILED, CheckStatus.ERROR)


class SuiteResult(BaseModel):
    """Result of one suite (a pipeline stage)."""

    model_config = {"use_enum_values": True}

    suite: str
    description: str = ""
    status: CheckStatus
    message: str
    checks: list[RelationCheck] = Field(default_factory=list)
    executed_at: str | None = None
    execution_time_ms: float | None = None
    total_checks: int = 0
    passed_checks: int = 0
    failed_checks: int = 0
    error_checks: int = 0
    skipped_checks: int = 0


class VerificationReport(BaseModel):
    """Complete result of a verification run."""

    model_config = {"use_enum_values": True}

    schema_version: int = REPORT_SCHEMA_VERSION
    status: CheckStatus
    outcome: RunOutcome
    message: str
    config: dict[str, Any] = Field(default_factory=dict)
    suite_results: list[SuiteResult] = Field(default_factory=list)
    executed_at: str = Field(default_factory=lambda: arrow.utcnow().isoformat())
    total_execution_time_ms: float | None = None
    total_checks: int = 0
    passed_checks: int = 0
    failed_checks: int = 0
    error_checks: int = 0
    skipped_checks: int = 0

    @property
    def rows(self) -> list[RelationCheck]:
        return [row for suite in self.suite_results for row in suite.checks]

    @property
    def succeeded(self) -> bool:
        return self.failed_checks == 0 and self.error_checks == 0

    def deterministic_dump(self) -> dict[str, Any]:
        """The report without any wall-clock field."""
        data = self.model_dump(mode="json", exclude=set(TIMING_FIELDS))
        for suite in data["suite_results"]:
            for key in TIMING_FIELDS:
                suite.pop(key, None)
            for row in suite["checks"]:
                for key in TIMING_FIELDS:
                    row.pop(key, None)
        return data

    def timings_dump(self) -> dict[str, Any]:
        """Wall-clock data keyed by suite and check position."""
        return {
            "executed_at": self.executed_at,
            "total_execution_time_ms": self.total_execution_time_ms,
            "suites": [
                {
                    "suite": suite.suite,
                    "executed_at": suite.executed_at,
                    "execution_time_ms": suite.execution_time_ms,
                    "checks": [{"name": row.name, "execution_time_ms": row.execution_time_ms} for row in suite.checks],
                }
                for suite in self.suite_results
            ],
        }
