"""Enums for the verification pipeline.

Kept apart from the models to avoid circular imports.
"""

from enum import StrEnum


class CheckStatus(StrEnum):
    """Status of an individual check or a suite."""

    PENDING = "pending"
    RUNNING = "running"
    PASSED = "passed"
    FAILED = "failed"
    ERROR = "error"
    SKIPPED = "skipped"


class RunOutcome(StrEnum):
    """Overall verdict of a verification run."""

    PENDING = "pending"
    VERIFIED = "verified"
    REFUTED = "refuted"  # at least one identity failed with a witness
    ERROR = "error"
