"""Run configuration defaults using Pydantic Settings.

Values can be provided via environment variables or a ``.env`` file and fall
back to the defaults below. The CLI overrides any of them per invocation; the
merged result is validated once more as a ``RunConfig``.

Environment variable prefix: ``DUNKL_DIRAC_`` (e.g. ``DUNKL_DIRAC_K_MAX``).
"""

from functools import lru_cache
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from dunkl_dirac.constants import ALL_SUITES, DEFAULT_PARAMETER_SETS, DEFAULT_SEED, REALIZATION_BOTH


class Settings(BaseSettings):
    """Default run settings.

    Attributes map directly to environment variables using the ``DUNKL_DIRAC_``
    prefix (case-insensitive). For example, ``jobs`` <- ``DUNKL_DIRAC_JOBS``.
    """

    log_level: Literal["TRACE", "DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="INFO",
        description="Application log level",
    )
    dimensions: list[int] = Field(
        default=[3, 4],
        description="Dimensions n to verify",
    )  # fmt: skip
    k_max: int | None = Field(
        default=None,
        description="Highest test degree; unset uses the per-dimension defaults",
    )  # fmt: skip
    mu: str = Field(
        default=f"random:{DEFAULT_SEED}",
        description="Dunkl parameters: 'random:SEED' or a comma separated list such as '1/2,1/3,1/4'",
    )  # fmt: skip
    parameter_sets: int = Field(
        default=DEFAULT_PARAMETER_SETS,
        description="Number of sampled parameter sets per dimension",
    )  # fmt: skip
    realization: Literal["clifford", "scalar", "both"] = Field(
        default=REALIZATION_BOTH,
        description="Which realization of the operators to verify",
    )  # fmt: skip
    suites: list[str] = Field(
        default=list(ALL_SUITES),
        description="Suites to run",
    )  # fmt: skip
    out_dir: str = Field(
        default="out",
        description="Directory for report.json, timings.json and exported artifacts",
    )  # fmt: skip
    jobs: int = Field(
        default=1,
        description="Worker processes per suite",
    )  # fmt: skip

    @field_validator("log_level", mode="before")
    @classmethod
    def validate_log_level(cls, v: str | None) -> str:
        """Normalize and validate log level."""
        if v is None:
            return "INFO"

        v_upper = str(v).upper()

        allowed = {"TRACE", "DEBUG", "INFO", "WARNING", "ERROR"}
        if v_upper not in allowed:
            raise ValueError(f"Invalid log level: {v}. Must be one of: {', '.join(sorted(allowed))}")

        return v_upper

    model_config = SettingsConfigDict(
        env_prefix="DUNKL_DIRAC_",
        case_sensitive=False,
        extra="ignore",
        env_file=".env",
        env_file_encoding="utf-8",
    )


@lru_cache
def get_settings() -> Settings:
    """Return the cached ``Settings`` instance.

    The first invocation reads environment variables / .env file; subsequent
    calls reuse the same object.
    """

    return Settings()


__all__ = ["Settings", "get_settings"]
