"""Validated configuration of one verification run.

``Settings`` supplies defaults from the environment; the CLI overlays its
options and the merged values are validated here. Every violation surfaces as
``InvalidConfigError`` before any suite runs.
"""

from typing import Any, Literal

from pydantic import BaseModel, Field, ValidationError, field_validator

from dunkl_dirac.algebra.parameters import ParameterSet
from dunkl_dirac.constants import (
    ALL_SUITES,
    CLIFFORD_DEPTHS,
    FALLBACK_DEPTH,
    MONOGENIC_DEPTHS,
    REALIZATION_BOTH,
    REALIZATION_CLIFFORD,
    REALIZATION_SCALAR,
    SCALAR_DEPTHS,
)
from dunkl_dirac.exceptions import InvalidConfigError
from dunkl_dirac.sampling import resolve_parameter_sets
from dunkl_dirac.settings import Settings, get_settings

DepthKind = Literal["clifford", "scalar", "monogenic"]

_DEPTH_TABLES = {
    "clifford": CLIFFORD_DEPTHS,
    "scalar": SCALAR_DEPTHS,
    "monogenic": MONOGENIC_DEPTHS,
}


class RunConfig(BaseModel):
    """Everything a run needs; echoed into ``report.json``."""

    model_config = {"frozen": True}

    dimensions: list[int] = Field(default_factory=lambda: [3, 4])
    k_max: int | None = None
    mu: str = "random:20240"
    parameter_sets: int = 3
    realization: Literal["clifford", "scalar", "both"] = REALIZATION_BOTH
    suites: list[str] = Field(default_factory=lambda: list(ALL_SUITES))
    out_dir: str = "out"
    jobs: int = 1
    inject_sign_flip: bool = False

    @field_validator("dimensions")
    @classmethod
    def _validate_dimensions(cls, v: list[int]) -> list[int]:
        if not v:
            raise ValueError("at least one dimension is required")
        if any(n < 3 for n in v):
            raise ValueError(f"dimensions must be >= 3, got {v}")
        return sorted(set(v))

    @field_validator("k_max")
    @classmethod
    def _validate_k_max(cls, v: int | None) -> int | None:
        if v is not None and v < 0:
            raise ValueError(f"k_max must be >= 0, got {v}")
        return v

    @field_validator("parameter_sets", "jobs")
    @classmethod
    def _validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"must be at least 1, got {v}")
        return v

    @field_validator("suites")
    @classmethod
    def _validate_suites(cls, v: list[str]) -> list[str]:
        unknown = [s for s in v if s not in ALL_SUITES]
        if unknown:
            raise ValueError(f"unknown suites {unknown}; choose from {', '.join(ALL_SUITES)}")
        if not v:
            raise ValueError("at least one suite is required")
        # Suites always run in their canonical order
        return [s for s in ALL_SUITES if s in v]

    @classmethod
    def create(cls, **values: Any) -> RunConfig:
        """Validate ``values``, raising ``InvalidConfigError`` on the first violation."""
        try:
            config = cls(**values)
        except ValidationError as e:
            error = e.errors()[0]
            field = ".".join(str(part) for part in error["loc"]) or "config"
            raise InvalidConfigError(field, error.get("input"), error["msg"]) from e
        # Explicit parameter lists must fit every dimension
        for n in config.dimensions:
            config.parameter_sets_for(n)
        return config

    @classmethod
    def from_settings(cls, settings: Settings | None = None, **overrides: Any) -> RunConfig:
        """Settings defaults overlaid with the non-None ``overrides``."""
        settings = settings or get_settings()
        values = settings.model_dump(exclude={"log_level"})
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls.create(**values)

    @property
    def realizations(self) -> list[str]:
        if self.realization == REALIZATION_BOTH:
            return [REALIZATION_CLIFFORD, REALIZATION_SCALAR]
        return [self.realization]

    def depth(self, kind: DepthKind, n: int) -> int:
        """The test degree for ``kind`` at dimension ``n``; an explicit ``k_max`` wins."""
        if self.k_max is not None:
            return self.k_max
        return _DEPTH_TABLES[kind].get(n, FALLBACK_DEPTH)

    def parameter_sets_for(self, n: int) -> list[ParameterSet]:
        return resolve_parameter_sets(self.mu, n, self.parameter_sets)

    def echo(self) -> dict[str, Any]:
        """The configuration as written into the report, with the resolved parameters."""
        data = self.model_dump(mode="json", exclude={"out_dir", "jobs"})
        data["parameters"] = {str(n): [p.as_strings() for p in self.parameter_sets_for(n)] for n in self.dimensions}
        return data
