"""Tests for dunkl_dirac.settings.Settings behavior."""

from typing import Any

import pytest

from dunkl_dirac.settings import Settings, get_settings

ENV_VARS = [
    "DUNKL_DIRAC_LOG_LEVEL",
    "DUNKL_DIRAC_DIMENSIONS",
    "DUNKL_DIRAC_K_MAX",
    "DUNKL_DIRAC_MU",
    "DUNKL_DIRAC_PARAMETER_SETS",
    "DUNKL_DIRAC_REALIZATION",
    "DUNKL_DIRAC_SUITES",
    "DUNKL_DIRAC_OUT_DIR",
    "DUNKL_DIRAC_JOBS",
]


@pytest.fixture
def clean_env(monkeypatch: pytest.MonkeyPatch) -> pytest.MonkeyPatch:
    for var in ENV_VARS:
        monkeypatch.delenv(var, raising=False)
        monkeypatch.delenv(var.lower(), raising=False)
    return monkeypatch


def test_settings_defaults(clean_env: pytest.MonkeyPatch):
    """Defaults should be stable even if external env or .env sets values.

    Both upper and lower case variants are deleted and .env loading is
    bypassed by passing `_env_file=None`.
    """
    s = Settings(_env_file=None)
    assert s.log_level == "INFO"
    assert s.dimensions == [3, 4]
    assert s.k_max is None
    assert s.mu == "random:20240"
    assert s.parameter_sets == 3
    assert s.realization == "both"
    assert s.suites == ["osp", "bi-relations", "casimirs", "monogenics", "ladder", "scalar"]
    assert s.out_dir == "out"
    assert s.jobs == 1


def test_env_overrides(clean_env: pytest.MonkeyPatch):
    """Prefixed environment variables override defaults."""
    clean_env.setenv("DUNKL_DIRAC_K_MAX", "2")
    clean_env.setenv("DUNKL_DIRAC_MU", "1/2,1/3,1/4")
    clean_env.setenv("DUNKL_DIRAC_REALIZATION", "scalar")
    clean_env.setenv("DUNKL_DIRAC_DIMENSIONS", "[3]")
    s = Settings(_env_file=None)
    assert s.k_max == 2
    assert s.mu == "1/2,1/3,1/4"
    assert s.realization == "scalar"
    assert s.dimensions == [3]


def test_case_insensitive_env_name(clean_env: pytest.MonkeyPatch):
    """Environment names are case-insensitive."""
    # lower-case variable name should still be picked up due to case_sensitive=False
    clean_env.setenv("dunkl_dirac_jobs", "4")
    s = Settings(_env_file=None)
    assert s.jobs == 4


def test_log_level_is_normalized(clean_env: pytest.MonkeyPatch):
    """Log levels are upper-cased."""
    clean_env.setenv("DUNKL_DIRAC_LOG_LEVEL", "debug")
    assert Settings(_env_file=None).log_level == "DEBUG"


def test_invalid_log_level_rejected():
    """Unknown log levels are rejected."""
    with pytest.raises(ValueError, match="Invalid log level"):
        Settings(log_level="verbose", _env_file=None)


def test_get_settings_singleton():
    """get_settings returns one cached instance."""
    a = get_settings()
    b = get_settings()
    assert a is b


def test_get_settings_cache_not_affected_by_new_env(monkeypatch: pytest.MonkeyPatch):
    """The cached settings ignore later environment changes."""
    # Ensure cache stability: first call caches values
    first = get_settings()
    original_jobs = first.jobs
    monkeypatch.setenv("DUNKL_DIRAC_JOBS", str(original_jobs + 7))
    second = get_settings()
    assert second is first
    assert second.jobs == original_jobs  # cache not invalidated


@pytest.mark.parametrize(
    "override,expected",
    [
        ({"jobs": 8}, 8),
        ({"mu": "random:7"}, "random:7"),
    ],
)
def test_direct_instantiation_with_overrides(override: dict[str, Any], expected: Any):
    """Keyword overrides are applied directly."""
    s = Settings(_env_file=None, **override)
    key = next(iter(override.keys()))
    assert getattr(s, key) == expected


def test_model_dump_contains_all_core_fields():
    """Every configurable field is dumped."""
    data = Settings(_env_file=None).model_dump()
    for field in ["log_level", "dimensions", "k_max", "mu", "parameter_sets", "realization", "suites", "out_dir", "jobs"]:
        assert field in data
