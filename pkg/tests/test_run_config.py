"""Tests for dunkl_dirac.run_config.RunConfig."""

import pytest
from pydantic import ValidationError

from dunkl_dirac.constants import ALL_SUITES, SUITE_CASIMIRS, SUITE_OSP
from dunkl_dirac.exceptions import InvalidConfigError
from dunkl_dirac.run_config import RunConfig
from dunkl_dirac.settings import Settings

MU3 = "1/2,1/3,1/4"


class TestRunConfigDefaults:
    def test_defaults(self):
        """Defaults of a bare config."""
        config = RunConfig.create()
        assert config.dimensions == [3, 4]
        assert config.k_max is None
        assert config.realization == "both"
        assert config.suites == list(ALL_SUITES)
        assert config.jobs == 1
        assert not config.inject_sign_flip

    def test_frozen(self):
        """Configs are immutable."""
        config = RunConfig.create()
        with pytest.raises(ValidationError):
            config.jobs = 2  # type: ignore[misc]


class TestRunConfigValidation:
    def test_dimensions_sorted_and_deduplicated(self):
        """Dimensions are sorted and deduplicated."""
        assert RunConfig.create(dimensions=[4, 3, 3]).dimensions == [3, 4]

    @pytest.mark.parametrize("dimensions", [[2], [], [3, 1]])
    def test_invalid_dimensions(self, dimensions):
        """Empty lists and n < 3 are rejected on the dimensions field."""
        with pytest.raises(InvalidConfigError) as exc_info:
            RunConfig.create(dimensions=dimensions)
        assert exc_info.value.field == "dimensions"

    def test_negative_k_max(self):
        """A negative k_max is rejected."""
        with pytest.raises(InvalidConfigError) as exc_info:
            RunConfig.create(k_max=-1)
        assert exc_info.value.field == "k_max"

    @pytest.mark.parametrize("field", ["jobs", "parameter_sets"])
    def test_counts_must_be_positive(self, field):
        """Counts of zero are rejected."""
        with pytest.raises(InvalidConfigError, match="must be at least 1"):
            RunConfig.create(**{field: 0})

    def test_unknown_suite(self):
        """Unknown suite names are rejected."""
        with pytest.raises(InvalidConfigError, match="unknown suites"):
            RunConfig.create(suites=["osp", "nope"])

    def test_empty_suites(self):
        """At least one suite must be selected."""
        with pytest.raises(InvalidConfigError, match="at least one suite"):
            RunConfig.create(suites=[])

    def test_suites_in_canonical_order(self):
        """Suites are reordered canonically."""
        config = RunConfig.create(suites=[SUITE_CASIMIRS, SUITE_OSP])
        assert config.suites == [SUITE_OSP, SUITE_CASIMIRS]

    def test_invalid_realization(self):
        """Unknown realizations are rejected."""
        with pytest.raises(InvalidConfigError) as exc_info:
            RunConfig.create(realization="neither")
        assert exc_info.value.field == "realization"

    def test_explicit_mu_must_fit_every_dimension(self):
        """An explicit mu must have n entries for every n."""
        with pytest.raises(InvalidConfigError, match="expected 4 parameters"):
            RunConfig.create(dimensions=[3, 4], mu=MU3)

    def test_explicit_mu(self):
        """An explicit mu gives a single parameter set."""
        config = RunConfig.create(dimensions=[3], mu=MU3)
        assert [p.as_strings() for p in config.parameter_sets_for(3)] == [["1/2", "1/3", "1/4"]]

    def test_non_positive_mu(self):
        """Non-positive mu entries are rejected."""
        with pytest.raises(InvalidConfigError, match="must be positive"):
            RunConfig.create(dimensions=[3], mu="1/2,-1,1")


class TestRunConfigDerived:
    def test_realizations(self):
        """The realization option expands to a list."""
        assert RunConfig.create().realizations == ["clifford", "scalar"]
        assert RunConfig.create(realization="scalar").realizations == ["scalar"]

    def test_depth_tables(self):
        """Default depths per realization and dimension."""
        config = RunConfig.create(dimensions=[3, 4, 5, 6])
        assert config.depth("clifford", 3) == 4
        assert config.depth("scalar", 4) == 4
        assert config.depth("monogenic", 4) == 2
        assert config.depth("monogenic", 6) == 1

    def test_k_max_overrides_depth(self):
        """k_max replaces every default depth."""
        config = RunConfig.create(k_max=1)
        assert config.depth("clifford", 3) == 1
        assert config.depth("monogenic", 4) == 1

    def test_random_parameter_sets(self):
        """Random parameter sets come from the seed."""
        config = RunConfig.create(dimensions=[3], mu="random:5", parameter_sets=2)
        sets = config.parameter_sets_for(3)
        assert len(sets) == 2
        assert sets == config.parameter_sets_for(3)

    def test_echo(self):
        """The echo omits output paths and worker counts."""
        config = RunConfig.create(dimensions=[3], mu=MU3, out_dir="elsewhere", jobs=2)
        echo = config.echo()
        assert "out_dir" not in echo
        assert "jobs" not in echo
        assert echo["dimensions"] == [3]
        assert echo["parameters"] == {"3": [["1/2", "1/3", "1/4"]]}


class TestRunConfigFromSettings:
    def test_settings_defaults(self):
        """Settings become the config defaults."""
        settings = Settings(_env_file=None, dimensions=[3], mu=MU3, jobs=2)
        config = RunConfig.from_settings(settings)
        assert config.dimensions == [3]
        assert config.jobs == 2

    def test_overrides_win_and_none_is_ignored(self):
        """Explicit overrides win and None leaves the setting."""
        settings = Settings(_env_file=None, dimensions=[3], mu=MU3)
        config = RunConfig.from_settings(settings, k_max=2, mu=None, realization="clifford")
        assert config.k_max == 2
        assert config.mu == MU3
        assert config.realization == "clifford"

    def test_invalid_override(self):
        """Invalid overrides are reported as config errors."""
        settings = Settings(_env_file=None)
        with pytest.raises(InvalidConfigError):
            RunConfig.from_settings(settings, jobs=0)
