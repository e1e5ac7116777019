"""Test configuration for pytest."""

import os
import sys

import pytest

# Add the src directory to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src")))

from dunkl_dirac.algebra.parameters import ParameterSet  # noqa: E402
from dunkl_dirac.operators import CliffordRealization, ScalarRealization, get_realization  # noqa: E402


@pytest.fixture
def params3() -> ParameterSet:
    """A generic parameter set at n = 3."""
    return ParameterSet.of("1/2", "1/3", "1/4")


@pytest.fixture
def params4() -> ParameterSet:
    return ParameterSet.of("1/2", "2/3", "3/5", "1/7")


@pytest.fixture
def clifford3(params3: ParameterSet) -> CliffordRealization:
    return get_realization("clifford", params3)


@pytest.fixture
def scalar3(params3: ParameterSet) -> ScalarRealization:
    return get_realization("scalar", params3)
