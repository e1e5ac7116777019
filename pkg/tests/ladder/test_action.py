"""Tests for the ladder action on the sector basis."""

from fractions import Fraction

import pytest

from dunkl_dirac.algebra.blade import Blade
from dunkl_dirac.algebra.parameters import ParameterSet
from dunkl_dirac.ladder import (
    LadderStep,
    ladder_actions,
    ladder_coefficient,
    ladder_graph,
    verify_irreducibility,
    verify_ladder_action,
    verify_spectral_value,
)
from dunkl_dirac.monogenics import BasisLabel, MultiIndex, enumerate_labels
from dunkl_dirac.verification import CheckStatus

K1_PLUS = LadderStep(1, 1)
K1_MINUS = LadderStep(1, -1)
UNIT = Blade.unit(3)


def label(*entries: int, blade: Blade = UNIT) -> BasisLabel:
    return BasisLabel(MultiIndex(entries), blade)


class TestCoefficients:
    def test_no_target(self, params3: ParameterSet):
        """A step leaving the simplex has no target and zero coefficient."""
        action = ladder_coefficient(K1_PLUS, label(1, 0), params3)
        assert action.target is None
        assert action.coefficient == 0

    def test_round_trip_product(self, params3: ParameterSet):
        """Applying K1- twice returns to the label with the product of both coefficients."""
        forward = ladder_coefficient(K1_MINUS, label(1, 0), params3)
        backward = ladder_coefficient(K1_MINUS, label(0, 1), params3)
        assert forward.target == MultiIndex((0, 1))
        assert backward.target == MultiIndex((1, 0))
        assert forward.coefficient * backward.coefficient == Fraction(-155, 6)

    @pytest.mark.parametrize("step", [K1_PLUS, K1_MINUS])
    @pytest.mark.parametrize("k", [1, 2])
    def test_action_n3(self, params3: ParameterSet, step: LadderStep, k: int):
        """K acts on every basis element as its table entry says."""
        for basis_label in enumerate_labels(3, k, [UNIT, Blade.generator(3, 3)]):
            row = verify_ladder_action(step, basis_label, params3)
            assert row.status == CheckStatus.PASSED, row.message

    @pytest.mark.parametrize("entries", [(1, 0), (0, 1), (1, 1), (2, 0)])
    def test_spectral_value(self, params3: ParameterSet, entries: tuple[int, ...]):
        """K^2 acts by alpha, matching the coefficient product."""
        for step in (K1_PLUS, K1_MINUS):
            row = verify_spectral_value(step, label(*entries), params3)
            assert row.status == CheckStatus.PASSED, row.message

    def test_spectral_value_details(self, params3: ParameterSet):
        """Details record alpha and the coefficient product."""
        row = verify_spectral_value(K1_MINUS, label(1, 0), params3)
        assert row.details == {"alpha": "-155/6", "coefficient_product": "-155/6", "test_elements": 2}


class TestGraph:
    def test_degree_zero_actions(self, params3: ParameterSet):
        """Every step annihilates degree zero."""
        actions = ladder_actions(params3, 0, UNIT)
        assert [str(action.step) for action in actions] == ["K1+", "K1-"]
        assert all(action.target is None and action.coefficient == 0 for action in actions)

    def test_degree_one_graph(self, params3: ParameterSet):
        """In degree one the two labels are linked both ways."""
        graph = ladder_graph(params3, 1, UNIT)
        assert graph == {MultiIndex((0, 1)): {MultiIndex((1, 0))}, MultiIndex((1, 0)): {MultiIndex((0, 1))}}

    @pytest.mark.parametrize("k", [1, 2])
    def test_irreducible_n3(self, params3: ParameterSet, k: int):
        """The ladder graph of each degree is connected."""
        row = verify_irreducibility(params3, k, UNIT)
        assert row.status == CheckStatus.PASSED
        assert row.details["labels"] == k + 1

    def test_irreducible_n4(self, params4: ParameterSet):
        """Connectivity also holds for n = 4."""
        assert verify_irreducibility(params4, 1, Blade.unit(4)).status == CheckStatus.PASSED

    def test_action_order(self, params3: ParameterSet):
        """Actions are listed by step, then by source label."""
        actions = ladder_actions(params3, 1, UNIT)
        assert [(str(a.step), str(a.source)) for a in actions] == [
            ("K1+", "(0,1)"),
            ("K1+", "(1,0)"),
            ("K1-", "(0,1)"),
            ("K1-", "(1,0)"),
        ]
