"""Tests for the permutation and parity symmetries of Gamma."""

import pytest

from dunkl_dirac.algebra.parameters import cyclic_permutation
from dunkl_dirac.bi_algebra import verify_parity_symmetry, verify_permutation_equivariance
from dunkl_dirac.exceptions import DimensionMismatchError
from dunkl_dirac.operators import CliffordRealization
from dunkl_dirac.verification import CheckStatus


class TestPermutationEquivariance:
    @pytest.mark.parametrize("subset", [[1, 2], [1, 2, 3], [2]])
    def test_cyclic(self, clifford3: CliffordRealization, subset: list[int]):
        """Gamma transforms covariantly under the cyclic shift."""
        row = verify_permutation_equivariance(clifford3, subset, cyclic_permutation(3), 1)
        assert row.status == CheckStatus.PASSED
        assert row.parameters.extra == {"permutation": [2, 3, 1]}

    def test_transposition(self, clifford3: CliffordRealization):
        """A transposition is handled the same way."""
        assert verify_permutation_equivariance(clifford3, [1, 3], (2, 1, 3), 1).status == CheckStatus.PASSED

    def test_wrong_length(self, clifford3: CliffordRealization):
        """The permutation must have length n."""
        with pytest.raises(DimensionMismatchError):
            verify_permutation_equivariance(clifford3, [1, 2], (2, 1), 1)


class TestParitySymmetry:
    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_commutes_with_full_gamma(self, clifford3: CliffordRealization, i: int):
        """Each Z_i commutes with Gamma_[n]."""
        assert verify_parity_symmetry(clifford3, i, [1, 2, 3], 1).status == CheckStatus.PASSED

    def test_commutes_with_partial_gamma(self, clifford3: CliffordRealization):
        """Z_i commutes with Gamma_A when i is outside A."""
        row = verify_parity_symmetry(clifford3, 3, [1, 2], 2)
        assert row.status == CheckStatus.PASSED
        assert row.name == "[Z3,Gamma_A]=0"
