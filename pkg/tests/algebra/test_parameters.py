"""Tests for parameter sets, subsets and permutations."""

from fractions import Fraction

import pytest

from dunkl_dirac.algebra.parameters import (
    ParameterSet,
    all_subsets,
    cyclic_permutation,
    full_set,
    identity_permutation,
    invert_permutation,
    permute_subset,
    prefix,
    subset_mask,
    subset_text,
    validate_permutation,
)
from dunkl_dirac.exceptions import DimensionMismatchError, InvalidConfigError


class TestSubsets:
    def test_prefix_and_full_set(self):
        """Prefix and full index sets."""
        assert prefix(2) == frozenset({1, 2})
        assert full_set(3) == frozenset({1, 2, 3})

    def test_all_subsets_ordered_by_mask(self):
        """Subsets are enumerated in bitmask order."""
        subsets = all_subsets(3)
        assert len(subsets) == 8
        assert subsets[0] == frozenset()
        assert [subset_mask(s) for s in subsets] == list(range(8))

    def test_subset_text_sorted(self):
        """Subset text is sorted and braced."""
        assert subset_text({3, 1}) == "{1,3}"
        assert subset_text(()) == "{}"


class TestPermutations:
    def test_cyclic(self):
        """The cyclic shift and the identity permutation."""
        assert cyclic_permutation(3) == (2, 3, 1)
        assert identity_permutation(3) == (1, 2, 3)

    def test_inverse(self):
        """The inverse permutation undoes the subset action."""
        perm = cyclic_permutation(4)
        inverse = invert_permutation(perm)
        assert inverse == (4, 1, 2, 3)
        assert permute_subset(inverse, permute_subset(perm, {1, 3})) == frozenset({1, 3})

    def test_invalid_permutation(self):
        """Repeated entries are not a permutation."""
        with pytest.raises(InvalidConfigError):
            validate_permutation((1, 1, 2))


class TestParameterSet:
    def test_of_parses_strings(self):
        """String, Fraction and int entries are all accepted."""
        params = ParameterSet.of("1/2", "1/3", 2)
        assert params.mu == (Fraction(1, 2), Fraction(1, 3), Fraction(2))
        assert params.n == 3

    def test_parse_list(self):
        """Comma-separated parameter lists."""
        assert ParameterSet.parse("1/2,1/3,1/4") == ParameterSet.of("1/2", "1/3", "1/4")

    @pytest.mark.parametrize("values", [("0", "1"), ("1", "-1/2")])
    def test_non_positive_rejected(self, values: tuple[str, ...]):
        """Zero or negative mu is a config error on the mu field."""
        with pytest.raises(InvalidConfigError) as excinfo:
            ParameterSet.of(*values)
        assert excinfo.value.field == "mu"

    def test_gamma(self, params3: ParameterSet):
        """gamma_{1,2} = 2/2 + 1/2 + 1/3."""
        assert params3.gamma({1, 2}) == Fraction(11, 6)
        assert params3.gamma(()) == 0

    def test_mu_of_out_of_range(self, params3: ParameterSet):
        """mu_i outside 1..n raises."""
        with pytest.raises(DimensionMismatchError):
            params3.mu_of(4)

    def test_pushforward_and_pullback(self, params3: ParameterSet):
        """Pushforward and pullback along the cyclic shift."""
        perm = cyclic_permutation(3)
        assert params3.pushforward(perm) == ParameterSet.of("1/4", "1/2", "1/3")
        assert params3.pullback(perm) == ParameterSet.of("1/3", "1/4", "1/2")
        assert params3.pullback(perm).pushforward(perm) == params3

    def test_pushforward_wrong_length(self, params3: ParameterSet):
        """A permutation of the wrong length is rejected."""
        with pytest.raises(DimensionMismatchError):
            params3.pushforward((1, 2))

    def test_as_strings_and_str(self, params3: ParameterSet):
        """Exact string forms of the parameters."""
        assert params3.as_strings() == ["1/2", "1/3", "1/4"]
        assert str(params3) == "(1/2, 1/3, 1/4)"
