"""Unit tests for ideal classification flags."""

import pytest

from fibercone.invariants import classify


class TestClassify:
    def test_semigroup_almost_minimal_mixed(self, example_6_3, policy):
        """Test flags for (t^4, t^5, t^6) in <4,5,6,7>."""
        flags = classify(*example_6_3, policy)

        assert flags.sally
        assert flags.goto_min_mult
        assert not flags.goto_almost_min_mult
        assert not flags.min_mixed
        assert flags.almost_min_mixed
        assert flags.e == 4
        assert flags.e_top == 4
        assert flags.length_mi_mj == 0

    def test_plane(self, example_6_4, policy):
        """Test flags for (x^3, x^2*y, y^3)."""
        flags = classify(*example_6_4, policy)

        assert flags.sally
        assert flags.goto_almost_min_mult
        assert flags.almost_min_mixed
        assert flags.e == 9
        assert flags.e_top == 3
        assert flags.f0 == 3
        assert all(check.holds for check in flags.checks)
        assert "almost_minimal_mixed_cm" in {check.name for check in flags.checks}

    @pytest.mark.slow
    def test_three_space_minimal_mixed(self, example_6_5, policy):
        """Test that e_(2)(m|I) = mu - d + 1 with r = 1."""
        flags = classify(*example_6_5, policy)

        assert flags.min_mixed
        assert not flags.sally
        assert flags.goto_almost_min_mult
        assert flags.e == 11
        assert flags.e_top == 4
        assert flags.reduction_number == 1

    def test_neither_class(self, example_6_1, policy):
        """Test an ideal far from minimal mixed multiplicity."""
        flags = classify(*example_6_1, policy)

        assert flags.sally
        assert not flags.min_mixed
        assert not flags.almost_min_mixed
        assert flags.colength == 2
        assert flags.length_mi_mj == 2
