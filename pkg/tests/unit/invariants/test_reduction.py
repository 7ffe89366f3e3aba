"""Unit tests for reduction numbers and the Valabrega-Valla certificate."""

import pytest

from fibercone.errors import DimensionMismatchError, NotAReductionError, NotContainedError
from fibercone.invariants import (
    StabilizationPolicy,
    reduction_number,
    valabrega_valla,
    valabrega_valla_certificate,
)


class TestReductionNumber:
    """Tests for reduction_number."""

    @pytest.mark.parametrize(
        "example, expected",
        [("example_6_1", 2), ("example_6_2", 2), ("example_6_3", 2), ("example_6_4", 2)],
    )
    def test_known_values(self, request, policy, example, expected):
        """Test reduction numbers of the worked examples."""
        calc, I, J = request.getfixturevalue(example)

        assert reduction_number(calc, I, J, policy) == expected

    def test_reduction_one(self, example_6_5, policy):
        """Test that I^2 = JI gives r = 1."""
        calc, I, J = example_6_5

        assert reduction_number(calc, I, J, policy) == 1

    def test_ideal_is_its_own_reduction(self, semigroup_pair, policy):
        """Test r = 0 when J = I."""
        calc, I, J = semigroup_pair([4, 5, 6, 7], [4], [4])

        assert reduction_number(calc, I, J, policy) == 0

    def test_too_many_generators(self, example_6_3, policy):
        """Test that a J with mu(J) != d is rejected."""
        calc, I, _ = example_6_3

        with pytest.raises(DimensionMismatchError):
            reduction_number(calc, I, I, policy)

    def test_not_contained(self, example_6_3, policy):
        """Test that t^7 is not inside (t^4, t^5, t^6)."""
        calc, I, _ = example_6_3

        with pytest.raises(NotContainedError) as exc_info:
            reduction_number(calc, I, calc.ideal([7]), policy)

        assert exc_info.value.extra_context["witness"] == "t^7"

    def test_not_a_reduction(self, example_6_3):
        """Test that (t^5) never reaches I^(n+1)."""
        calc, I, _ = example_6_3

        with pytest.raises(NotAReductionError):
            reduction_number(calc, I, calc.ideal([5]), StabilizationPolicy(window=3, n_max=6))


class TestValabregaValla:
    """Tests for the certificate I^n meet J = J I^(n-1)."""

    def test_holds(self, example_6_1, policy):
        """Test that the certificate holds through r + 1."""
        calc, I, J = example_6_1

        certificate = valabrega_valla_certificate(calc, I, J, policy)

        assert certificate.holds
        assert certificate.checked_through == 3
        assert certificate.failed_degree is None

    def test_fails_with_witness(self, example_6_3, policy):
        """Test that t^11 lies in I^2 meet J but not in JI."""
        calc, I, J = example_6_3

        certificate = valabrega_valla_certificate(calc, I, J, policy)

        assert not certificate.holds
        assert certificate.failed_degree == 2
        assert certificate.witness == "t^11"

    def test_plane_fails(self, example_6_4, policy):
        """Test the failure in k[[x,y]] and its witness."""
        calc, I, J = example_6_4

        certificate = valabrega_valla_certificate(calc, I, J, policy)

        assert not certificate.holds
        assert certificate.witness == "x^4*y^2"

    def test_boolean_wrapper(self, example_6_2, example_6_3, policy):
        """Test the boolean form on a passing and a failing pair."""
        assert valabrega_valla(*example_6_2, policy)
        assert not valabrega_valla(*example_6_3, policy)
