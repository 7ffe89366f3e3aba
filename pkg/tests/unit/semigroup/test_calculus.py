"""Unit tests for SemigroupCalculus."""

import pytest

from fibercone.errors import ExponentNotInSemigroupError
from fibercone.semigroup import NumericalSemigroup, SemigroupCalculus


class TestSemigroupCalculus:
    """Tests for the semigroup backend of IdealCalculus."""

    def test_dimension_is_one(self):
        """Test that semigroup rings have dimension one."""
        calc = SemigroupCalculus(NumericalSemigroup.from_generators([3, 5]))

        assert calc.dimension == 1

    def test_powers_are_memoized(self, example_6_3):
        """Test that repeated powers return the cached ideal."""
        calc, I, _ = example_6_3

        assert calc.power(I, 3) is calc.power(I, 3)
        assert calc.power(I, 1) == I

    def test_witness_rendering(self, example_6_3):
        """Test that witnesses render as t^k."""
        calc, I, J = example_6_3

        assert calc.witness(calc.power(I, 2), calc.product(J, I)) == "t^11"
        assert calc.witness(J, I) is None

    def test_describe(self, example_6_1):
        """Test that describe lists minimal generators in session syntax."""
        calc, I, _ = example_6_1

        assert calc.describe(I) == ["t^6", "t^11", "t^31"]

    def test_mu_of_powers(self, example_6_3):
        """Test mu(I^n) = 1, 3, 4, 4."""
        calc, I, _ = example_6_3

        assert [calc.mu(calc.power(I, n)) for n in range(4)] == [1, 3, 4, 4]

    def test_unit_ideal(self, example_6_3):
        """Test that the unit ideal has colength 0 and contains m."""
        calc, _, _ = example_6_3

        assert calc.colength(calc.unit_ideal()) == 0
        assert calc.subset(calc.maximal_ideal(), calc.unit_ideal())

    def test_contains(self, example_6_1):
        """Test that t^37 lies in mI^2 but not in mJI."""
        calc, I, J = example_6_1
        m = calc.maximal_ideal()

        assert calc.contains(calc.product(m, calc.power(I, 2)), 37)
        assert not calc.contains(calc.product(m, calc.product(J, I)), 37)
        assert calc.render(37) == "t^37"

    def test_contains_needs_member(self, example_6_3):
        """Test that t^3 is rejected before membership is decided."""
        calc, I, _ = example_6_3

        with pytest.raises(ExponentNotInSemigroupError):
            calc.contains(I, 3)

    def test_sum_of_multiples(self, example_6_3):
        """Test I^2 + t^4 * m = I^2 + Jm, which contains t^11 = t^4 * t^7."""
        calc, I, J = example_6_3
        m = calc.maximal_ideal()

        result = calc.sum_of_multiples(calc.power(I, 2), [(4, m)])

        assert result == calc.sum(calc.power(I, 2), calc.product(J, m))
        assert calc.contains(result, 11)
        assert calc.sum_of_multiples(I, []) == I
