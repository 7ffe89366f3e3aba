"""Unit tests for ArtIdeal, certification and precision doubling."""

import pytest

from fibercone.artinian import (
    LocalCalculus,
    PrimeField,
    TruncatedLocalRing,
    ensure_precision,
    ideal_from_gens,
    maximal_ideal,
    sum_of_multiples,
    unit_ideal,
)
from fibercone.errors import (
    BudgetExceededError,
    NotContainedError,
    PrecisionExhaustedError,
    UnitGeneratorError,
)


class TestCertification:
    """Tests for generator-built ideals."""

    def test_order_of_monomial_ideal(self, plane):
        """Test that (x^3, y^3) contains m^5 but not m^4."""
        ring, x, y = plane
        J = ideal_from_gens(ring, [x**3, y**3])

        assert J.order == 5
        assert J.colength() == 9

    def test_truncation_too_small(self):
        """Test that N = 4 cannot certify (x^3, y^3)."""
        ring = TruncatedLocalRing(2, 4)
        x, y = ring.gens()

        with pytest.raises(PrecisionExhaustedError):
            ideal_from_gens(ring, [x**3, y**3])

    def test_unit_generator(self, plane):
        """Test that a generator with nonzero constant term is rejected."""
        ring, x, _ = plane

        with pytest.raises(UnitGeneratorError):
            ideal_from_gens(ring, [1 + x])

    def test_ensure_precision_doubles(self):
        """Test that N = 4 is doubled to 8 for (x^3, y^3)."""
        ring = TruncatedLocalRing(2, 4)
        x, y = ring.gens()

        assert ensure_precision(ring, [x**3, y**3]).N == 8

    def test_budget_exhausted(self):
        """Test that a zero budget raises BudgetExceededError."""
        ring = TruncatedLocalRing(2, 4)
        x, y = ring.gens()

        with pytest.raises(BudgetExceededError):
            ensure_precision(ring, [x**3, y**3], budget=0)

    def test_non_monomial_generators(self, plane):
        """Test (x^2 + y^2, x*y): colength 4, order 3."""
        ring, x, y = plane
        K = ideal_from_gens(ring, [x**2 + y**2, x * y])

        assert K.order == 3
        assert K.colength() == 4
        assert K.mu() == 2


class TestArithmetic:
    """Tests for derived ideals."""

    def test_maximal_and_unit(self, plane):
        """Test colength and mu of m and R."""
        ring, _, _ = plane

        assert maximal_ideal(ring).colength() == 1
        assert maximal_ideal(ring).mu() == 2
        assert unit_ideal(ring).colength() == 0

    def test_product_and_power(self, plane):
        """Test m * m = m^2 with colength 3."""
        ring, _, _ = plane
        m = maximal_ideal(ring)

        assert m.product(m) == m.power(2)
        assert m.power(2).colength() == 3
        assert m.power(3).mu() == 4

    def test_intersection(self, plane):
        """Test (x^2, y) meet (x, y^2) = m^2."""
        ring, x, y = plane
        a = ideal_from_gens(ring, [x**2, y])
        b = ideal_from_gens(ring, [x, y**2])

        assert a.intersect(b) == maximal_ideal(ring).power(2)

    def test_non_monomial_intersection(self, plane):
        """Test that intersecting with a larger ideal changes nothing."""
        ring, x, y = plane
        K = ideal_from_gens(ring, [x**2 + y**2, x * y])

        assert K.intersect(maximal_ideal(ring)) == K

    def test_colon(self, plane):
        """Test (m^2 : m) = m."""
        ring, _, _ = plane
        m = maximal_ideal(ring)

        assert m.power(2).colon(m) == m

    def test_colon_by_unit(self, plane):
        """Test that colon by R is rejected."""
        ring, _, _ = plane

        with pytest.raises(UnitGeneratorError):
            maximal_ideal(ring).colon(unit_ideal(ring))

    def test_sum(self, plane):
        """Test (x^2 + y^2, x*y) + (x^2, y^3) = m^2 with both summands m-primary."""
        ring, x, y = plane
        K = ideal_from_gens(ring, [x**2 + y**2, x * y])
        L = ideal_from_gens(ring, [x**2, y**3])

        assert K.sum(L) == maximal_ideal(ring).power(2)
        assert L.sum(K) == K.sum(L)

    def test_sum_of_monomial_ideals(self, plane):
        """Test (x^2, y^3) + (x^3, y^2) = (x^2, y^2)."""
        ring, x, y = plane
        a = ideal_from_gens(ring, [x**2, y**3])
        b = ideal_from_gens(ring, [x**3, y**2])

        assert a.sum(b) == ideal_from_gens(ring, [x**2, y**2])
        assert a.sum(b).colength() == 4

    def test_length_quotient(self, plane):
        """Test l(m/m^2) = 2 and the containment check."""
        ring, _, _ = plane
        m = maximal_ideal(ring)

        assert m.length_quotient(m.power(2)) == 2
        with pytest.raises(NotContainedError):
            m.power(2).length_quotient(m)

    def test_derived_ideals_independent_of_truncation(self):
        """Test that J*I has the same colength at N = 10 and N = 13."""
        lengths = []
        for N in (10, 13):
            ring = TruncatedLocalRing(2, N)
            x, y = ring.gens()
            I = ideal_from_gens(ring, [x**3, x**2 * y, y**3])
            J = ideal_from_gens(ring, [x**3, y**3])
            lengths.append(J.product(I).colength())

        assert lengths[0] == lengths[1]


class TestLocalCalculus:
    """Tests for the calculus wrapper."""

    def test_build_rebuilds_in_final_ring(self):
        """Test that build raises N and rebuilds every named ideal there."""
        ring = TruncatedLocalRing(2, 4)
        x, y = ring.gens()

        calc, ideals = LocalCalculus.build(ring, {"J": [x**3, y**3]})

        assert calc.ring.N == 8
        assert ideals["J"].ring == calc.ring

    def test_describe_keeps_input_generators(self, example_6_4):
        """Test that describe returns the generators as given."""
        calc, I, J = example_6_4

        assert calc.describe(J) == ["x^3", "y^3"]
        assert calc.describe(I) == ["x^3", "x^2*y", "y^3"]

    def test_witness(self, example_6_4):
        """Test that x^4*y^2 witnesses I^2 meet J outside JI."""
        calc, I, J = example_6_4
        meet = calc.intersect(calc.power(I, 2), J)

        assert calc.witness(meet, calc.product(J, I)) == "x^4*y^2"

    def test_prime_field_matches_rationals(self):
        """Test colength of (x^2 + y^2, x*y) over Q and GF(101)."""
        colengths = []
        for field in (None, PrimeField(101)):
            ring = TruncatedLocalRing(2, 8, field)
            x, y = ring.gens()
            calc, ideals = LocalCalculus.build(ring, {"K": [x**2 + y**2, x * y]})
            colengths.append(calc.colength(ideals["K"]))

        assert colengths == [4, 4]


class TestElements:
    """Tests for single elements against ideals."""

    def test_contains(self, plane):
        """Test membership in (x^2 + y^2, x*y), whose quotient is spanned by 1, x, y, x^2."""
        ring, x, y = plane
        K = ideal_from_gens(ring, [x**2 + y**2, x * y])

        assert K.contains(x**2 + y**2)
        assert K.contains(x**3)
        assert K.contains(x**2 + y**2 + x**7)
        assert not K.contains(x**2)
        assert not K.contains(x**2 - y**2)
        assert not K.contains(y)

    def test_contains_moves_element_into_ring(self, plane):
        """Test that an element written over a larger truncation is moved first."""
        ring, x, y = plane
        J = ideal_from_gens(ring, [x**3, y**3])
        u, v = TruncatedLocalRing(2, 13).gens()

        assert J.contains(u**4 * v**2)
        assert not J.contains(u**2 * v**2)

    def test_calculus_membership_witness(self, example_6_4):
        """Test that x^4*y^2 lies in I^2 meet J but not in JI."""
        calc, I, J = example_6_4
        x, y = calc.ring.gens()
        meet = calc.intersect(calc.power(I, 2), J)

        assert calc.contains(meet, x**4 * y**2)
        assert not calc.contains(calc.product(J, I), x**4 * y**2)
        assert calc.render(x**4 * y**2) == "x^4*y^2"

    def test_sum_of_multiples(self, plane):
        """Test m^4 + x*m^2 = (x^3, x^2*y, x*y^2, y^4)."""
        ring, x, y = plane
        m = maximal_ideal(ring)

        result = sum_of_multiples(m.power(4), [(x, m.power(2))])

        assert result == ideal_from_gens(ring, [x**3, x**2 * y, x * y**2, y**4])
        assert result.colength() == 7

    def test_principal_summand(self, plane):
        """Test that (x) alone is not m-primary but m^3 + x*R = (x, y^3)."""
        ring, x, y = plane
        m = maximal_ideal(ring)

        result = sum_of_multiples(m.power(3), [(x, unit_ideal(ring))])

        assert result == ideal_from_gens(ring, [x, y**3])

    def test_non_monomial_multiple(self, plane):
        """Test that m^3 + (x + y)*m misses exactly one quadric."""
        ring, x, y = plane
        m = maximal_ideal(ring)

        result = sum_of_multiples(m.power(3), [(x + y, m)])

        assert result.colength() == 4
        assert result.contains(x**2 + x * y)
        assert not result.contains(x**2)

    def test_zero_element_ignored(self, plane):
        """Test that the zero element adds nothing to the floor."""
        ring, _, _ = plane
        m = maximal_ideal(ring)

        assert sum_of_multiples(m.power(3), [(ring.poly({}), m)]) == m.power(3)
