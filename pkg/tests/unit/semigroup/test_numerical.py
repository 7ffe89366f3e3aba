"""Unit tests for NumericalSemigroup."""

import pytest

from fibercone.errors import EmptyInputError, NotCoprimeError, NotMemberError
from fibercone.semigroup import NumericalSemigroup, semigroup_from_generators


class TestConstruction:
    """Tests for building semigroups from generators."""

    def test_redundant_generators_dropped(self):
        """Test that generators expressible by smaller ones are removed."""
        S = NumericalSemigroup.from_generators([8, 4, 5, 9])

        assert S.generators == (4, 5)

    def test_empty_generators_rejected(self):
        """Test that an empty generator list raises EmptyInputError."""
        with pytest.raises(EmptyInputError):
            NumericalSemigroup.from_generators([])

    def test_non_positive_generator_rejected(self):
        """Test that zero is not accepted as a generator."""
        with pytest.raises(EmptyInputError):
            NumericalSemigroup.from_generators([0, 3, 5])

    def test_common_divisor_rejected(self):
        """Test that generators with gcd > 1 raise NotCoprimeError."""
        with pytest.raises(NotCoprimeError):
            NumericalSemigroup.from_generators([4, 6, 10])

    def test_natural_numbers(self):
        """Test that <1> has no gaps and Frobenius number -1."""
        S = semigroup_from_generators([1])

        assert S.frobenius == -1
        assert S.conductor == 0
        assert S.gaps() == []


class TestMembership:
    """Tests for membership, gaps and Frobenius number."""

    def test_frobenius_of_6_11_15_31(self):
        """Test the Frobenius number of <6,11,15,31>."""
        S = NumericalSemigroup.from_generators([6, 11, 15, 31])

        assert S.frobenius == 25
        assert S.conductor == 26

    def test_gaps_of_6_11_15_31(self):
        """Test the full gap list of <6,11,15,31>."""
        S = NumericalSemigroup.from_generators([6, 11, 15, 31])

        assert S.gaps() == [1, 2, 3, 4, 5, 7, 8, 9, 10, 13, 14, 16, 19, 20, 25]

    def test_contains(self):
        """Test membership below and above the conductor."""
        S = NumericalSemigroup.from_generators([6, 11, 15, 31])

        assert S.contains(0)
        assert S.contains(37)
        assert not S.contains(25)
        assert not S.contains(-6)
        assert 26 in S
        assert 19 not in S

    def test_membership_table_past_conductor(self):
        """Test that the membership table is all true from the conductor on."""
        S = NumericalSemigroup.from_generators([3, 5])
        table = S.membership(12)

        assert list(table[:8]) == [True, False, False, True, False, True, True, False]
        assert table[8:].all()

    def test_invariants_of_ring(self):
        """Test e(R) and mu(m)."""
        S = NumericalSemigroup.from_generators([7, 15, 17, 33])

        assert S.ring_multiplicity() == 7
        assert S.embedding_dimension() == 4


class TestDiagnostics:
    """Tests for Apery sets and symmetry."""

    def test_apery_set(self):
        """Test the Apery set of <6,11,15,31> with respect to 6."""
        S = NumericalSemigroup.from_generators([6, 11, 15, 31])

        apery = S.apery_set(6)

        assert sorted(apery) == [0, 11, 15, 22, 26, 31]
        assert max(apery) - 6 == S.frobenius

    def test_apery_set_needs_member(self):
        """Test that a non-member raises NotMemberError."""
        S = NumericalSemigroup.from_generators([6, 11, 15, 31])

        with pytest.raises(NotMemberError):
            S.apery_set(7)

    @pytest.mark.parametrize("gens", [[3, 5], [4, 5, 6], [5, 6, 7, 8], [8, 9, 10, 11, 12, 13, 14]])
    def test_symmetric(self, gens):
        """Test semigroups known to be symmetric."""
        assert NumericalSemigroup.from_generators(gens).is_symmetric()

    @pytest.mark.parametrize("gens", [[4, 5, 6, 7], [6, 11, 15, 31], [3, 4, 5]])
    def test_not_symmetric(self, gens):
        """Test semigroups known not to be symmetric."""
        assert not NumericalSemigroup.from_generators(gens).is_symmetric()

    def test_equality_by_generators(self):
        """Test that equal generator sets give equal, equally hashed semigroups."""
        a = NumericalSemigroup.from_generators([4, 5, 6])
        b = NumericalSemigroup.from_generators([6, 5, 4, 10])

        assert a == b
        assert hash(a) == hash(b)
