"""Algebraic identities of monomial ideals, checked on several semigroup rings."""

import pytest

from fibercone.semigroup import NumericalSemigroup, SemigroupCalculus

# (generators, I, J)
RINGS = [
    ([6, 11, 15, 31], [6, 11, 31], [6]),
    ([7, 15, 17, 33], [7, 17, 33], [7]),
    ([4, 5, 6, 7], [4, 5, 6], [4]),
    ([3, 5], [3, 5], [3]),
    ([5, 6, 7, 8], [5, 6], [5]),
]

SEMIGROUPS = [
    [3, 5],
    [3, 4],
    [3, 4, 5],
    [4, 5, 6],
    [4, 5, 6, 7],
    [5, 6, 7, 8],
    [6, 7, 8, 9, 10],
    [6, 11, 15, 31],
    [7, 15, 17, 33],
    [5, 7, 9],
    [8, 9, 10, 11, 12, 13, 14],
]


@pytest.fixture(params=RINGS, ids=lambda case: "<" + ",".join(map(str, case[0])) + ">")
def ring(request):
    """(calc, I, J, m) for one of the example rings."""
    gens, i_exps, j_exps = request.param
    calc = SemigroupCalculus(NumericalSemigroup.from_generators(gens))
    return calc, calc.ideal(i_exps), calc.ideal(j_exps), calc.maximal_ideal()


class TestIdealIdentities:
    """Tests for identities every triple of ideals satisfies."""

    def test_distributivity(self, ring):
        """Test I(J + m) = IJ + Im."""
        calc, I, J, m = ring

        left = calc.product(I, calc.sum(J, m))
        right = calc.sum(calc.product(I, J), calc.product(I, m))

        assert left == right

    def test_distributivity_over_powers(self, ring):
        """Test m(I^2 + J) = mI^2 + mJ."""
        calc, I, J, m = ring

        left = calc.product(m, calc.sum(calc.power(I, 2), J))
        right = calc.sum(calc.product(m, calc.power(I, 2)), calc.product(m, J))

        assert left == right

    def test_colon_of_product_contains_factor(self, ring):
        """Test I inside (IJ : J) and I inside (Im : m)."""
        calc, I, J, m = ring

        assert calc.subset(I, calc.colon(calc.product(I, J), J))
        assert calc.subset(I, calc.colon(calc.product(I, m), m))

    def test_colength_additivity(self, ring):
        """Test l(m/I^2) = l(m/I) + l(I/I^2) and l(R/I^2) = l(R/m) + l(m/I^2)."""
        calc, I, _, m = ring
        square = calc.power(I, 2)

        through = calc.length_quotient(m, I) + calc.length_quotient(I, square)

        assert calc.length_quotient(m, square) == through
        assert calc.colength(square) == calc.colength(m) + calc.length_quotient(m, square)

    def test_mu_is_length_modulo_m(self, ring):
        """Test mu(A) = l(A/mA) for A = I, J, m and I^2."""
        calc, I, J, m = ring

        for A in (I, J, m, calc.power(I, 2)):
            assert calc.mu(A) == calc.length_quotient(A, calc.product(m, A))


class TestConstructionInvariance:
    """Tests for ideals and semigroups that must not depend on how they are written."""

    def test_padding_ideal_generators(self, ring):
        """Test that adding redundant generators t^(a+s) leaves I unchanged."""
        calc, I, _, _ = ring
        minimal = list(I.minimal_generators())
        padded = minimal + [a + s for a in minimal for s in calc.semigroup.generators]

        assert calc.ideal(padded) == I

    def test_minimal_generators_rebuild_ideal(self, ring):
        """Test that building from the minimal generators is idempotent."""
        calc, I, J, m = ring

        for A in (I, J, m, calc.product(I, m)):
            rebuilt = calc.ideal(list(A.minimal_generators()))
            assert rebuilt == A
            assert calc.ideal(list(rebuilt.minimal_generators())) == rebuilt

    def test_exponent_table_rebuilds_ideal(self, ring):
        """Test that every exponent below the stable bound generates the same ideal."""
        calc, I, _, _ = ring

        assert calc.ideal(I.exponents_below(I.stable_from)) == I

    @pytest.mark.parametrize("gens", SEMIGROUPS)
    def test_padding_semigroup_generators(self, gens):
        """Test that sums of generators are redundant."""
        S = NumericalSemigroup.from_generators(gens)
        padded = NumericalSemigroup.from_generators([*gens, gens[0] + gens[-1], 2 * gens[0]])

        assert padded == S
        assert padded.gaps() == S.gaps()


class TestSymmetry:
    """Tests for symmetry against the gap count."""

    @pytest.mark.parametrize("gens", SEMIGROUPS)
    def test_symmetric_iff_half_gaps(self, gens):
        """Test symmetric exactly when #gaps = (F + 1)/2."""
        S = NumericalSemigroup.from_generators(gens)

        assert S.is_symmetric() == (2 * len(S.gaps()) == S.frobenius + 1)

    @pytest.mark.parametrize("gens", SEMIGROUPS)
    def test_gap_count_bound(self, gens):
        """Test #gaps >= (F + 1)/2 for every numerical semigroup."""
        S = NumericalSemigroup.from_generators(gens)

        assert 2 * len(S.gaps()) >= S.frobenius + 1
