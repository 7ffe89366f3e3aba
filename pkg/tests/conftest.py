"""Pytest configuration and shared fixtures."""

from pathlib import Path

import pytest

from fibercone.artinian import LocalCalculus, TruncatedLocalRing
from fibercone.invariants import StabilizationPolicy
from fibercone.semigroup import NumericalSemigroup, SemigroupCalculus

SESSIONS = Path(__file__).resolve().parent.parent / "sessions"


@pytest.fixture
def policy():
    """Default stabilization policy."""
    return StabilizationPolicy(window=3, n_max=40)


@pytest.fixture
def sessions_dir():
    """Directory holding the shipped sample sessions."""
    return SESSIONS


@pytest.fixture
def semigroup_pair():
    """Factory: (calc, I, J) for a semigroup ring, I and J given by exponents."""

    def build(gens, i_exps, j_exps):
        calc = SemigroupCalculus(NumericalSemigroup.from_generators(gens))
        return calc, calc.ideal(i_exps), calc.ideal(j_exps)

    return build


@pytest.fixture
def example_6_1(semigroup_pair):
    """<6,11,15,31> with I = (t^6, t^11, t^31), J = (t^6)."""
    return semigroup_pair([6, 11, 15, 31], [6, 11, 31], [6])


@pytest.fixture
def example_6_2(semigroup_pair):
    """<7,15,17,33> with I = (t^7, t^17, t^33), J = (t^7)."""
    return semigroup_pair([7, 15, 17, 33], [7, 17, 33], [7])


@pytest.fixture
def example_6_3(semigroup_pair):
    """<4,5,6,7> with I = (t^4, t^5, t^6), J = (t^4)."""
    return semigroup_pair([4, 5, 6, 7], [4, 5, 6], [4])


@pytest.fixture
def plane():
    """k[[x,y]] truncated at N = 10 with its variables."""
    ring = TruncatedLocalRing(2, 10)
    x, y = ring.gens()
    return ring, x, y


@pytest.fixture
def example_6_4(plane):
    """k[[x,y]] with I = (x^3, x^2*y, y^3), J = (x^3, y^3)."""
    ring, x, y = plane
    calc, ideals = LocalCalculus.build(
        ring, {"I": [x**3, x**2 * y, y**3], "J": [x**3, y**3]}
    )
    return calc, ideals["I"], ideals["J"]


@pytest.fixture
def example_6_5():
    """k[[x,y,z]] with the monomial ideal I and the non-monomial reduction J."""
    ring = TruncatedLocalRing(3, 10)
    x, y, z = ring.gens()
    calc, ideals = LocalCalculus.build(
        ring,
        {
            "I": [x**3, y**3, z**3, x * y, y * z, z * x],
            "J": [x**3 + y * z, y**3 + z**3 + x * z, x * z + x * y],
        },
    )
    return calc, ideals["I"], ideals["J"]
