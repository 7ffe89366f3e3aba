"""Numerical semigroups and monomial ideals of their rings (dimension-1 backend)."""

from fibercone.semigroup.calculus import SemigroupCalculus
from fibercone.semigroup.ideal import SemigroupIdeal, ideal_from_monomials, maximal_ideal
from fibercone.semigroup.numerical import NumericalSemigroup, semigroup_from_generators

__all__ = [
    "NumericalSemigroup",
    "SemigroupCalculus",
    "SemigroupIdeal",
    "ideal_from_monomials",
    "maximal_ideal",
    "semigroup_from_generators",
]
