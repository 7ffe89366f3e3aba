"""Exact ideal calculus in k[[x_1..x_d]] through certified truncations R/m^N."""

from fibercone.artinian.calculus import LocalCalculus
from fibercone.artinian.echelon import Echelon
from fibercone.artinian.field import PrimeField, RationalField, field_for
from fibercone.artinian.ideal import (
    ArtIdeal,
    ensure_precision,
    ideal_from_gens,
    maximal_ideal,
    sum_of_multiples,
    unit_ideal,
)
from fibercone.artinian.ring import Poly, TruncatedLocalRing

__all__ = [
    "ArtIdeal",
    "Echelon",
    "LocalCalculus",
    "Poly",
    "PrimeField",
    "RationalField",
    "TruncatedLocalRing",
    "ensure_precision",
    "field_for",
    "ideal_from_gens",
    "maximal_ideal",
    "sum_of_multiples",
    "unit_ideal",
]
