"""IdealCalculus backend for truncated power series rings."""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence

from fibercone.artinian.ideal import (
    ArtIdeal,
    ensure_precision,
    ideal_from_gens,
    maximal_ideal,
    sum_of_multiples,
    unit_ideal,
)
from fibercone.artinian.ring import Poly, TruncatedLocalRing

logger = logging.getLogger(__name__)


class LocalCalculus:
    """Ideal calculus in k[[x_1..x_d]] through certified truncations.

    Powers and products are memoized per instance; an instance must stay
    confined to one worker.
    """

    def __init__(self, ring: TruncatedLocalRing):
        self.ring = ring
        self._products: dict[tuple[ArtIdeal, ArtIdeal], ArtIdeal] = {}
        self._powers: dict[tuple[ArtIdeal, int], ArtIdeal] = {}

    @classmethod
    def build(
        cls,
        ring: TruncatedLocalRing,
        generators: Mapping[str, Sequence[Poly]],
        *,
        budget: int = 4,
    ) -> tuple[LocalCalculus, dict[str, ArtIdeal]]:
        """Calculus over a ring large enough for every named generator list.

        Raises:
            BudgetExceededError: If the truncation cannot be made large enough
        """
        final = ensure_precision(ring, *generators.values(), budget=budget)
        if final.N != ring.N:
            logger.info(f"Truncation raised from {ring.N} to {final.N}")
        calc = cls(final)
        ideals = {name: calc.ideal(gens) for name, gens in generators.items()}
        return calc, ideals

    @property
    def dimension(self) -> int:
        return self.ring.d

    def ideal(self, gens: Sequence[Poly]) -> ArtIdeal:
        return ideal_from_gens(self.ring, [g.to_ring(self.ring) for g in gens])

    def maximal_ideal(self) -> ArtIdeal:
        return maximal_ideal(self.ring)

    def unit_ideal(self) -> ArtIdeal:
        return unit_ideal(self.ring)

    def sum(self, a: ArtIdeal, b: ArtIdeal) -> ArtIdeal:
        return a.sum(b)

    def product(self, a: ArtIdeal, b: ArtIdeal) -> ArtIdeal:
        key = (a, b)
        if key not in self._products:
            self._products[key] = a.product(b)
        return self._products[key]

    def power(self, a: ArtIdeal, n: int) -> ArtIdeal:
        if n <= 1:
            return a.power(n)
        key = (a, n)
        if key not in self._powers:
            self._powers[key] = self.product(a, self.power(a, n - 1))
        return self._powers[key]

    def colon(self, a: ArtIdeal, b: ArtIdeal) -> ArtIdeal:
        return a.colon(b)

    def intersect(self, a: ArtIdeal, b: ArtIdeal) -> ArtIdeal:
        return a.intersect(b)

    def subset(self, a: ArtIdeal, b: ArtIdeal) -> bool:
        return a.subset(b)

    def equals(self, a: ArtIdeal, b: ArtIdeal) -> bool:
        return a == b

    def length_quotient(self, a: ArtIdeal, b: ArtIdeal) -> int:
        return a.length_quotient(b)

    def colength(self, a: ArtIdeal) -> int:
        return a.colength()

    def mu(self, a: ArtIdeal) -> int:
        return a.mu()

    def witness(self, a: ArtIdeal, b: ArtIdeal) -> str | None:
        row = a.witness(b)
        return None if row is None else self.ring.render_row(row)

    def describe(self, a: ArtIdeal) -> list[str]:
        return [str(g) for g in a.generators()]

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------

    def contains(self, a: ArtIdeal, element: Poly) -> bool:
        return a.contains(element)

    def sum_of_multiples(
        self, floor: ArtIdeal, terms: Sequence[tuple[Poly, ArtIdeal]]
    ) -> ArtIdeal:
        return sum_of_multiples(floor, terms)

    def render(self, element: Poly) -> str:
        return str(element)
