"""IdealCalculus backend for numerical semigroup rings (dimension 1)."""

from __future__ import annotations

import logging
from collections.abc import Sequence

from fibercone.errors import ExponentNotInSemigroupError
from fibercone.semigroup.ideal import SemigroupIdeal
from fibercone.semigroup.numerical import NumericalSemigroup

logger = logging.getLogger(__name__)


class SemigroupCalculus:
    """Monomial ideal calculus in k[[S]].

    Powers and products are memoized per instance; an instance must stay
    confined to one worker.
    """

    def __init__(self, semigroup: NumericalSemigroup):
        self.semigroup = semigroup
        self._products: dict[tuple[SemigroupIdeal, SemigroupIdeal], SemigroupIdeal] = {}
        self._powers: dict[tuple[SemigroupIdeal, int], SemigroupIdeal] = {}

    @property
    def dimension(self) -> int:
        return 1

    def ideal(self, exps: list[int]) -> SemigroupIdeal:
        return SemigroupIdeal.from_monomials(self.semigroup, exps)

    def maximal_ideal(self) -> SemigroupIdeal:
        return SemigroupIdeal.maximal(self.semigroup)

    def unit_ideal(self) -> SemigroupIdeal:
        return SemigroupIdeal.unit(self.semigroup)

    def sum(self, a: SemigroupIdeal, b: SemigroupIdeal) -> SemigroupIdeal:
        return a.sum(b)

    def product(self, a: SemigroupIdeal, b: SemigroupIdeal) -> SemigroupIdeal:
        key = (a, b)
        if key not in self._products:
            self._products[key] = a.product(b)
        return self._products[key]

    def power(self, a: SemigroupIdeal, n: int) -> SemigroupIdeal:
        if n <= 1:
            return a.power(n)
        key = (a, n)
        if key not in self._powers:
            self._powers[key] = self.product(a, self.power(a, n - 1))
            logger.debug(f"Cached power {n} of {a}")
        return self._powers[key]

    def colon(self, a: SemigroupIdeal, b: SemigroupIdeal) -> SemigroupIdeal:
        return a.colon(b)

    def intersect(self, a: SemigroupIdeal, b: SemigroupIdeal) -> SemigroupIdeal:
        return a.intersect(b)

    def subset(self, a: SemigroupIdeal, b: SemigroupIdeal) -> bool:
        return a.subset(b)

    def equals(self, a: SemigroupIdeal, b: SemigroupIdeal) -> bool:
        return a == b

    def length_quotient(self, a: SemigroupIdeal, b: SemigroupIdeal) -> int:
        return a.length_quotient(b)

    def colength(self, a: SemigroupIdeal) -> int:
        return a.colength()

    def mu(self, a: SemigroupIdeal) -> int:
        return a.mu()

    def witness(self, a: SemigroupIdeal, b: SemigroupIdeal) -> str | None:
        exponent = a.witness(b)
        return None if exponent is None else f"t^{exponent}"

    def describe(self, a: SemigroupIdeal) -> list[str]:
        return [f"t^{g}" for g in a.minimal_generators()]

    # ------------------------------------------------------------------
    # Elements are exponents: the integer n stands for t^n
    # ------------------------------------------------------------------

    def contains(self, a: SemigroupIdeal, element: int) -> bool:
        """True iff t^element lies in a.

        Raises:
            ExponentNotInSemigroupError: If element is not in S
        """
        if not self.semigroup.contains(element):
            raise ExponentNotInSemigroupError(
                f"t^{element} is not an element of the ring",
                exponent=element,
                semigroup=self.semigroup,
            )
        return a.contains(element)

    def sum_of_multiples(
        self, floor: SemigroupIdeal, terms: Sequence[tuple[int, SemigroupIdeal]]
    ) -> SemigroupIdeal:
        result = floor
        for exponent, ideal in terms:
            result = result.sum(ideal.shift(exponent))
        return result

    def render(self, element: int) -> str:
        return f"t^{element}"
