"""Numerical semigroups S = <a_1, ..., a_k>, the exponent monoids of k[[t^a_1, ..., t^a_k]].

Usage:
    S = semigroup_from_generators([6, 11, 15, 31])

    S.frobenius          # 25
    S.contains(37)       # True
    S.apery_set(6)       # least member of each residue class mod 6
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable

import numpy as np
import numpy.typing as npt

from fibercone.errors import EmptyInputError, NotCoprimeError, NotMemberError

logger = logging.getLogger(__name__)


def _sieve(gens: list[int], bound: int) -> npt.NDArray[np.bool_]:
    """Membership table for [0, bound] of the monoid generated by gens."""
    table = np.zeros(bound + 1, dtype=bool)
    table[0] = True
    while True:
        grown = table.copy()
        for g in gens:
            if g <= bound:
                grown[g:] |= table[: bound + 1 - g]
        if np.array_equal(grown, table):
            return table
        table = grown


class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators.

    Membership is a bit table over [0, conductor) plus the rule that every
    integer at or above the conductor is a member. Instances are immutable.
    """

    __slots__ = ("_generators", "_frobenius", "_table")

    def __init__(self, generators: tuple[int, ...], frobenius: int, table: npt.NDArray[np.bool_]):
        self._generators = generators
        self._frobenius = frobenius
        self._table = table
        self._table.setflags(write=False)

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> NumericalSemigroup:
        """Build a semigroup, dropping redundant generators.

        Raises:
            EmptyInputError: If gens is empty
            NotCoprimeError: If gcd(gens) != 1
        """
        candidates = sorted(set(gens))
        if not candidates:
            raise EmptyInputError("Semigroup needs at least one generator")
        if candidates[0] < 1:
            raise EmptyInputError(
                "Semigroup generators must be positive", generators=candidates
            )
        if math.gcd(*candidates) != 1:
            raise NotCoprimeError(
                "Semigroup generators are not coprime", generators=candidates
            )

        # Frobenius number is below a_1 * a_k
        bound = max(candidates[0] * candidates[-1], 1)
        members = _sieve(candidates, bound)

        minimal = tuple(
            g
            for g in candidates
            if not any(members[h] and members[g - h] for h in range(1, g))
        )

        gaps = np.flatnonzero(~members)
        frobenius = int(gaps[-1]) if gaps.size else -1
        table = members[: frobenius + 1].copy()

        logger.debug(
            "Numerical semigroup built",
            extra={"generators": minimal, "frobenius": frobenius},
        )
        return cls(minimal, frobenius, table)

    # ------------------------------------------------------------------
    # Basic data
    # ------------------------------------------------------------------

    @property
    def generators(self) -> tuple[int, ...]:
        return self._generators

    @property
    def frobenius(self) -> int:
        return self._frobenius

    @property
    def conductor(self) -> int:
        return self._frobenius + 1

    def contains(self, n: int) -> bool:
        """True iff n is a member of the semigroup."""
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return bool(self._table[n])

    def __contains__(self, n: object) -> bool:
        return isinstance(n, int) and self.contains(n)

    def membership(self, length: int) -> npt.NDArray[np.bool_]:
        """Membership table over [0, length), length >= conductor."""
        table = np.ones(max(length, 0), dtype=bool)
        head = min(length, self.conductor)
        table[:head] = self._table[:head]
        return table

    def gaps(self) -> list[int]:
        """All non-members in [1, frobenius]."""
        return [int(n) for n in np.flatnonzero(~self._table)]

    def ring_multiplicity(self) -> int:
        """e(R): least positive member."""
        return self._generators[0]

    def embedding_dimension(self) -> int:
        """mu(m): number of minimal generators."""
        return len(self._generators)

    # ------------------------------------------------------------------
    # Diagnostics
    # ------------------------------------------------------------------

    def apery_set(self, m: int) -> list[int]:
        """Least member of each residue class modulo m, indexed by residue.

        Raises:
            NotMemberError: If m is not a positive member
        """
        if m <= 0 or not self.contains(m):
            raise NotMemberError("Apery set needs a positive member", element=m)
        apery: list[int | None] = [None] * m
        missing = m
        n = 0
        while missing:
            if self.contains(n) and apery[n % m] is None:
                apery[n % m] = n
                missing -= 1
            n += 1
        return [a for a in apery if a is not None]

    def is_symmetric(self) -> bool:
        """True iff exactly one of x, F - x is a member for every 0 <= x <= F."""
        f = self._frobenius
        return all(self.contains(x) != self.contains(f - x) for x in range(f + 1))

    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self._generators == other._generators

    def __hash__(self) -> int:
        return hash(("NumericalSemigroup", self._generators))

    def __repr__(self) -> str:
        return f"NumericalSemigroup<{', '.join(map(str, self._generators))}>"


def semigroup_from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Build the numerical semigroup generated by gens."""
    return NumericalSemigroup.from_generators(gens)
