"""Monomial ideals of a numerical semigroup ring as exponent sets.

An ideal is stored as a boolean table over [0, stable_from) together with the
rule that every integer >= stable_from is an exponent. Tables are trimmed to
the least admissible stable_from on construction, so two ideals are equal iff
their tables are equal.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable

import numpy as np
import numpy.typing as npt

from fibercone.errors import (
    ExponentNotInSemigroupError,
    MixedParentsError,
    NegativePowerError,
    NotContainedError,
    ZeroIdealError,
)
from fibercone.semigroup.numerical import NumericalSemigroup

logger = logging.getLogger(__name__)


class SemigroupIdeal:
    """Exponent set E of a monomial ideal in k[[S]].

    E is closed under adding generators of S. The zero ideal carries the
    ``is_zero`` flag and an empty table.
    """

    __slots__ = ("parent", "_table", "_zero", "_hash", "_minimal")

    def __init__(
        self,
        parent: NumericalSemigroup,
        table: npt.NDArray[np.bool_],
        *,
        zero: bool = False,
    ):
        self.parent = parent
        self._zero = zero
        self._hash: int | None = None
        self._minimal: tuple[int, ...] | None = None
        if zero:
            self._table = np.zeros(0, dtype=bool)
        else:
            self._table = _trim(parent, table)
        self._table.setflags(write=False)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_monomials(cls, parent: NumericalSemigroup, exps: Iterable[int]) -> SemigroupIdeal:
        """Ideal generated by t^e for e in exps (empty list gives the zero ideal).

        Raises:
            ExponentNotInSemigroupError: If an exponent is not in S
        """
        exps = sorted(set(exps))
        if not exps:
            return cls.zero(parent)
        for e in exps:
            if not parent.contains(e):
                raise ExponentNotInSemigroupError(
                    f"t^{e} is not an element of the ring", exponent=e, semigroup=parent
                )
        length = exps[-1] + parent.conductor
        members = parent.membership(length)
        table = np.zeros(length, dtype=bool)
        for e in exps:
            table[e:] |= members[: length - e]
        return cls(parent, table)

    @classmethod
    def zero(cls, parent: NumericalSemigroup) -> SemigroupIdeal:
        return cls(parent, np.zeros(0, dtype=bool), zero=True)

    @classmethod
    def unit(cls, parent: NumericalSemigroup) -> SemigroupIdeal:
        return cls(parent, parent.membership(parent.conductor))

    @classmethod
    def maximal(cls, parent: NumericalSemigroup) -> SemigroupIdeal:
        return cls.from_monomials(parent, parent.generators)

    # ------------------------------------------------------------------
    # Data
    # ------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self._zero

    @property
    def stable_from(self) -> int:
        """Every integer at or above this bound is an exponent."""
        return len(self._table)

    def contains(self, n: int) -> bool:
        """True iff t^n lies in the ideal."""
        if self._zero or n < 0:
            return False
        if n >= len(self._table):
            return True
        return bool(self._table[n])

    def table(self, length: int) -> npt.NDArray[np.bool_]:
        """Exponent table over [0, length)."""
        if self._zero:
            return np.zeros(length, dtype=bool)
        out = np.ones(length, dtype=bool)
        head = min(length, len(self._table))
        out[:head] = self._table[:head]
        return out

    def exponents_below(self, bound: int) -> list[int]:
        """Exponents of the ideal smaller than bound."""
        return [int(n) for n in np.flatnonzero(self.table(bound))]

    def minimal_generators(self) -> tuple[int, ...]:
        """E minus (M + E), with M the nonzero members of S."""
        if self._minimal is None:
            if self._zero:
                self._minimal = ()
            else:
                # Nothing at or above stable_from + a_1 is minimal
                length = len(self._table) + self.parent.generators[0]
                own = self.table(length)
                shifted = np.zeros(length, dtype=bool)
                for g in self.parent.generators:
                    shifted[g:] |= own[: length - g]
                self._minimal = tuple(int(n) for n in np.flatnonzero(own & ~shifted))
        return self._minimal

    # ------------------------------------------------------------------
    # Ideal arithmetic
    # ------------------------------------------------------------------

    def _check_parent(self, other: SemigroupIdeal) -> None:
        if self.parent != other.parent:
            raise MixedParentsError(
                "Ideals belong to different semigroup rings",
                left=self.parent,
                right=other.parent,
            )

    def sum(self, other: SemigroupIdeal) -> SemigroupIdeal:
        self._check_parent(other)
        if self._zero:
            return other
        if other._zero:
            return self
        length = max(self.stable_from, other.stable_from)
        return SemigroupIdeal(self.parent, self.table(length) | other.table(length))

    def product(self, other: SemigroupIdeal) -> SemigroupIdeal:
        """Minkowski sum of the generators of self with the exponents of other."""
        self._check_parent(other)
        if self._zero or other._zero:
            return SemigroupIdeal.zero(self.parent)
        length = self.stable_from + other.stable_from
        right = other.table(length)
        out = np.zeros(length, dtype=bool)
        for a in self.minimal_generators():
            if a < length:
                out[a:] |= right[: length - a]
        return SemigroupIdeal(self.parent, out)

    def shift(self, exponent: int) -> SemigroupIdeal:
        """t^exponent times the ideal.

        Raises:
            ExponentNotInSemigroupError: If exponent is not in S
        """
        if not self.parent.contains(exponent):
            raise ExponentNotInSemigroupError(
                f"t^{exponent} is not an element of the ring",
                exponent=exponent,
                semigroup=self.parent,
            )
        if self._zero:
            return self
        out = np.zeros(exponent + self.stable_from, dtype=bool)
        out[exponent:] = self._table
        return SemigroupIdeal(self.parent, out)

    def power(self, n: int) -> SemigroupIdeal:
        if n < 0:
            raise NegativePowerError("Ideal powers need n >= 0", exponent=n)
        result = SemigroupIdeal.unit(self.parent)
        for _ in range(n):
            result = self.product(result)
        return result

    def intersect(self, other: SemigroupIdeal) -> SemigroupIdeal:
        self._check_parent(other)
        if self._zero or other._zero:
            return SemigroupIdeal.zero(self.parent)
        length = max(self.stable_from, other.stable_from)
        return SemigroupIdeal(self.parent, self.table(length) & other.table(length))

    def colon(self, other: SemigroupIdeal) -> SemigroupIdeal:
        """(self : other) = {n in S : n + b in E for every generator b of other}.

        Raises:
            ZeroIdealError: If other is the zero ideal
        """
        self._check_parent(other)
        if other._zero:
            raise ZeroIdealError("Colon by the zero ideal is undefined")
        if self._zero:
            return self
        length = self.stable_from
        gens = other.minimal_generators()
        out = self.parent.membership(length).copy()
        for b in gens:
            out &= self.table(length + b)[b:]
        return SemigroupIdeal(self.parent, out)

    def subset(self, other: SemigroupIdeal) -> bool:
        """True iff self is contained in other."""
        self._check_parent(other)
        if self._zero:
            return True
        if other._zero:
            return False
        length = max(self.stable_from, other.stable_from)
        return not bool(np.any(self.table(length) & ~other.table(length)))

    def colength(self) -> int:
        """l(R/I) = |S minus E|."""
        if self._zero:
            raise ZeroIdealError("The zero ideal has infinite colength")
        length = self.stable_from
        return int(np.count_nonzero(self.parent.membership(length) & ~self._table))

    def length_quotient(self, other: SemigroupIdeal) -> int:
        """l(self/other) = |E_self minus E_other| for other contained in self.

        Raises:
            NotContainedError: If other is not contained in self
        """
        if not other.subset(self):
            raise NotContainedError(
                "Quotient length needs the second ideal inside the first",
                witness=other.witness(self),
            )
        if self._zero:
            return 0
        if other._zero:
            raise ZeroIdealError("Quotient by the zero ideal has infinite length")
        return other.colength() - self.colength()

    def mu(self) -> int:
        return len(self.minimal_generators())

    def witness(self, other: SemigroupIdeal) -> int | None:
        """Least exponent of self not in other, or None when self is inside other."""
        self._check_parent(other)
        if self._zero:
            return None
        if other._zero:
            return self.minimal_generators()[0]
        length = max(self.stable_from, other.stable_from)
        missing = np.flatnonzero(self.table(length) & ~other.table(length))
        return int(missing[0]) if missing.size else None

    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SemigroupIdeal):
            return NotImplemented
        return (
            self.parent == other.parent
            and self._zero == other._zero
            and np.array_equal(self._table, other._table)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.parent, self._zero, self._table.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        if self._zero:
            return "SemigroupIdeal(0)"
        gens = ", ".join(f"t^{g}" for g in self.minimal_generators())
        return f"SemigroupIdeal({gens})"


def _trim(parent: NumericalSemigroup, table: npt.NDArray[np.bool_]) -> npt.NDArray[np.bool_]:
    """Cut table back to the least bound B >= conductor with an all-true tail."""
    gaps = np.flatnonzero(~table)
    bound = max(parent.conductor, int(gaps[-1]) + 1 if gaps.size else 0)
    if bound > len(table):
        padded = parent.membership(bound)
        padded[: len(table)] &= table
        table = padded
    return table[:bound].copy()


def ideal_from_monomials(parent: NumericalSemigroup, exps: Iterable[int]) -> SemigroupIdeal:
    """Monomial ideal (t^e : e in exps)."""
    return SemigroupIdeal.from_monomials(parent, exps)


def maximal_ideal(parent: NumericalSemigroup) -> SemigroupIdeal:
    """The maximal ideal, exponent set S minus {0}."""
    return SemigroupIdeal.maximal(parent)
