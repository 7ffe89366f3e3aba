"""The ideal calculus both backends implement.

Everything in :mod:`fibercone.invariants` is written against this protocol,
so the same code evaluates numerical semigroup rings (d = 1) and truncated
power series rings (d >= 1).

Single ring elements appear only where an invariant is defined through
elements (superficial sequences and membership witnesses). Their type is
backend specific: an exponent n for t^n in a semigroup ring, a ``Poly`` in a
power series ring.
"""

from collections.abc import Sequence
from typing import Any, Protocol, TypeVar

IdealT = TypeVar("IdealT")


class IdealCalculus(Protocol[IdealT]):
    """Exact arithmetic on m-primary ideals of a Cohen-Macaulay local ring."""

    @property
    def dimension(self) -> int:
        """Krull dimension d of the ring."""
        ...

    def ideal(self, elements: Sequence[Any]) -> IdealT:
        """Ideal generated by elements; it must be m-primary."""
        ...

    def maximal_ideal(self) -> IdealT: ...

    def unit_ideal(self) -> IdealT: ...

    def sum(self, a: IdealT, b: IdealT) -> IdealT: ...

    def product(self, a: IdealT, b: IdealT) -> IdealT: ...

    def power(self, a: IdealT, n: int) -> IdealT: ...

    def colon(self, a: IdealT, b: IdealT) -> IdealT: ...

    def intersect(self, a: IdealT, b: IdealT) -> IdealT: ...

    def subset(self, a: IdealT, b: IdealT) -> bool: ...

    def equals(self, a: IdealT, b: IdealT) -> bool: ...

    def length_quotient(self, a: IdealT, b: IdealT) -> int:
        """l(a/b) for b contained in a."""
        ...

    def colength(self, a: IdealT) -> int:
        """l(R/a)."""
        ...

    def mu(self, a: IdealT) -> int:
        """Minimal number of generators."""
        ...

    def witness(self, a: IdealT, b: IdealT) -> str | None:
        """An element of a outside b rendered as text, None when a is inside b."""
        ...

    def describe(self, a: IdealT) -> list[str]:
        """Minimal generators rendered as session text."""
        ...

    def contains(self, a: IdealT, element: Any) -> bool:
        """True iff the element lies in a."""
        ...

    def sum_of_multiples(self, floor: IdealT, terms: Sequence[tuple[Any, IdealT]]) -> IdealT:
        """floor + sum of element * ideal over terms; floor makes the result m-primary."""
        ...

    def render(self, element: Any) -> str:
        """Element as session text."""
        ...
