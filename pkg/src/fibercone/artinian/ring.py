"""The truncated power series ring k[[x_1..x_d]]/m^N and its polynomials.

Monomials are indexed in degree-then-lexicographic order (higher powers of
earlier variables first within a degree). The index of a monomial depends only
on d, so index tables are shared by all rings of the same dimension and grow
lazily as higher degrees are requested.

Usage:
    ring = TruncatedLocalRing(2, 8)
    x, y = ring.gens()
    f = x**3 + 2 * x * y
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator, Mapping
from fractions import Fraction
from typing import Any

from fibercone.artinian.field import ExactField, Number, RationalField, Scalar
from fibercone.errors import BadParametersError, MixedRingsError

logger = logging.getLogger(__name__)

Exponent = tuple[int, ...]
Row = dict[int, Scalar]


def _compositions(total: int, parts: int) -> Iterator[Exponent]:
    """Exponent vectors of the given total degree, lexicographically descending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


class MonomialTable:
    """Index of monomials in d variables, extended one degree at a time."""

    def __init__(self, d: int):
        self.d = d
        self.exponents: list[Exponent] = []
        self.degrees: list[int] = []
        self.index: dict[Exponent, int] = {}
        # starts[k] = number of monomials of degree < k
        self.starts: list[int] = [0]

    def ensure(self, bound: int) -> None:
        """Make every monomial of degree < bound available."""
        while len(self.starts) <= bound:
            k = len(self.starts) - 1
            for exp in _compositions(k, self.d):
                self.index[exp] = len(self.exponents)
                self.exponents.append(exp)
                self.degrees.append(k)
            self.starts.append(len(self.exponents))

    def count_below(self, degree: int) -> int:
        """Number of monomials of degree < degree."""
        if degree <= 0:
            return 0
        self.ensure(degree)
        return self.starts[degree]

    def shift(self, column: int, exp: Exponent) -> int:
        """Index of x^exp times the monomial with the given index."""
        base = self.exponents[column]
        product = tuple(a + b for a, b in zip(base, exp))
        self.ensure(self.degrees[column] + sum(exp) + 1)
        return self.index[product]


_TABLES: dict[int, MonomialTable] = {}


def monomial_table(d: int) -> MonomialTable:
    """Shared monomial table for dimension d."""
    if d not in _TABLES:
        _TABLES[d] = MonomialTable(d)
    return _TABLES[d]


def _default_names(d: int) -> tuple[str, ...]:
    if d <= 3:
        return ("x", "y", "z")[:d]
    return tuple(f"x{i}" for i in range(1, d + 1))


class TruncatedLocalRing:
    """k[[x_1..x_d]]/m^N over an exact field.

    ``guard`` is the certification margin: an ideal built from generators is
    trusted only when it contains m^s with s <= N - guard.
    """

    __slots__ = ("d", "N", "field", "names", "guard", "table")

    def __init__(
        self,
        d: int,
        N: int,
        field: ExactField | None = None,
        names: tuple[str, ...] | list[str] | None = None,
        guard: int = 2,
    ):
        if d < 1 or N < 2:
            raise BadParametersError("Truncated ring needs d >= 1 and N >= 2", d=d, N=N)
        if guard < 1:
            raise BadParametersError("Certification guard must be positive", guard=guard)
        names = tuple(names) if names is not None else _default_names(d)
        if len(names) != d or len(set(names)) != d:
            raise BadParametersError("Need d distinct variable names", names=names, d=d)
        self.d = d
        self.N = N
        self.field: ExactField = field if field is not None else RationalField()
        self.names = names
        self.guard = guard
        self.table = monomial_table(d)
        self.table.ensure(N)

    @property
    def ambient_dimension(self) -> int:
        """dim_k R/m^N = C(N-1+d, d)."""
        return math.comb(self.N - 1 + self.d, self.d)

    def with_truncation(self, N: int) -> TruncatedLocalRing:
        return TruncatedLocalRing(self.d, N, self.field, self.names, self.guard)

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------

    def poly(self, terms: Mapping[Exponent, Number]) -> Poly:
        return Poly(self, {exp: self.field.convert(c) for exp, c in terms.items()})

    def monomial(self, *exp: int) -> Poly:
        if len(exp) != self.d:
            raise BadParametersError("Exponent length must equal d", exponent=exp, d=self.d)
        return Poly(self, {tuple(exp): self.field.one})

    def one(self) -> Poly:
        return self.monomial(*([0] * self.d))

    def gens(self) -> tuple[Poly, ...]:
        """The variables x_1, ..., x_d."""
        return tuple(
            self.monomial(*(1 if j == i else 0 for j in range(self.d))) for i in range(self.d)
        )

    def render_monomial(self, exp: Exponent) -> str:
        factors = [
            name if e == 1 else f"{name}^{e}" for name, e in zip(self.names, exp) if e > 0
        ]
        return "*".join(factors) if factors else "1"

    def render_row(self, row: Row) -> str:
        """Row as polynomial text."""
        return str(Poly(self, {self.table.exponents[c]: a for c, a in row.items()}))

    # ------------------------------------------------------------------

    def same_ring(self, other: TruncatedLocalRing) -> None:
        if self != other:
            raise MixedRingsError(
                "Ideals belong to different truncated rings", left=self, right=other
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedLocalRing):
            return NotImplemented
        return (self.d, self.N, self.field, self.names, self.guard) == (
            other.d,
            other.N,
            other.field,
            other.names,
            other.guard,
        )

    def __hash__(self) -> int:
        return hash((self.d, self.N, self.field, self.names, self.guard))

    def __repr__(self) -> str:
        return f"k[[{','.join(self.names)}]]/m^{self.N} over {self.field!r}"


class Poly:
    """Polynomial with exact coefficients; no zero coefficients are stored.

    Terms are kept untruncated so a polynomial can be moved to a ring with a
    larger N; truncation happens when it enters an ideal.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: TruncatedLocalRing, terms: Mapping[Exponent, Scalar]):
        field = ring.field
        self.ring = ring
        self.terms: dict[Exponent, Scalar] = {}
        for exp, c in terms.items():
            c = field.normalize(c)
            if c != 0:
                self.terms[exp] = c

    # ------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.ring.d, self.ring.field.zero)

    @property
    def order(self) -> int:
        """Least total degree of a term (-1 for zero)."""
        return min((sum(e) for e in self.terms), default=-1)

    def row(self, bound: int) -> Row:
        """Coefficient row over monomial indices, truncated to degree < bound."""
        index = self.ring.table.index
        self.ring.table.ensure(bound)
        return {index[e]: c for e, c in self.terms.items() if sum(e) < bound}

    def to_ring(self, ring: TruncatedLocalRing) -> Poly:
        """Same polynomial over another ring of the same dimension."""
        if ring.d != self.ring.d:
            raise MixedRingsError("Cannot move a polynomial across dimensions")
        if ring.field == self.ring.field:
            return Poly(ring, self.terms)
        return ring.poly({e: _as_number(c) for e, c in self.terms.items()})

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other: Any) -> Poly:
        if isinstance(other, Poly):
            if other.ring.d != self.ring.d or other.ring.field != self.ring.field:
                raise MixedRingsError("Polynomials over different rings")
            return other
        if isinstance(other, int | Fraction):
            return Poly(self.ring, {(0,) * self.ring.d: self.ring.field.convert(other)})
        return NotImplemented

    def __add__(self, other: Any) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> Poly:
        return (-self) + other

    def __mul__(self, other: Any) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[Exponent, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise BadParametersError("Polynomial powers need n >= 0", exponent=n)
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring.field == other.ring.field and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        index = self.ring.table
        index.ensure(max(sum(e) for e in self.terms) + 1)
        ordered = sorted(self.terms.items(), key=lambda item: index.index[item[0]])
        out = ""
        for exp, c in ordered:
            text = self.ring.field.render(c)
            negative = text.startswith("-")
            text = text.lstrip("-")
            mono = self.ring.render_monomial(exp)
            if mono == "1":
                term = text
            elif text == "1":
                term = mono
            else:
                term = f"{text}*{mono}"
            if not out:
                out = f"-{term}" if negative else term
            else:
                out += f" - {term}" if negative else f" + {term}"
        return out

    def __repr__(self) -> str:
        return f"Poly({self})"


def _as_number(value: Scalar) -> Number:
    if isinstance(value, Fraction):
        return value
    return int(value)
