"""m-primary ideals of k[[x_1..x_d]] as finite-dimensional subspaces.

An ideal K is stored as its order s = ord_m(K), the least s with m^s inside K,
together with the reduced echelon basis of K/m^s. Since K contains m^s this
pair determines K exactly, and because the echelon form is canonical, two
ideals are equal iff their pairs are equal.

Ideals built from generators are computed in the ring's truncation R/m^N and
certified by the order scan: if every monomial of degree s..N-1 lies in the
span then K + m^N contains m^s, hence K contains m^s by Nakayama. The ring's
guard demands s <= N - guard. Every derived ideal (sum, product, power,
intersection, colon) is computed modulo an order the result is known to
contain, e.g. ord(A) + ord(B) for a product, so it is exact regardless of N.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Iterator, Sequence

from fibercone.artinian.echelon import Echelon, Row
from fibercone.artinian.field import ExactField, Scalar
from fibercone.artinian.ring import Exponent, MonomialTable, Poly, TruncatedLocalRing
from fibercone.errors import (
    BudgetExceededError,
    NegativePowerError,
    NotContainedError,
    PrecisionExhaustedError,
    UnitGeneratorError,
)

logger = logging.getLogger(__name__)


class ArtIdeal:
    """An m-primary ideal K given by ord_m(K) and a basis of K/m^ord."""

    __slots__ = ("ring", "order", "basis", "sources", "_minimal", "_hash")

    def __init__(
        self,
        ring: TruncatedLocalRing,
        order: int,
        basis: Echelon,
        sources: tuple[Poly, ...] | None = None,
    ):
        self.ring = ring
        self.order = order
        self.basis = basis
        self.sources = sources
        self._minimal: tuple[Row, ...] | None = None
        self._hash: int | None = None

    # ------------------------------------------------------------------
    # Spans
    # ------------------------------------------------------------------

    def _count(self, degree: int) -> int:
        return self.ring.table.count_below(degree)

    def span(self, bound: int) -> Iterator[Row]:
        """Rows spanning (K + m^bound)/m^bound."""
        limit = self._count(bound)
        if bound <= self.order:
            for row in self.basis:
                cut = {c: a for c, a in row.items() if c < limit}
                if cut:
                    yield cut
            return
        yield from self.basis
        one = self.ring.field.one
        for c in range(self._count(self.order), limit):
            yield {c: one}

    def monomial_columns(self, bound: int) -> set[int]:
        """Monomials of K below degree bound; K must be a monomial ideal."""
        limit = self._count(bound)
        columns = {p for p in self.basis.rows if p < limit}
        columns.update(range(self._count(self.order), limit))
        return columns

    @property
    def is_monomial(self) -> bool:
        return self.basis.is_monomial()

    # ------------------------------------------------------------------
    # Generators
    # ------------------------------------------------------------------

    def minimal_generator_rows(self) -> tuple[Row, ...]:
        """Rows of K/m^(s+1) forming a basis modulo mK."""
        if self._minimal is None:
            self._minimal = self._compute_minimal()
        return self._minimal

    def _compute_minimal(self) -> tuple[Row, ...]:
        table = self.ring.table
        bound = self.order + 1
        d = self.ring.d
        variables = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
        one = self.ring.field.one

        if self.is_monomial:
            own = self.monomial_columns(bound)
            shifted = {
                table.shift(c, v)
                for c in own
                if table.degrees[c] + 1 < bound
                for v in variables
            }
            return tuple({c: one} for c in sorted(own - shifted))

        field = self.ring.field
        lower = Echelon(field)
        for row in self.basis:
            for v in variables:
                lower.insert(_shift_row(row, v, table, bound, field))
        chosen = []
        for row in self.span(bound):
            if lower.insert(row):
                chosen.append(row)
        return tuple(chosen)

    def generators(self) -> list[Poly]:
        """Stored input generators, or minimal generators for derived ideals."""
        if self.sources is not None:
            return list(self.sources)
        return [self.row_poly(r) for r in self.minimal_generator_rows()]

    def minimal_generators(self) -> list[Poly]:
        return [self.row_poly(r) for r in self.minimal_generator_rows()]

    def row_poly(self, row: Row) -> Poly:
        exps = self.ring.table.exponents
        return Poly(self.ring, {exps[c]: a for c, a in row.items()})

    def mu(self) -> int:
        return len(self.minimal_generator_rows())

    def colength(self) -> int:
        """l(R/K) = dim R/m^s - dim K/m^s."""
        return self._count(self.order) - len(self.basis)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def sum(self, other: ArtIdeal) -> ArtIdeal:
        self.ring.same_ring(other.ring)
        bound = min(self.order, other.order)
        if self.is_monomial and other.is_monomial:
            cols = self.monomial_columns(bound) | other.monomial_columns(bound)
            return _from_monomials(self.ring, cols, bound)
        rows = [*self.span(bound), *other.span(bound)]
        return _from_span(self.ring, rows, bound)

    def product(self, other: ArtIdeal) -> ArtIdeal:
        self.ring.same_ring(other.ring)
        if self.order == 0:
            return other
        if other.order == 0:
            return self
        left, right = self, other
        if left.mu() > right.mu():
            left, right = right, left
        bound = left.order + right.order
        table = self.ring.table
        gens = left.minimal_generator_rows()

        if right.is_monomial and all(len(g) == 1 for g in gens):
            shifts = [table.exponents[next(iter(g))] for g in gens]
            cols = {
                table.shift(c, e)
                for c in right.monomial_columns(bound)
                for e in shifts
                if table.degrees[c] + sum(e) < bound
            }
            return _from_monomials(self.ring, cols, bound)

        field = self.ring.field
        gen_terms = [[(table.exponents[c], a) for c, a in g.items()] for g in gens]
        rows = []
        for v in right.span(bound):
            for terms in gen_terms:
                rows.append(_multiply_row(v, terms, table, bound, field))
        return _from_span(self.ring, rows, bound)

    def power(self, n: int) -> ArtIdeal:
        if n < 0:
            raise NegativePowerError("Ideal powers need n >= 0", exponent=n)
        result = unit_ideal(self.ring)
        for _ in range(n):
            result = self.product(result)
        return result

    def intersect(self, other: ArtIdeal) -> ArtIdeal:
        self.ring.same_ring(other.ring)
        bound = max(self.order, other.order)
        if self.is_monomial and other.is_monomial:
            cols = self.monomial_columns(bound) & other.monomial_columns(bound)
            return _from_monomials(self.ring, cols, bound)

        offset = self._count(bound)
        inside: list[Row] = []
        paired = Echelon(self.ring.field)
        for row in self.span(bound):
            remainder = other._normal_form(row)
            if not remainder:
                inside.append(row)
                continue
            paired.insert({**remainder, **{offset + c: a for c, a in row.items()}})
        for pivot, row in paired.rows.items():
            if pivot >= offset:
                inside.append({c - offset: a for c, a in row.items()})
        return _from_span(self.ring, inside, bound)

    def colon(self, other: ArtIdeal) -> ArtIdeal:
        """(self : other) as the common preimage of self under multiplication by generators.

        Raises:
            UnitGeneratorError: If other is the unit ideal
        """
        self.ring.same_ring(other.ring)
        if other.order == 0:
            raise UnitGeneratorError("Colon by the unit ideal is rejected")
        bound = self.order
        block = self._count(bound)
        table = self.ring.table
        field = self.ring.field
        one = field.one
        gen_terms = [
            [(table.exponents[c], a) for c, a in g.items()]
            for g in other.minimal_generator_rows()
        ]
        offset = len(gen_terms) * block

        inside: list[Row] = []
        paired = Echelon(field)
        for column in range(block):
            image: Row = {}
            for k, terms in enumerate(gen_terms):
                product = _multiply_row({column: one}, terms, table, bound, field)
                for c, a in self.basis.reduce(product).items():
                    image[k * block + c] = a
            if not image:
                inside.append({column: one})
            else:
                image[offset + column] = one
                paired.insert(image)
        for pivot, row in paired.rows.items():
            if pivot >= offset:
                inside.append({c - offset: a for c, a in row.items()})
        return _from_span(self.ring, inside, bound)

    def subset(self, other: ArtIdeal) -> bool:
        """True iff self is contained in other."""
        self.ring.same_ring(other.ring)
        return all(other.basis.contains(row) for row in self.span(other.order))

    def contains(self, element: Poly) -> bool:
        """True iff element lies in K; only its terms below ord_m(K) matter."""
        if element.ring != self.ring:
            element = element.to_ring(self.ring)
        return not self._normal_form(element.row(self.order))

    def witness(self, other: ArtIdeal) -> Row | None:
        """A basis row of self outside other, or None when self is inside other."""
        self.ring.same_ring(other.ring)
        for row in self.span(other.order):
            if not other.basis.contains(row):
                return row
        return None

    def length_quotient(self, other: ArtIdeal) -> int:
        """l(self/other) for other contained in self.

        Raises:
            NotContainedError: If other is not contained in self
        """
        if not other.subset(self):
            witness = other.witness(self)
            raise NotContainedError(
                "Quotient length needs the second ideal inside the first",
                witness=self.ring.render_row(witness) if witness else None,
            )
        return other.colength() - self.colength()

    def _normal_form(self, row: Row) -> Row:
        limit = self._count(self.order)
        return self.basis.reduce({c: a for c, a in row.items() if c < limit})

    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArtIdeal):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.order == other.order
            and self.basis.rows == other.basis.rows
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (
                    self.ring,
                    self.order,
                    frozenset((p, frozenset(r.items())) for p, r in self.basis.rows.items()),
                )
            )
        return self._hash

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.minimal_generators())
        return f"ArtIdeal({gens})"


# ----------------------------------------------------------------------------
# Row helpers
# ----------------------------------------------------------------------------


def _shift_row(row: Row, exp: Exponent, table: MonomialTable, bound: int, field: ExactField) -> Row:
    return _multiply_row(row, [(exp, field.one)], table, bound, field)


def _multiply_row(
    row: Row,
    terms: Sequence[tuple[Exponent, Scalar]],
    table: MonomialTable,
    bound: int,
    field: ExactField,
) -> Row:
    """row * sum(c x^e), truncated to degree < bound."""
    normalize = field.normalize
    out: Row = {}
    for c, a in row.items():
        degree = table.degrees[c]
        for e, b in terms:
            if degree + sum(e) >= bound:
                continue
            col = table.shift(c, e)
            value = normalize(out.get(col, 0) + a * b)
            if value == 0:
                out.pop(col, None)
            else:
                out[col] = value
    return out


def _order_scan(ring: TruncatedLocalRing, has_monomial: Callable[[int], bool], bound: int) -> int:
    """Least s <= bound such that every monomial of degree s..bound-1 passes has_monomial."""
    table = ring.table
    order = bound
    while order > 0:
        start, stop = table.count_below(order - 1), table.count_below(order)
        if not all(has_monomial(c) for c in range(start, stop)):
            break
        order -= 1
    return order


def _from_span(ring: TruncatedLocalRing, rows: Iterable[Row], bound: int) -> ArtIdeal:
    """Ideal K with m^bound inside K, given rows spanning K/m^bound."""
    echelon = Echelon.from_rows(ring.field, rows)
    order = _order_scan(ring, lambda c: len(echelon.rows.get(c, ())) == 1, bound)
    return ArtIdeal(ring, order, echelon.restricted(ring.table.count_below(order)))


def sum_of_multiples(floor: ArtIdeal, terms: Sequence[tuple[Poly, ArtIdeal]]) -> ArtIdeal:
    """floor + p_1 A_1 + ... + p_k A_k, computed modulo m^ord(floor).

    The summands need not be m-primary on their own; floor supplies the power
    of m that makes the sum finite-dimensional.
    """
    ring = floor.ring
    bound = floor.order
    table = ring.table
    rows = list(floor.span(bound))
    for element, ideal in terms:
        ring.same_ring(ideal.ring)
        if element.ring != ring:
            element = element.to_ring(ring)
        if element.is_zero or element.order >= bound:
            continue
        element_terms = list(element.terms.items())
        for row in ideal.span(bound):
            product = _multiply_row(row, element_terms, table, bound, ring.field)
            if product:
                rows.append(product)
    return _from_span(ring, rows, bound)


def _from_monomials(ring: TruncatedLocalRing, columns: set[int], bound: int) -> ArtIdeal:
    order = _order_scan(ring, columns.__contains__, bound)
    limit = ring.table.count_below(order)
    basis = Echelon.from_monomials(ring.field, sorted(c for c in columns if c < limit))
    return ArtIdeal(ring, order, basis)


# ----------------------------------------------------------------------------
# Constructors
# ----------------------------------------------------------------------------


def unit_ideal(ring: TruncatedLocalRing) -> ArtIdeal:
    return ArtIdeal(ring, 0, Echelon(ring.field))


def maximal_ideal(ring: TruncatedLocalRing) -> ArtIdeal:
    return ArtIdeal(ring, 1, Echelon(ring.field), sources=ring.gens())


def ideal_from_gens(ring: TruncatedLocalRing, gens: Sequence[Poly]) -> ArtIdeal:
    """Ideal generated by gens, certified against the ring's truncation.

    Raises:
        UnitGeneratorError: If a generator has a nonzero constant term
        PrecisionExhaustedError: If no s <= N - guard has m^s inside the span
    """
    gens = [g.to_ring(ring) if g.ring != ring else g for g in gens]
    for g in gens:
        if g.constant_term != 0:
            raise UnitGeneratorError("Generator has a nonzero constant term", generator=str(g))
    table = ring.table
    N = ring.N
    nonzero = [g for g in gens if not g.is_zero]

    if all(g.is_monomial for g in nonzero):
        seeds = [table.index[next(iter(g.terms))] for g in nonzero if g.order < N]
        columns = {
            table.shift(seed, table.exponents[c])
            for seed in seeds
            for c in range(table.count_below(N - table.degrees[seed]))
        }
        order = _order_scan(ring, columns.__contains__, N)
        basis = Echelon.from_monomials(
            ring.field, sorted(c for c in columns if c < table.count_below(order))
        )
    else:
        echelon = Echelon(ring.field)
        for g in nonzero:
            terms = list(g.terms.items())
            for c in range(table.count_below(N - g.order)):
                echelon.insert(_multiply_row({c: ring.field.one}, terms, table, N, ring.field))
        order = _order_scan(ring, lambda c: len(echelon.rows.get(c, ())) == 1, N)
        basis = echelon.restricted(table.count_below(order))

    if order > N - ring.guard:
        raise PrecisionExhaustedError(
            "Truncation too small to certify the ideal",
            truncation=N,
            order=order if order < N else "undefined",
            guard=ring.guard,
        )
    logger.debug(
        "Ideal certified",
        extra={"truncation": N, "order": order, "dimension": len(basis)},
    )
    return ArtIdeal(ring, order, basis, sources=tuple(gens))


def ensure_precision(
    ring: TruncatedLocalRing,
    *generator_sets: Sequence[Poly],
    budget: int = 4,
) -> TruncatedLocalRing:
    """Ring whose truncation certifies every generator set, doubling N as needed.

    Raises:
        BudgetExceededError: After budget doublings without success
    """
    current = ring
    for attempt in range(budget + 1):
        try:
            for gens in generator_sets:
                ideal_from_gens(current, [g.to_ring(current) for g in gens])
            return current
        except PrecisionExhaustedError as exc:
            if attempt == budget:
                raise BudgetExceededError(
                    "Precision budget exhausted",
                    original_error=exc,
                    doublings=budget,
                    truncation=current.N,
                ) from exc
            logger.info(f"Doubling truncation from {current.N} to {2 * current.N}")
            current = current.with_truncation(2 * current.N)
    return current
