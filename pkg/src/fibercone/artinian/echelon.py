"""Sparse reduced row echelon form over an exact field.

Rows are dicts ``{column: coefficient}``. The pivot of a row is its smallest
column and carries coefficient 1. Rows are kept fully reduced (no row has a
nonzero entry in another row's pivot column), so the basis of a subspace is
canonical and two subspaces are equal iff their row dicts are equal.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from fibercone.artinian.field import ExactField, Scalar

Row = dict[int, Scalar]


class Echelon:
    """Incrementally built reduced row echelon basis."""

    __slots__ = ("field", "rows", "_occurs")

    def __init__(self, field: ExactField):
        self.field = field
        self.rows: dict[int, Row] = {}
        # non-pivot column -> pivots of rows with a nonzero entry there
        self._occurs: dict[int, set[int]] = {}

    @classmethod
    def from_monomials(cls, field: ExactField, columns: Iterable[int]) -> Echelon:
        """Coordinate subspace spanned by unit vectors."""
        echelon = cls(field)
        one = field.one
        echelon.rows = {c: {c: one} for c in columns}
        return echelon

    @classmethod
    def from_rows(cls, field: ExactField, rows: Iterable[Row]) -> Echelon:
        echelon = cls(field)
        for row in rows:
            echelon.insert(row)
        return echelon

    def copy(self) -> Echelon:
        clone = Echelon(self.field)
        clone.rows = {p: dict(r) for p, r in self.rows.items()}
        clone._occurs = {c: set(ps) for c, ps in self._occurs.items()}
        return clone

    # ------------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[Row]:
        for pivot in sorted(self.rows):
            yield self.rows[pivot]

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def is_monomial(self) -> bool:
        """True iff every basis row is a single unit vector."""
        return all(len(r) == 1 for r in self.rows.values())

    # ------------------------------------------------------------------

    def reduce(self, row: Row) -> Row:
        """Remainder of row after eliminating every pivot column."""
        normalize = self.field.normalize
        out = {c: a for c, a in row.items() if a != 0}
        for col in [c for c in out if c in self.rows]:
            coeff = out.get(col)
            if not coeff:
                continue
            for c, a in self.rows[col].items():
                value = normalize(out.get(c, 0) - coeff * a)
                if value == 0:
                    out.pop(c, None)
                else:
                    out[c] = value
        return out

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)

    def insert(self, row: Row) -> bool:
        """Add row to the span; returns False when it was already inside."""
        reduced = self.reduce(row)
        if not reduced:
            return False
        field = self.field
        normalize = field.normalize
        pivot = min(reduced)
        lead = reduced[pivot]
        if lead != 1:
            scale = field.inv(lead)
            reduced = {c: normalize(a * scale) for c, a in reduced.items()}

        # clear the new pivot column from existing rows
        for other in self._occurs.pop(pivot, set()):
            target = self.rows[other]
            coeff = target.pop(pivot)
            for c, a in reduced.items():
                if c == pivot:
                    continue
                value = normalize(target.get(c, 0) - coeff * a)
                if value == 0:
                    if c in target:
                        del target[c]
                        self._occurs[c].discard(other)
                else:
                    if c not in target:
                        self._occurs.setdefault(c, set()).add(other)
                    target[c] = value

        self.rows[pivot] = reduced
        for c in reduced:
            if c != pivot:
                self._occurs.setdefault(c, set()).add(pivot)
        return True

    def extend(self, rows: Iterable[Row]) -> int:
        """Insert several rows; returns how many raised the rank."""
        return sum(1 for row in rows if self.insert(row))

    def restricted(self, bound: int) -> Echelon:
        """Rows whose pivot lies below bound.

        Only valid when every column >= bound is itself a unit pivot row, in
        which case no kept row has entries at or beyond bound.
        """
        clone = Echelon(self.field)
        clone.rows = {p: dict(r) for p, r in self.rows.items() if p < bound}
        for p, r in clone.rows.items():
            for c in r:
                if c != p:
                    clone._occurs.setdefault(c, set()).add(p)
        return clone

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Echelon):
            return NotImplemented
        return self.rows == other.rows
