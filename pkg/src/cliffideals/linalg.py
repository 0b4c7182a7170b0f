"""Incremental reduced row echelon forms over sparse rational vectors.

Vectors are dicts mapping a coordinate key (a blade mask, or a shifted
mask for stacked systems) to a nonzero Fraction.  Coordinates are ordered
by ascending key; a row's pivot is its smallest key.  The container keeps
full RREF at all times: pivots are normalised to 1, each pivot coordinate
is zero in every other row, and rows iterate in ascending pivot order.
This makes membership tests, spans and subspace intersections exact and
deterministic.
"""

from __future__ import annotations

from fractions import Fraction

Vec = dict


def vec_scale(v: Vec, c: Fraction) -> Vec:
    return {k: c * x for k, x in v.items()}


def vec_sub_scaled(v: Vec, row: Vec, c: Fraction) -> None:
    """In place: v -= c * row."""
    for k, x in row.items():
        s = v.get(k, 0) - c * x
        if s:
            v[k] = s
        else:
            v.pop(k, None)


class Echelon:
    """A growing RREF basis of a subspace."""

    def __init__(self):
        self._rows: dict = {}  # pivot key -> row vector

    @property
    def rank(self) -> int:
        return len(self._rows)

    def rows(self) -> list[Vec]:
        """Basis rows in ascending pivot order."""
        return [self._rows[p] for p in sorted(self._rows)]

    def pivots(self) -> list:
        return sorted(self._rows)

    def reduce(self, v: Vec) -> Vec:
        """Fully reduce a copy of v against the basis.

        RREF rows are zero in every other pivot coordinate, so one pass
        over the pivot coordinates initially present in v suffices.
        """
        out = dict(v)
        for k in [k for k in out if k in self._rows]:
            c = out.get(k)
            if c:
                vec_sub_scaled(out, self._rows[k], c)
        return out

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def add(self, v: Vec) -> bool:
        """Insert v's residue; returns True if the rank grew."""
        red = self.reduce(v)
        if not red:
            return False
        pivot = min(red)
        lead = red[pivot]
        if lead != 1:
            red = vec_scale(red, Fraction(1, 1) / lead)
        for row in self._rows.values():
            c = row.get(pivot)
            if c:
                vec_sub_scaled(row, red, c)
        self._rows[pivot] = red
        return True

    def add_unit(self, key) -> bool:
        """Insert a unit coordinate vector (common fast path).

        Skipping is only sound when the pivot row is itself the unit
        vector; a row with a tail does not span the unit coordinate.
        """
        row = self._rows.get(key)
        if row is not None and len(row) == 1:
            return False
        return self.add({key: Fraction(1)})

    def extend(self, vectors) -> None:
        for v in vectors:
            self.add(v)


def intersect_spans(rows_a: list[Vec], rows_b: list[Vec], offset) -> list[Vec]:
    """Basis of span(rows_a) & span(rows_b) via the double-echelon method.

    Stack rows (u | u) for u in A and (v | 0) for v in B, with the right
    block's keys shifted by `offset` (which must exceed every left key).
    Echelon rows whose left block vanished carry intersection vectors in
    their right block.
    """
    ech = Echelon()
    for u in rows_a:
        stacked = dict(u)
        for k, c in u.items():
            stacked[k + offset] = c
        ech.add(stacked)
    for v in rows_b:
        ech.add(dict(v))
    out = []
    for pivot in ech.pivots():
        if pivot >= offset:
            out.append({k - offset: c for k, c in ech._rows[pivot].items()})
    return out
