"""Exact incremental row echelon form over the rationals for sparse vectors."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Mapping

SparseVector = dict[Hashable, Fraction]


class EchelonBasis:
    """Rows with distinct pivots; the pivot of a row is its largest key."""

    def __init__(self):
        self.rows: dict[Hashable, SparseVector] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: Mapping) -> SparseVector:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        while v:
            top = max(v)
            row = self.rows.get(top)
            if row is None:
                return v
            c = v[top]
            for k, x in row.items():
                y = v.get(k, 0) - c * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return False if it was already in the span."""
        v = self.reduce(vec)
        if not v:
            return False
        top = max(v)
        c = v[top]
        self.rows[top] = {k: x / c for k, x in v.items()}
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)


def rank(vectors) -> int:
    e = EchelonBasis()
    for v in vectors:
        e.add(v)
    return len(e)
