"""
PBW-semistandard tableaux and A-permissible tableaux.

Entries are stored as ranks in a linear order of symbols.  Type A uses
1 < 2 < ... < n+1.  Type C uses 1 < ... < n < nbar < ... < 1bar, where jbar
has rank 2n+1-j.  In JSON a barred entry jbar is written as -j.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .fflv import face_points, weight_epsilon, weight_of
from .roots import LieType, Root, positive_roots

MAX_BOXES = 12


@dataclass(frozen=True)
class Tableau:
    lie_type: LieType
    columns: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        height = len(self.columns[0]) if self.columns else 0
        return tuple(sum(1 for col in self.columns if len(col) > r) for r in range(height))

    @property
    def mu(self) -> tuple[int, ...]:
        return tuple(len(col) for col in self.columns)

    def entry(self, r: int, c: int) -> int:
        """T_{r,c}, 1-based."""
        return self.columns[c - 1][r - 1]

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.columns[c][r] for c in range(n)) for r, n in enumerate(self.shape))

    def to_json(self) -> dict:
        enc = lambda v: encode_entry(self.lie_type, v)
        return {"shape": list(self.shape), "rows": [[enc(v) for v in row] for row in self.rows]}


def encode_entry(t: LieType, v: int) -> int:
    n = t.rank
    if t.family == "C" and v > n:
        return -(2 * n + 1 - v)
    return v


def decode_entry(t: LieType, x: int) -> int:
    if x < 0:
        if t.family != "C":
            raise ValueError("barred entries only occur in type C")
        return 2 * t.rank + 1 + x
    return x


def from_rows(t: LieType, rows: Sequence[Sequence[int]]) -> Tableau:
    """Build a tableau from rows given in the JSON entry encoding."""
    rows = [[decode_entry(t, x) for x in row] for row in rows]
    width = len(rows[0]) if rows else 0
    cols = tuple(tuple(row[c] for row in rows if len(row) > c) for c in range(width))
    return Tableau(t, cols)


def shape_from_weight(t: LieType, lam: Sequence[int]) -> tuple[int, ...]:
    """Row lengths lambda_k = m_k + ... + m_n (type A padded with a zero row)."""
    return weight_epsilon(t, lam)


def _column_lengths(shape: Sequence[int]) -> tuple[int, ...]:
    width = shape[0] if shape else 0
    return tuple(sum(1 for row in shape if row > c) for c in range(width))


def _alphabet(t: LieType) -> int:
    return t.rank + 1 if t.family == "A" else 2 * t.rank


def _column_ok(t: LieType, col: Sequence[int]) -> bool:
    mu = len(col)
    for r, v in enumerate(col, start=1):
        if v <= mu and v != r:
            return False
    for r1 in range(1, mu + 1):
        if col[r1 - 1] == r1:
            continue
        for r2 in range(r1 + 1, mu + 1):
            if not col[r1 - 1] > col[r2 - 1]:
                return False
    if t.family == "C":
        m = 2 * t.rank + 1
        for r, v in enumerate(col, start=1):
            if v == r:
                for r2, u in enumerate(col, start=1):
                    if u == m - r and not r2 < r:
                        return False
    return True


@lru_cache(maxsize=None)
def valid_columns(t: LieType, length: int) -> tuple[tuple[int, ...], ...]:
    rng = range(1, _alphabet(t) + 1)
    return tuple(c for c in product(rng, repeat=length) if _column_ok(t, c))


def _adjacent_ok(left: Sequence[int], right: Sequence[int]) -> bool:
    return all(any(left[r2] >= right[r] for r2 in range(r, len(left))) for r in range(len(right)))


def enumerate_tableaux(t: LieType, lam: Sequence[int], force: bool = False) -> list[Tableau]:
    shape = tuple(x for x in shape_from_weight(t, lam) if x)
    boxes = sum(shape)
    if boxes > MAX_BOXES and not force:
        raise ValueError(f"shape {shape} has {boxes} boxes; the limit is {MAX_BOXES}")
    mus = _column_lengths(shape)
    partial: list[tuple[tuple[int, ...], ...]] = [()]
    for mu in mus:
        cols = valid_columns(t, mu)
        partial = [p + (c,) for p in partial for c in cols if not p or _adjacent_ok(p[-1], c)]
    out = [Tableau(t, p) for p in partial]
    out.sort(key=lambda T: T.rows)
    return out


def _forbidden_entries(t: LieType, A: Iterable[Root]) -> list[tuple[int, int, int]]:
    """(row, entry, min column length) triples ruled out by roots outside A.

    Condition (a): alpha_{i,j} not in A forbids entry j+1 in row i of a column
    with mu_c <= j.  Condition (b): alpha_{i,jbar} not in A forbids jbar in
    row i anywhere.
    """
    A = frozenset(A)
    n = t.rank
    out = []
    for r in positive_roots(t):
        if r in A:
            continue
        if not r.bar:
            out.append((r.start, r.end + 1, r.end))
        else:
            out.append((r.start, 2 * n + 1 - r.end, None))
    return out


def is_permissible(T: Tableau, A: Iterable[Root]) -> bool:
    for row, entry, max_mu in _forbidden_entries(T.lie_type, A):
        for c, col in enumerate(T.columns):
            if len(col) < row or col[row - 1] != entry:
                continue
            if max_mu is None or max_mu >= len(col):
                return False
    return True


def tableau_weight(T: Tableau) -> tuple[int, ...]:
    t = T.lie_type
    v = [0] * t.eps_dim
    for col in T.columns:
        for x in col:
            e = encode_entry(t, x)
            if e > 0:
                v[e - 1] += 1
            else:
                v[-e - 1] -= 1
    return tuple(v)


def weight_multiset_match(t: LieType, lam: Sequence[int], A: Iterable[Root], force: bool = False) -> tuple[bool, dict]:
    A = frozenset(A)
    tabs = Counter(tableau_weight(T) for T in enumerate_tableaux(t, lam, force) if is_permissible(T, A))
    pts = Counter(weight_of(t, lam, x) for x in face_points(t, lam, A, force))
    info = {"tableaux": sum(tabs.values()), "points": sum(pts.values())}
    if tabs != pts:
        diff = sorted(set(tabs) ^ set(pts) | {w for w in tabs if tabs[w] != pts[w]})
        info["differing_weights"] = [list(w) for w in diff[:5]]
    return tabs == pts, info
