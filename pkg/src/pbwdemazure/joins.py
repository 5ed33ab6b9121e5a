"""
Pair sets P(delta), the join of two roots, join closures and grids.

A pair is a tuple ``(g1, g2)`` of roots where ``None`` stands for the zero
entry.  With positive roots standing in for negative ones, the pair order

    (b1, b2) <= (g1, g2)   iff   g1 <= b1 and b2 <= g2   (on negative roots)

becomes ``g1 >= b1`` and ``g2 <= b2`` in the dominance order on positive roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .roots import (
    DyckPath,
    LieType,
    Root,
    add,
    classical_leq,
    fold,
    fold_orbits,
    fold_root,
    is_highest_of_support,
    is_linked,
    make_root,
    positive_roots,
    prec,
    root_from_coeffs,
    sort_roots,
    sub,
    succeq,
    unfold,
)

Pair = tuple[Optional[Root], Optional[Root]]


@dataclass(frozen=True)
class JoinResult:
    pairs: frozenset[Pair]

    @property
    def roots(self) -> frozenset[Root]:
        return frozenset(r for p in self.pairs for r in p if r is not None)

    def without_transpose(self, b1: Root, b2: Root) -> "JoinResult":
        """Drop the pair (b2, b1); it only reorders the inputs."""
        return JoinResult(self.pairs - {(b2, b1)})

    def to_json(self, t: LieType) -> dict:
        def lab(r):
            return r.label if r is not None else "0"
        pairs = sorted([lab(a), lab(b)] for a, b in self.pairs)
        return {"pairs": pairs, "roots": [r.label for r in sort_roots(t, self.roots)]}


def _vec(t: LieType, r: Optional[Root]):
    return r.coeffs if r is not None else (0,) * t.rank


def pset(t: LieType, delta: Sequence[int]) -> frozenset[Pair]:
    """P(delta) for a sum ``delta`` of two positive roots (sign-identified)."""
    delta = tuple(delta)
    splits = set()
    for g1 in positive_roots(t):
        rest = sub(delta, g1.coeffs)
        if any(x < 0 for x in rest):
            continue
        g2 = root_from_coeffs(t, rest)
        if g2 is not None:
            splits.add((g1, g2))
    if not splits:
        raise ValueError(f"{delta} is not a sum of two roots of {t}")
    whole = root_from_coeffs(t, delta)
    if whole is not None and is_highest_of_support(t, delta):
        return frozenset({(whole, None)})
    if whole is not None:
        splits.add((whole, None))
        splits.add((None, whole))
    return frozenset(splits)


def pair_leq(t: LieType, p: Pair, q: Pair) -> bool:
    (b1, b2), (g1, g2) = p, q
    return classical_leq(_vec(t, b1), _vec(t, g1)) and classical_leq(_vec(t, g2), _vec(t, b2))


def _literal_join(t: LieType, b1: Root, b2: Root) -> frozenset[Pair]:
    base = (b1, b2)
    return frozenset(
        q for q in pset(t, add(b1.coeffs, b2.coeffs))
        if q != base and pair_leq(t, base, q)
    )


def _fold_pair(n: int, p: Pair) -> Pair:
    return tuple(fold_root(n, r) if r is not None else None for r in p)


def join(t: LieType, b1: Root, b2: Root) -> JoinResult:
    """Pairs of P(b1 + b2) strictly above (b1, b2).

    In type C only those pairs are kept that come from folding a type
    A_{2n-1} join of two unfolded representatives.  Without this filter the
    pair set picks up comparable pairs that do not survive folding.
    """
    pairs = _literal_join(t, b1, b2)
    if t.family == "C":
        n = t.rank
        big = LieType("A", 2 * n - 1)
        orbits = fold_orbits(n)
        folded = set()
        for r1 in orbits[b1]:
            for r2 in orbits[b2]:
                folded.update(_fold_pair(n, q) for q in _literal_join(big, r1, r2))
        pairs = pairs & (frozenset(folded) | {(b2, b1)})
    return JoinResult(pairs)


# -- the case tables ---------------------------------------------------------

def _unbarred(t: LieType, i: int, j: int) -> Optional[Root]:
    if j == i - 1:
        return None
    return make_root(t, i, j)


def _barred(t: LieType, i: int, j: int) -> Root:
    return make_root(t, i, j, True)


def _label(t: LieType, r: Root) -> tuple[int, int, bool]:
    """(start, end, barred) with a_{i,n} read as a_{i,nbar} in type C."""
    if t.family == "C" and (r.bar or r.end == t.rank):
        return r.start, r.end, True
    return r.start, r.end, False


def join_closed_form(t: LieType, b1: Root, b2: Root) -> Optional[JoinResult]:
    """The join read off the explicit case tables.

    Returns ``None`` for argument orders the tables do not cover
    (first root starting later, or a barred root in first position).
    """
    i1, i2, bar1 = _label(t, b1)
    j1, j2, bar2 = _label(t, b2)
    U = lambda a, b: _unbarred(t, a, b)
    B = lambda a, b: _barred(t, a, b)

    if not bar1 and not bar2:
        if i1 > j1:
            return None
        if i1 == j1 or i2 < j1 - 1 or j2 <= i2:
            return JoinResult(frozenset())
        return JoinResult(frozenset({(U(i1, j2), U(j1, i2))}))

    if bar1 and bar2:
        if i1 > j1:
            return None
        if i2 < j1:
            return JoinResult(frozenset())
        if j1 <= j2 < i2:
            return JoinResult(frozenset({(B(i1, j1), B(j2, i2)), (B(i1, j2), B(j1, i2))}))
        return JoinResult(frozenset({(B(i1, j1), B(i2, j2))}))

    if bar1:
        return None

    if i1 <= j1:
        if i2 < j1 - 1:
            return JoinResult(frozenset())
        if i2 == j1 - 1:
            return JoinResult(frozenset({(B(i1, j2), None)}))
        if j2 <= i2:
            return JoinResult(frozenset({(B(i1, j1), U(j2, i2)), (B(i1, j2), U(j1, i2))}))
        if i2 == j2 - 1:
            return JoinResult(frozenset({(B(i1, j2), U(j1, i2)), (B(i1, j1), None)}))
        return JoinResult(frozenset({(B(i1, j2), U(j1, i2))}))

    # j1 < i1
    if i2 < j2 - 1:
        return JoinResult(frozenset())
    if i2 == j2 - 1:
        return JoinResult(frozenset({(B(j1, i1), None)}))
    return JoinResult(frozenset({(B(j1, i1), U(j2, i2))}))


# -- closures -----------------------------------------------------------------

def join_closure(t: LieType, roots: Iterable[Root]) -> frozenset[Root]:
    """Smallest superset closed under the roots of ``join(a, b)`` for a >= b."""
    current = set(roots)
    done: set[tuple[Root, Root]] = set()
    changed = True
    while changed:
        changed = False
        for a in list(current):
            for b in list(current):
                if (a, b) in done or not succeq(t, a, b):
                    continue
                done.add((a, b))
                new = join(t, a, b).roots - current
                if new:
                    current |= new
                    changed = True
    return frozenset(current)


def check_linked_path(t: LieType, path: DyckPath | Sequence[Root]) -> tuple[Root, ...]:
    roots = tuple(path.roots if isinstance(path, DyckPath) else path)
    for a, b in zip(roots, roots[1:]):
        if not is_linked(t, a, b):
            raise ValueError(f"consecutive roots {a.label} and {b.label} are not linked")
        if not prec(t, a, b):
            raise ValueError(f"{a.label} > {b.label} fails in the second order")
    return roots


def grid_closure(t: LieType, path: DyckPath | Sequence[Root]) -> frozenset[Root]:
    """Join closure of a linked Dyck path by the grid formulas.

    Type A: all a_{i,j} with i a start and j an end of a path root.
    Type C: unfold to A_{2n-1}, take the type A closure there, fold back.
    """
    roots = check_linked_path(t, path)
    if t.family == "A":
        starts = {r.start for r in roots}
        ends = {r.end for r in roots}
        return frozenset(make_root(t, i, j) for i in starts for j in ends if i <= j)
    n = t.rank
    big = LieType("A", 2 * n - 1)
    closed = join_closure(big, unfold(n, roots))
    return fold(n, closed)


def diff_stable(t: LieType, roots: Iterable[Root]) -> bool:
    """For a, b in S with g = b - a a positive root, every c - g that is a
    positive root (c in S) lies in S again."""
    s = frozenset(roots)
    diffs = set()
    for a in s:
        for b in s:
            g = root_from_coeffs(t, sub(b.coeffs, a.coeffs))
            if g is not None:
                diffs.add(g)
    for g in diffs:
        for c in s:
            r = root_from_coeffs(t, sub(c.coeffs, g.coeffs))
            if r is not None and r not in s:
                return False
    return True
