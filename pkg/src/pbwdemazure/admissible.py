"""Admissible root subsets: predicate, exhaustive enumeration, folding."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .joins import join
from .roots import (
    GuardError,
    LieType,
    Root,
    positive_roots,
    root_index,
    root_sum,
    sort_roots,
    succeq,
    unfold,
)

MAX_ENUMERATION_ROOTS = 16


@lru_cache(maxsize=None)
def _constraints(t: LieType):
    """Bitmask form of both admissibility conditions.

    Returns a list of (needs, implied) pairs: whenever every bit of
    ``needs`` is present, every bit of ``implied`` must be present as well.
    """
    idx = root_index(t)
    roots = positive_roots(t)
    out = []
    for a in roots:
        for b in roots:
            need = (1 << idx[a]) | (1 << idx[b])
            implied = 0
            s = root_sum(t, a, b)
            if s is not None:
                implied |= 1 << idx[s]
            if succeq(t, a, b):
                for r in join(t, a, b).roots:
                    implied |= 1 << idx[r]
            implied &= ~need
            if implied:
                out.append((need, implied))
    return tuple(out)


def _mask_ok(cons, m: int) -> bool:
    for need, implied in cons:
        if m & need == need and m & implied != implied:
            return False
    return True


def is_sum_closed(t: LieType, roots: Iterable[Root]) -> bool:
    s = frozenset(roots)
    for a in s:
        for b in s:
            c = root_sum(t, a, b)
            if c is not None and c not in s:
                return False
    return True


def join_closed(t: LieType, roots: Iterable[Root]) -> bool:
    """Every root of a join of a comparable pair a >= b (a = b allowed) stays inside."""
    s = frozenset(roots)
    for a in s:
        for b in s:
            if succeq(t, a, b) and not join(t, a, b).roots <= s:
                return False
    return True


def is_admissible(t: LieType, roots: Iterable[Root]) -> bool:
    s = frozenset(roots)
    return is_sum_closed(t, s) and join_closed(t, s)


def enumerate_admissible(t: LieType, force: bool = False) -> list[frozenset[Root]]:
    """All admissible subsets, sorted by size and then by canonical root order."""
    roots = positive_roots(t)
    N = len(roots)
    if N > MAX_ENUMERATION_ROOTS and not force:
        raise GuardError(f"{t} has {N} positive roots; exhaustive enumeration is capped at {MAX_ENUMERATION_ROOTS}")
    cons = _constraints(t)
    found = [m for m in range(1 << N) if _mask_ok(cons, m)]
    found.sort(key=lambda m: (bin(m).count("1"), [i for i in range(N) if m >> i & 1]))
    return [frozenset(roots[i] for i in range(N) if m >> i & 1) for m in found]


def enumerate_sum_closed(t: LieType, force: bool = False) -> list[frozenset[Root]]:
    roots = positive_roots(t)
    N = len(roots)
    if N > MAX_ENUMERATION_ROOTS and not force:
        raise GuardError(f"{t} has {N} positive roots; exhaustive enumeration is capped at {MAX_ENUMERATION_ROOTS}")
    idx = root_index(t)
    sums = []
    for a in roots:
        for b in roots:
            c = root_sum(t, a, b)
            if c is not None:
                sums.append(((1 << idx[a]) | (1 << idx[b]), 1 << idx[c]))
    out = []
    for m in range(1 << N):
        if _mask_ok(sums, m):
            out.append(frozenset(roots[i] for i in range(N) if m >> i & 1))
    out.sort(key=lambda s: (len(s), [root_index(t)[r] for r in sort_roots(t, s)]))
    return out


def is_induced_admissible(t: LieType, roots: Iterable[Root]) -> bool:
    """Admissibility of the tau-invariant unfolded set in A_{2n-1}."""
    if t.family != "C":
        raise ValueError("induced admissibility is defined for type C")
    big = LieType("A", 2 * t.rank - 1)
    return is_admissible(big, unfold(t.rank, roots))
