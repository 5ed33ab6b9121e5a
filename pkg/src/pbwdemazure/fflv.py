"""
Lattice points of the FFLV polytope and of its faces.

A point is a tuple of nonnegative integers aligned with ``positive_roots(t)``.
The polytope has one inequality per Dyck path p:

    sum_{beta in p} x_beta <= m_{s(p)} + ... + m_{e(p)}
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .roots import (
    DyckPath,
    GuardError,
    LieType,
    Root,
    dyck_paths,
    maximal_dyck_paths,
    positive_roots,
    root_index,
    to_epsilon,
)

MAX_WEIGHT_SUM = 6
MAX_RANK = 4

Point = tuple[int, ...]


@dataclass(frozen=True)
class PathInequality:
    path: DyckPath
    bound: int

    def holds(self, t: LieType, x: Sequence[int]) -> bool:
        idx = root_index(t)
        return sum(x[idx[r]] for r in self.path.roots) <= self.bound


def parse_weight(t: LieType, text: str | Sequence[int]) -> tuple[int, ...]:
    if isinstance(text, str):
        vals = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    else:
        vals = tuple(int(x) for x in text)
    if len(vals) != t.rank or any(v < 0 for v in vals):
        raise ValueError(f"weight for {t} needs {t.rank} nonnegative entries, got {vals}")
    return vals


def fundamental(t: LieType, i: int) -> tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in range(1, t.rank + 1))


def rho(t: LieType) -> tuple[int, ...]:
    return (1,) * t.rank


def path_bound(path: DyckPath, lam: Sequence[int]) -> int:
    return sum(lam[path.s - 1: path.e])


def inequalities(t: LieType, lam: Sequence[int], maximal_only: bool = False) -> list[PathInequality]:
    paths = maximal_dyck_paths(t) if maximal_only else dyck_paths(t)
    return [PathInequality(p, path_bound(p, lam)) for p in paths]


def _check_guard(t: LieType, lam: Sequence[int], force: bool):
    if force:
        return
    if sum(lam) > MAX_WEIGHT_SUM or t.rank > MAX_RANK:
        raise GuardError(
            f"{t} with weight {tuple(lam)} exceeds the limits (sum <= {MAX_WEIGHT_SUM}, rank <= {MAX_RANK}); use force"
        )


def lattice_points(
    t: LieType,
    lam: Sequence[int],
    support: Optional[Iterable[Root]] = None,
    force: bool = False,
) -> list[Point]:
    """Integer points of P(lam), optionally only those supported on ``support``.

    Depth-first over coordinates in canonical root order; each path keeps its
    remaining capacity so every partial assignment stays feasible.  Only the
    cover-step paths are used since they imply all other path inequalities.
    """
    lam = tuple(lam)
    _check_guard(t, lam, force)
    roots = positive_roots(t)
    allowed = set(roots) if support is None else set(support)
    ineqs = inequalities(t, lam, maximal_only=True)
    on_paths = [[k for k, q in enumerate(ineqs) if r in q.path.roots] for r in roots]
    cap = [q.bound for q in ineqs]
    x = [0] * len(roots)
    out: list[Point] = []

    def rec(pos: int):
        if pos == len(roots):
            out.append(tuple(x))
            return
        if roots[pos] not in allowed:
            rec(pos + 1)
            return
        top = min(cap[k] for k in on_paths[pos])
        for v in range(top + 1):
            x[pos] = v
            for k in on_paths[pos]:
                cap[k] -= v
            rec(pos + 1)
            for k in on_paths[pos]:
                cap[k] += v
        x[pos] = 0

    rec(0)
    return out


def face_points(t: LieType, lam: Sequence[int], A: Iterable[Root], force: bool = False) -> list[Point]:
    return lattice_points(t, lam, support=A, force=force)


def projected_points(t: LieType, lam: Sequence[int], A: Iterable[Root], force: bool = False) -> set[Point]:
    """Image of S(lam) under zeroing every coordinate outside A."""
    keep = [r in set(A) for r in positive_roots(t)]
    return {tuple(v if k else 0 for v, k in zip(p, keep)) for p in lattice_points(t, lam, force=force)}


def minkowski_check(
    t: LieType, A: Iterable[Root], lam: Sequence[int], mu: Sequence[int], force: bool = False
) -> tuple[bool, dict]:
    """Is S_A(lam) + S_A(mu) = S_A(lam + mu)?  Returns the verdict and a diagnostic."""
    A = frozenset(A)
    total = tuple(a + b for a, b in zip(lam, mu))
    left = face_points(t, lam, A, force)
    right = face_points(t, mu, A, force)
    sums = {tuple(a + b for a, b in zip(p, q)) for p in left for q in right}
    target = set(face_points(t, total, A, force))
    info = {
        "sum_size": len(sums),
        "target_size": len(target),
        "missing": sorted(target - sums)[:5],
        "extra": sorted(sums - target)[:5],
    }
    return sums == target, info


def weight_epsilon(t: LieType, lam: Sequence[int]) -> tuple[int, ...]:
    """lam = sum m_i omega_i with omega_i = eps_1 + ... + eps_i."""
    v = [0] * t.eps_dim
    for i, m in enumerate(lam, start=1):
        for k in range(i):
            v[k] += m
    return tuple(v)


def weight_of(t: LieType, lam: Sequence[int], x: Sequence[int]) -> tuple[int, ...]:
    """lam minus sum x_beta beta, in epsilon coordinates."""
    v = list(weight_epsilon(t, lam))
    for r, c in zip(positive_roots(t), x):
        if c:
            e = to_epsilon(t, r)
            for k in range(len(v)):
                v[k] -= c * e[k]
    return tuple(v)


def point_to_json(t: LieType, x: Sequence[int]) -> dict[str, int]:
    return {r.label: c for r, c in zip(positive_roots(t), x) if c}
