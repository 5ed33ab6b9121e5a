"""
Highest weight modules built from matrices, with exact arithmetic.

The natural representation has basis e_1..e_{n+1} (type A) or
e_1..e_n, e_nbar..e_1bar (type C, e_kbar at index 2n+1-k).  Simple lowering
operators:

    type A:  f_i = E_{i+1,i}
    type C:  f_i = E_{i+1,i} - E_{2n+1-i,2n-i}  (i < n),   f_n = E_{n+1,n}

with e_i the transpose.  Other root vectors are brackets [f_k, f_{a - a_k}]
built up by height.  V(lambda) is the cyclic span of the tensor of highest
wedges inside the tensor product of (wedge^i natural)^{m_i}.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from ..roots import GuardError, LieType, Root, positive_roots, root_from_coeffs, simple_root, sub
from .linalg import EchelonBasis

Matrix = tuple[tuple[Fraction | int, ...], ...]
Basis = tuple[tuple[int, ...], ...]
Vector = dict

MAX_AMBIENT = 20000


def _zeros(N: int) -> list[list]:
    return [[0] * N for _ in range(N)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    N = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(N)) for j in range(N)) for i in range(N))


def bracket(a: Matrix, b: Matrix) -> Matrix:
    ab, ba = matmul(a, b), matmul(b, a)
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(ab, ba))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def natural_dim(t: LieType) -> int:
    return t.rank + 1 if t.family == "A" else 2 * t.rank


def _simple_f(t: LieType, i: int) -> Matrix:
    N = natural_dim(t)
    m = _zeros(N)
    m[i][i - 1] = 1
    if t.family == "C" and i < t.rank:
        n = t.rank
        m[2 * n - i][2 * n - i - 1] = -1
    return tuple(map(tuple, m))


def chevalley_matrices(
    t: LieType, scales: Optional[Mapping[Root, Fraction]] = None
) -> dict[Root, tuple[Matrix, Matrix]]:
    """Root -> (e_root, f_root) on the natural representation.

    ``scales`` rescales each f (and its e) by a nonzero rational.
    """
    f: dict[Root, Matrix] = {}
    for r in sorted(positive_roots(t), key=lambda r: r.height):
        if r.is_simple:
            f[r] = _simple_f(t, r.start)
            continue
        for k in range(1, t.rank + 1):
            rest = root_from_coeffs(t, sub(r.coeffs, simple_root(t, k).coeffs))
            if rest is not None:
                f[r] = bracket(f[simple_root(t, k)], f[rest])
                break
        if not any(any(row) for row in f[r]):
            raise AssertionError(f"vanishing root vector for {r.label}")
    out = {}
    for r, m in f.items():
        s = Fraction(scales[r]) if scales and r in scales else 1
        fm = tuple(tuple(s * x for x in row) for row in m)
        em = tuple(tuple(s * x for x in row) for row in transpose(m))
        out[r] = (em, fm)
    return out


def _sparse_columns(m: Matrix) -> dict[int, list[tuple[int, object]]]:
    cols: dict[int, list] = defaultdict(list)
    for i, row in enumerate(m):
        for j, x in enumerate(row):
            if x:
                cols[j].append((i, x))
    return dict(cols)


def _apply_wedge(cols, w: tuple[int, ...]) -> dict[tuple[int, ...], object]:
    out: dict = defaultdict(int)
    present = set(w)
    for p, b in enumerate(w):
        for r, x in cols.get(b, ()):
            if r == b:
                out[w] += x
                continue
            if r in present:
                continue
            new = list(w)
            new[p] = r
            # sign of the sort
            sign = 1
            for q, y in enumerate(new):
                if q != p and (q < p) != (y < r):
                    sign = -sign
            out[tuple(sorted(new))] += sign * x
    return out


@dataclass
class CyclicModule:
    lie_type: LieType
    lam: tuple[int, ...]
    factors: tuple[int, ...]
    generator: Vector
    ops: dict[Root, dict]
    scales: Optional[dict] = None
    _dims: dict = field(default_factory=dict)

    def apply(self, r: Root, vec: Mapping) -> Vector:
        cols = self.ops[r]
        out: dict = defaultdict(int)
        for basis, c in vec.items():
            for pos, w in enumerate(basis):
                for w2, x in _apply_wedge(cols, w).items():
                    if x:
                        out[basis[:pos] + (w2,) + basis[pos + 1:]] += c * x
        return {k: v for k, v in out.items() if v}

    def apply_monomial(self, roots_right_to_left: Iterable[Root], vec: Optional[Mapping] = None) -> Vector:
        v = dict(self.generator if vec is None else vec)
        for r in roots_right_to_left:
            if not v:
                break
            v = self.apply(r, v)
        return v

    def graded_dims(self, A: Iterable[Root]) -> list[int]:
        """Cumulative dims of U(n_A)_{<= d} v for d = 0, 1, ... until stable."""
        key = frozenset(A)
        if key in self._dims:
            return self._dims[key]
        ech = EchelonBasis()
        ech.add(self.generator)
        frontier = [self.generator]
        dims = [1]
        roots = sorted(key, key=lambda r: positive_roots(self.lie_type).index(r))
        while frontier:
            new = []
            for v in frontier:
                for r in roots:
                    w = self.apply(r, v)
                    if w and ech.add(w):
                        new.append(w)
            frontier = new
            if new:
                dims.append(len(ech))
        self._dims[key] = dims
        return dims

    def submodule_dim(self, A: Iterable[Root]) -> int:
        return self.graded_dims(A)[-1]

    @property
    def dimension(self) -> int:
        return self.submodule_dim(positive_roots(self.lie_type))


def ambient_dim(t: LieType, lam: Sequence[int]) -> int:
    from math import comb

    N = natural_dim(t)
    d = 1
    for i, m in enumerate(lam, start=1):
        d *= comb(N, i) ** m
    return d


def build_module(
    t: LieType,
    lam: Sequence[int],
    scales: Optional[Mapping[Root, Fraction]] = None,
    force: bool = False,
) -> CyclicModule:
    lam = tuple(lam)
    if len(lam) != t.rank:
        raise ValueError(f"weight {lam} does not match {t}")
    amb = ambient_dim(t, lam)
    if amb > MAX_AMBIENT and not force:
        raise GuardError(f"ambient dimension {amb} exceeds {MAX_AMBIENT}; use force")
    factors = tuple(i for i, m in enumerate(lam, start=1) for _ in range(m))
    gen = {tuple(tuple(range(i)) for i in factors): 1}
    mats = chevalley_matrices(t, scales)
    ops = {r: _sparse_columns(f) for r, (_, f) in mats.items()}
    return CyclicModule(t, lam, factors, gen, ops, dict(scales) if scales else None)


@lru_cache(maxsize=64)
def cached_module(t: LieType, lam: tuple[int, ...]) -> CyclicModule:
    return build_module(t, lam, force=True)
