"""Rank checks on top of the module oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from ..fflv import face_points
from ..roots import LieType, Root, make_root, positive_roots
from .linalg import EchelonBasis
from .modules import CyclicModule, build_module, cached_module


@dataclass
class BasisVerdict:
    independent: bool
    spanning: bool
    graded: bool
    rank: int
    points: int
    submodule_dim: int
    graded_dims: list[int] = field(default_factory=list)
    graded_points: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.independent and self.spanning and self.graded

    def to_json(self) -> dict:
        return {
            "independent": self.independent,
            "spanning": self.spanning,
            "graded": self.graded,
            "rank": self.rank,
            "points": self.points,
            "submodule_dim": self.submodule_dim,
            "graded_dims": self.graded_dims,
            "graded_points": self.graded_points,
        }


def monomial_vectors(M: CyclicModule, S: Sequence[Sequence[int]]) -> list[dict]:
    """f^s v for each s; the product runs over roots in canonical order, so the
    last root in that order acts first."""
    roots = positive_roots(M.lie_type)
    memo: dict[tuple, dict] = {(): M.generator}

    def vec(s: tuple) -> dict:
        # s is a suffix of exponents for roots[len(roots)-len(s):]
        if s in memo:
            return memo[s]
        k = len(roots) - len(s)
        v = vec(s[1:])
        for _ in range(s[0]):
            if not v:
                break
            v = M.apply(roots[k], v)
        memo[s] = v
        return v

    return [vec(tuple(s)) for s in S]


def monomial_basis_check(M: CyclicModule, A: Iterable[Root], S: Optional[Sequence[Sequence[int]]] = None) -> BasisVerdict:
    A = frozenset(A)
    if S is None:
        S = face_points(M.lie_type, M.lam, A, force=True)
    ech = EchelonBasis()
    independent = True
    for v in monomial_vectors(M, S):
        if not ech.add(v):
            independent = False
    dims = M.graded_dims(A)
    degrees = [sum(s) for s in S]
    top = max(len(dims) - 1, max(degrees, default=0))
    graded_points = [sum(1 for d in degrees if d <= k) for k in range(top + 1)]
    graded_dims = [dims[min(k, len(dims) - 1)] for k in range(top + 1)]
    return BasisVerdict(
        independent=independent,
        spanning=len(ech) == dims[-1],
        graded=graded_points == graded_dims,
        rank=len(ech),
        points=len(S),
        submodule_dim=dims[-1],
        graded_dims=graded_dims,
        graded_points=graded_points,
    )


def favourable_check(t: LieType, lam: Sequence[int], A: Iterable[Root], force: bool = False) -> tuple[bool, int, int]:
    """dim U(n_A) (v_lam (x) v_lam) against |S_A(2 lam)|.

    v_lam (x) v_lam is the highest tensor of the ambient space for 2 lam, so
    the span is computed in the module built for 2 lam.
    """
    A = frozenset(A)
    double = tuple(2 * m for m in lam)
    M = build_module(t, double, force=force)
    dim = M.submodule_dim(A)
    pts = len(face_points(t, double, A, force=True))
    return dim == pts, dim, pts


# -- straightening relations in fundamental modules -----------------------------

ONE = "one"


@dataclass(frozen=True)
class RelationInstance:
    """One relation: a list of monomials, each a pair of factors.

    A factor is a Root, ``None`` (the factor vanishes) or ``ONE``.
    """
    family: str
    indices: tuple[int, ...]
    terms: tuple[tuple[object, object], ...]

    def describe(self) -> list[list[str]]:
        def lab(x):
            return "1" if x == ONE else ("0" if x is None else x.label)
        return [[lab(a), lab(b)] for a, b in self.terms]


def _unbarred_factor(t: LieType, i: int, j: int):
    """f_{i,j} with the conventions f_{j+1,j} = 1 and f_{l,j} = 0 for l > j+1."""
    if i == j + 1:
        return ONE
    if i > j + 1:
        return None
    return make_root(t, i, j)


def _barred_factor(t: LieType, i: int, j: int):
    return make_root(t, i, j, True)


def relation_instances(t: LieType) -> list[RelationInstance]:
    """All index choices within the stated ranges (fundamental index not fixed)."""
    n = t.rank
    U = lambda a, b: _unbarred_factor(t, a, b)
    B = lambda a, b: _barred_factor(t, a, b)
    out = []
    top = n if t.family == "A" else n - 1
    for k in range(2, n + 1):
        for j in range(k, n + 1):
            for l in range(j + 1, top + 1):
                out.append(RelationInstance("A", (k, j, l), ((U(1, j), U(k, l)), (U(1, l), U(k, j)))))
    if t.family == "C":
        for k in range(2, n + 1):
            for l in range(k, n + 1):
                for j in range(1, n + 1):
                    terms = ((U(1, j), B(k, l)), (B(1, l), U(k, j)), (B(1, k), U(l, j)))
                    out.append(RelationInstance("C1", (k, l, j), terms))
        for k in range(2, n + 1):
            for l in range(k, n + 1):
                for j in range(l + 1, n + 1):
                    terms = ((B(1, j), B(k, l)), (B(1, l), B(k, j)), (B(1, k), B(l, j)))
                    out.append(RelationInstance("C2", (k, l, j), terms))
    return out


@dataclass
class RelationVerdict:
    holds: bool
    leading_nonzero: bool
    minimal: bool
    distinct_terms: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _term_vector(M: CyclicModule, a, b) -> Optional[dict]:
    if a is None or b is None:
        return None
    roots = [x for x in (b, a) if x != ONE]
    return M.apply_monomial(roots)


def relation_check(M: CyclicModule, inst: RelationInstance) -> RelationVerdict:
    """Does sum_r c_r m_r v = 0 hold for some nonzero c_r, with c_0 = 1?

    Terms with a vanishing factor are dropped and equal monomials are merged.
    A merged group of two or more terms can take any total coefficient, so
    only groups consisting of a single term must keep a nonzero coefficient.
    That is possible exactly when each such vector lies in the span of the
    remaining ones.  ``minimal`` additionally reports that the surviving
    vectors are dependent with every proper sublist independent.
    """
    groups: dict[tuple, int] = {}
    vectors: dict[tuple, dict] = {}
    for a, b in inst.terms:
        v = _term_vector(M, a, b)
        if v is None:
            continue
        key = tuple(sorted((str(a), str(b))))
        groups[key] = groups.get(key, 0) + 1
        vectors[key] = v
    keys = list(groups)
    lead = inst.terms[0]
    lead_vec = _term_vector(M, *lead)
    leading_nonzero = bool(lead_vec)

    holds = True
    for g in keys:
        if groups[g] > 1:
            continue
        ech = EchelonBasis()
        for h in keys:
            if h != g:
                ech.add(vectors[h])
        if not ech.contains(vectors[g]):
            holds = False
            break

    vecs = [vectors[k] for k in keys]
    minimal = len(vecs) >= 2 and _minimal_dependent(vecs)
    return RelationVerdict(holds, leading_nonzero, minimal, len(keys))


def _minimal_dependent(vecs: list[dict]) -> bool:
    full = EchelonBasis()
    if all(full.add(v) for v in vecs):
        return False
    for skip in range(len(vecs)):
        e = EchelonBasis()
        if not all(e.add(v) for i, v in enumerate(vecs) if i != skip):
            return False
    return True


def fundamental_module(t: LieType, i: int) -> CyclicModule:
    lam = tuple(1 if k == i else 0 for k in range(1, t.rank + 1))
    return cached_module(t, lam)
