"""
Positive roots of types A_n and C_n.

Roots are stored as positive roots throughout; anything phrased for negative
roots is evaluated on the positive root with the opposite sign.  A root is
labelled ``(start, end, bar)``:

    A_n:  alpha_{i,j}     = alpha_i + ... + alpha_j                      (i <= j <= n)
    C_n:  alpha_{i,j}     = alpha_i + ... + alpha_j                      (i <= j < n)
          alpha_{i,jbar}  = alpha_i + ... + alpha_{j-1}
                            + 2 alpha_j + ... + 2 alpha_{n-1} + alpha_n  (i <= j <= n)

In type C the two labels alpha_{i,n} and alpha_{i,nbar} name the same root;
it is normalised to the unbarred label ``i.n``.

Text format: ``i.j`` is alpha_{i,j}, ``i.-j`` is alpha_{i,jbar}.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Optional, Sequence

Vector = tuple[int, ...]


class GuardError(ValueError):
    """A request exceeds the desk-scale limits; pass ``force`` to override."""


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "C"):
            raise ValueError(f"unsupported Lie type family {self.family!r}")
        minimum = 1 if self.family == "A" else 2
        if not isinstance(self.rank, int) or self.rank < minimum:
            raise ValueError(f"rank of type {self.family} must be >= {minimum}, got {self.rank}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"\s*([AaCc])\s*(\d+)\s*", text)
        if m is None:
            raise ValueError(f"cannot parse Lie type {text!r} (expected e.g. A3 or C2)")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def eps_dim(self) -> int:
        """Length of epsilon-coordinate vectors (gl_{n+1} for type A)."""
        return self.rank + 1 if self.family == "A" else self.rank


def as_lie_type(t) -> LieType:
    return t if isinstance(t, LieType) else LieType.parse(str(t))


@dataclass(frozen=True)
class Root:
    start: int
    end: int
    bar: bool
    coeffs: Vector

    @property
    def label(self) -> str:
        return f"{self.start}.-{self.end}" if self.bar else f"{self.start}.{self.end}"

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, c in enumerate(self.coeffs) if c)

    @property
    def is_simple(self) -> bool:
        return self.height == 1

    def __repr__(self):
        return f"Root({self.label})"

    def __str__(self):
        return self.label


def _coeffs(t: LieType, i: int, j: int, bar: bool) -> Vector:
    n = t.rank
    c = [0] * n
    if not bar:
        for k in range(i, j + 1):
            c[k - 1] = 1
        return tuple(c)
    for k in range(i, j):
        c[k - 1] = 1
    for k in range(j, n):
        c[k - 1] = 2
    c[n - 1] = 1
    return tuple(c)


def make_root(t: LieType, start: int, end: int, bar: bool = False) -> Root:
    """Build a root from its label, normalising alpha_{i,nbar} to alpha_{i,n}."""
    n = t.rank
    if not 1 <= start <= end <= n:
        raise ValueError(f"no root with label ({start}, {end}) in {t}")
    if bar and t.family != "C":
        raise ValueError(f"barred roots only exist in type C, not {t}")
    if bar and end == n:
        bar = False
    return Root(start, end, bar, _coeffs(t, start, end, bar))


@cache
def positive_roots(t: LieType) -> tuple[Root, ...]:
    """All positive roots in canonical order.

    Type A is row-major.  Type C uses the order
    a_{1,1bar} > a_{1,2bar} > a_{2,2bar} > ... > a_{1,nbar} > ... > a_{n,nbar}
    > a_{1,n-1} > ... > a_{n-1,n-1} > ... > a_{1,1}.
    """
    n = t.rank
    if t.family == "A":
        return tuple(make_root(t, i, j) for i in range(1, n + 1) for j in range(i, n + 1))
    out = [make_root(t, i, j, True) for j in range(1, n + 1) for i in range(1, j + 1)]
    out += [make_root(t, i, j) for j in range(n - 1, 0, -1) for i in range(1, j + 1)]
    return tuple(out)


@cache
def root_index(t: LieType) -> dict[Root, int]:
    return {r: k for k, r in enumerate(positive_roots(t))}


@cache
def _by_coeffs(t: LieType) -> dict[Vector, Root]:
    return {r.coeffs: r for r in positive_roots(t)}


def root_from_coeffs(t: LieType, coeffs: Sequence[int]) -> Optional[Root]:
    return _by_coeffs(t).get(tuple(coeffs))


def simple_root(t: LieType, i: int) -> Root:
    return make_root(t, i, i)


def highest_root(t: LieType) -> Root:
    return make_root(t, 1, 1, True) if t.family == "C" else make_root(t, 1, t.rank)


def sort_roots(t: LieType, roots: Iterable[Root]) -> list[Root]:
    idx = root_index(t)
    return sorted(roots, key=idx.__getitem__)


def parse_root(t: LieType, text: str) -> Root:
    m = re.fullmatch(r"\s*(\d+)\s*\.\s*(-?)\s*(\d+)\s*", text)
    if m is None:
        raise ValueError(f"cannot parse root {text!r} (expected i.j or i.-j)")
    return make_root(t, int(m.group(1)), int(m.group(3)), bool(m.group(2)))


def parse_roots(t: LieType, text: str) -> frozenset[Root]:
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(parse_root(t, part) for part in text.split(","))


def format_roots(t: LieType, roots: Iterable[Root]) -> list[str]:
    return [r.label for r in sort_roots(t, roots)]


# -- coefficient arithmetic -------------------------------------------------

def add(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def root_sum(t: LieType, a: Root, b: Root) -> Optional[Root]:
    return root_from_coeffs(t, add(a.coeffs, b.coeffs))


def _is_interval(s: Iterable[int]) -> bool:
    s = sorted(s)
    return bool(s) and s[-1] - s[0] + 1 == len(s)


def is_linked(t: LieType, a: Root, b: Root) -> bool:
    """True iff supp(a + b) is a connected piece of the Dynkin diagram."""
    return _is_interval(a.support | b.support)


def classical_leq(a: Optional[Sequence[int]], b: Optional[Sequence[int]], n: Optional[int] = None) -> bool:
    """``a <= b`` in the dominance order: b - a has nonnegative coefficients.

    Arguments are coefficient vectors (signed as given); ``None`` is zero.
    """
    if n is None:
        n = len(a) if a is not None else len(b)
    a = tuple(a) if a is not None else (0,) * n
    b = tuple(b) if b is not None else (0,) * n
    return all(y - x >= 0 for x, y in zip(a, b))


def is_highest_of_support(t: LieType, coeffs: Sequence[int]) -> bool:
    """Is ``coeffs`` the highest root of the subsystem on its (connected) support?"""
    supp = [i + 1 for i, c in enumerate(coeffs) if c]
    if not _is_interval(supp):
        return False
    lo, hi = supp[0], supp[-1]
    if t.family == "C" and hi == t.rank:
        target = make_root(t, lo, lo, True)
    else:
        target = make_root(t, lo, hi)
    return tuple(coeffs) == target.coeffs


# -- the second order ----------------------------------------------------------

def covers(t: LieType, a: Root) -> list[Root]:
    """Roots b with a > b a cover step of the second order."""
    n = t.rank
    c = list(a.coeffs)
    s = min(a.support)
    out = []
    if c[s - 1] == 1:
        c[s - 1] -= 1
        r = root_from_coeffs(t, c)
        c[s - 1] += 1
        if r is not None:
            out.append(r)
    for j in range(s, n + 1):
        c[j - 1] += 1
        r = root_from_coeffs(t, c)
        c[j - 1] -= 1
        if r is not None:
            out.append(r)
    return out


@cache
def _below(t: LieType) -> dict[Root, frozenset[Root]]:
    out = {}
    for a in positive_roots(t):
        seen: set[Root] = set()
        queue = deque(covers(t, a))
        while queue:
            b = queue.popleft()
            if b in seen:
                continue
            seen.add(b)
            queue.extend(covers(t, b))
        out[a] = frozenset(seen)
    return out


def prec(t: LieType, a: Root, b: Root) -> bool:
    """Strict second order ``a > b``: b is reachable from a by cover steps."""
    return b in _below(t)[a]


def succeq(t: LieType, a: Root, b: Root) -> bool:
    return a == b or prec(t, a, b)


def comparable(t: LieType, a: Root, b: Root) -> bool:
    return succeq(t, a, b) or succeq(t, b, a)


# -- Dyck paths --------------------------------------------------------------

@dataclass(frozen=True)
class DyckPath:
    roots: tuple[Root, ...]
    s: int
    e: int

    def labels(self) -> list[str]:
        return [r.label for r in self.roots]


def _is_terminal(t: LieType, r: Root) -> bool:
    if r.is_simple:
        return True
    return t.family == "C" and r.bar and r.start == r.end


def _path_end(t: LieType, r: Root) -> int:
    if r.is_simple:
        return r.start
    return t.rank


@cache
def dyck_paths(t: LieType) -> tuple[DyckPath, ...]:
    """Every chain (b_1 > b_2 > ... ) from a simple root to a simple root
    (or, in type C, to some a_{i,ibar})."""
    order = positive_roots(t)
    below = _below(t)
    out: list[DyckPath] = []

    def extend(path: list[Root]):
        last = path[-1]
        if _is_terminal(t, last):
            out.append(DyckPath(tuple(path), path[0].start, _path_end(t, last)))
        for r in order:
            if r in below[last]:
                path.append(r)
                extend(path)
                path.pop()

    for i in range(1, t.rank + 1):
        extend([simple_root(t, i)])
    return tuple(out)


def maximal_dyck_paths(t: LieType) -> tuple[DyckPath, ...]:
    """Dyck paths all of whose steps are covers (they imply all the others)."""
    return tuple(
        p for p in dyck_paths(t)
        if all(b in covers(t, a) for a, b in zip(p.roots, p.roots[1:]))
    )


# -- epsilon coordinates -------------------------------------------------------

def to_epsilon(t: LieType, a: Root) -> Vector:
    v = [0] * t.eps_dim
    if t.family == "A" or (not a.bar and a.end < t.rank):
        v[a.start - 1] += 1
        v[a.end] -= 1
    else:
        v[a.start - 1] += 1
        v[a.end - 1] += 1
    return tuple(v)


def coeffs_to_epsilon(t: LieType, coeffs: Sequence[int]) -> Vector:
    """Linear extension of ``to_epsilon`` to arbitrary coefficient vectors."""
    v = [0] * t.eps_dim
    for i, c in enumerate(coeffs, start=1):
        if not c:
            continue
        e = to_epsilon(t, simple_root(t, i))
        for k in range(len(v)):
            v[k] += c * e[k]
    return tuple(v)


@cache
def _by_epsilon(t: LieType) -> dict[Vector, Root]:
    return {to_epsilon(t, r): r for r in positive_roots(t)}


def root_from_epsilon(t: LieType, v: Sequence[int]) -> Optional[Root]:
    return _by_epsilon(t).get(tuple(v))


def signed_root_from_epsilon(t: LieType, v: Sequence[int]) -> tuple[int, Root]:
    """Return ``(sign, root)`` with ``v == sign * to_epsilon(root)``."""
    r = root_from_epsilon(t, v)
    if r is not None:
        return 1, r
    r = root_from_epsilon(t, tuple(-x for x in v))
    if r is None:
        raise ValueError(f"{tuple(v)} is not a root of {t}")
    return -1, r


def pairing(t: LieType, mu: Sequence[int], i: int) -> int:
    """<mu, alpha_i^vee> for mu in epsilon coordinates."""
    if t.family == "C" and i == t.rank:
        return mu[i - 1]
    return mu[i - 1] - mu[i]


# -- folding A_{2n-1} -> C_n ---------------------------------------------------

def tau(n: int, a: Root) -> Root:
    """Image of an A_{2n-1} root under the diagram flip i -> 2n - i."""
    return make_root(LieType("A", 2 * n - 1), 2 * n - a.end, 2 * n - a.start)


def fold_root(n: int, a: Root) -> Root:
    """The C_n root whose orbit contains the A_{2n-1} root ``a``."""
    def e(k):
        v = [0] * n
        if k <= n:
            v[k - 1] = 1
        else:
            v[2 * n - k] = -1
        return v

    hi, lo = e(a.start), e(a.end + 1)
    v = [x - y for x, y in zip(hi, lo)]
    r = root_from_epsilon(LieType("C", n), v)
    assert r is not None
    return r


@cache
def fold_orbits(n: int) -> dict[Root, frozenset[Root]]:
    if n < 2:
        raise ValueError("folding needs n >= 2")
    big = LieType("A", 2 * n - 1)
    orbits: dict[Root, set[Root]] = {r: set() for r in positive_roots(LieType("C", n))}
    for a in positive_roots(big):
        orbits[fold_root(n, a)].add(a)
    return {k: frozenset(v) for k, v in orbits.items()}


def unfold(n: int, roots: Iterable[Root]) -> frozenset[Root]:
    orbits = fold_orbits(n)
    return frozenset(b for r in roots for b in orbits[r])


def fold(n: int, roots: Iterable[Root]) -> frozenset[Root]:
    return frozenset(fold_root(n, a) for a in roots)
