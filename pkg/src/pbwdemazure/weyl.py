"""
Weyl groups of types A_n and C_n.

An element is stored as the signed image of the epsilon basis:
``images[k-1] = +-m`` means w(eps_k) = +-eps_m.  Type A uses only positive
entries (a permutation of 1..n+1).

Words are read left to right as a sequence of moves: the word (i_1, ..., i_k)
applies s_{i_1} first, so the element is the map s_{i_k} o ... o s_{i_1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

from .roots import (
    GuardError,
    LieType,
    Root,
    positive_roots,
    signed_root_from_epsilon,
    sort_roots,
    to_epsilon,
)

Permutation = tuple[int, ...]

TRIANGULAR_PATTERNS: tuple[Permutation, ...] = ((4, 2, 3, 1), (2, 4, 1, 3))
PATTERN_CONVENTION = "one-line notation of w, where a word applies its first letter first"
MAX_GROUP_ORDER = 10**6


@dataclass(frozen=True)
class WeylElement:
    lie_type: LieType
    images: tuple[int, ...]

    def __call__(self, v: Sequence[int]) -> tuple[int, ...]:
        """Apply w to an epsilon-coordinate vector."""
        out = [0] * len(v)
        for k, img in enumerate(self.images):
            out[abs(img) - 1] += v[k] if img > 0 else -v[k]
        return tuple(out)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self o other."""
        imgs = []
        for img in other.images:
            m = self.images[abs(img) - 1]
            imgs.append(m if img > 0 else -m)
        return WeylElement(self.lie_type, tuple(imgs))

    def inverse(self) -> "WeylElement":
        imgs = [0] * len(self.images)
        for k, img in enumerate(self.images, start=1):
            imgs[abs(img) - 1] = k if img > 0 else -k
        return WeylElement(self.lie_type, tuple(imgs))

    @property
    def one_line(self) -> Permutation:
        """Type A: the permutation itself.  Type C: its image iota(w) in S_{2n}."""
        if self.lie_type.family == "A":
            return self.images
        return iota(self)

    @property
    def length(self) -> int:
        return len(a_w(self))

    @property
    def word(self) -> tuple[int, ...]:
        return reduced_word(self)


def identity(t: LieType) -> WeylElement:
    return WeylElement(t, tuple(range(1, t.eps_dim + 1)))


def simple_reflection(t: LieType, i: int) -> WeylElement:
    if not 1 <= i <= t.rank:
        raise ValueError(f"no simple reflection s_{i} in {t}")
    imgs = list(range(1, t.eps_dim + 1))
    if t.family == "C" and i == t.rank:
        imgs[i - 1] = -i
    else:
        imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
    return WeylElement(t, tuple(imgs))


def from_word(t: LieType, word: Iterable[int]) -> WeylElement:
    w = identity(t)
    for i in word:
        w = simple_reflection(t, i).compose(w)
    return w


def parse_word(text: str) -> tuple[int, ...]:
    """'1 2 1', '1,2,1', 's1s2s1' or '' (identity)."""
    cleaned = text.replace("s", " ").replace(",", " ").strip()
    return tuple(int(x) for x in cleaned.split()) if cleaned else ()


def from_one_line(t: LieType, perm: Sequence[int]) -> WeylElement:
    """Type A from a permutation of 1..n+1; type C from a sigma-invariant element of S_2n."""
    perm = tuple(perm)
    if t.family == "A":
        if sorted(perm) != list(range(1, t.rank + 2)):
            raise ValueError(f"{perm} is not a permutation of 1..{t.rank + 1}")
        return WeylElement(t, perm)
    n = t.rank
    if sorted(perm) != list(range(1, 2 * n + 1)) or not is_sigma_invariant(perm):
        raise ValueError(f"{perm} is not a sigma-invariant permutation of 1..{2 * n}")
    imgs = []
    for k in range(1, n + 1):
        m = perm[k - 1]
        imgs.append(m if m <= n else -(2 * n + 1 - m))
    return WeylElement(t, tuple(imgs))


def act_on_root(w: WeylElement, sign: int, a: Root) -> tuple[int, Root]:
    """w(sign * a) as (sign, positive root)."""
    v = to_epsilon(w.lie_type, a)
    s, r = signed_root_from_epsilon(w.lie_type, w(v))
    return s * sign, r


def a_w(w: WeylElement) -> frozenset[Root]:
    """Negative roots sent to positive roots by w, stored as positive roots."""
    return frozenset(a for a in positive_roots(w.lie_type) if act_on_root(w, -1, a)[0] > 0)


def reduced_word(w: WeylElement) -> tuple[int, ...]:
    """A reduced word (first letter applied first); greedy in the smallest index."""
    t = w.lie_type
    word = []
    cur = w
    while True:
        for j in range(1, t.rank + 1):
            if act_on_root(cur, 1, _simple(t, j))[0] < 0:
                cur = cur.compose(simple_reflection(t, j))
                word.append(j)
                break
        else:
            break
    return tuple(word)


def _simple(t: LieType, i: int) -> Root:
    return next(r for r in positive_roots(t) if r.is_simple and r.start == i)


def group_order(t: LieType) -> int:
    f = 1
    for k in range(2, t.eps_dim + 1):
        f *= k
    return f if t.family == "A" else f * 2 ** t.rank


def enumerate_weyl(t: LieType, force: bool = False) -> list[WeylElement]:
    """All elements, sorted by length and then by reduced word."""
    if group_order(t) > MAX_GROUP_ORDER and not force:
        raise GuardError(f"|W({t})| = {group_order(t)} exceeds {MAX_GROUP_ORDER}; use force")
    m = t.eps_dim
    if t.family == "A":
        elems = [WeylElement(t, p) for p in permutations(range(1, m + 1))]
    else:
        elems = [
            WeylElement(t, tuple(s * x for s, x in zip(signs, p)))
            for p in permutations(range(1, m + 1))
            for signs in product((1, -1), repeat=m)
        ]
    return sorted(elems, key=lambda w: (w.length, w.word))


# -- patterns ------------------------------------------------------------------

def _standardize(seq: Sequence[int]) -> Permutation:
    ranks = sorted(seq)
    return tuple(ranks.index(x) + 1 for x in seq)


def contains_pattern(p: Sequence[int], pattern: Sequence[int]) -> bool:
    pattern = tuple(pattern)
    k = len(pattern)
    return any(_standardize(sub) == pattern for sub in combinations(p, k))


def is_triangular_perm(p: Sequence[int]) -> bool:
    return not any(contains_pattern(p, pat) for pat in TRIANGULAR_PATTERNS)


def is_triangular(w: WeylElement) -> bool:
    if w.lie_type.family != "A":
        raise ValueError("is_triangular is for type A; use is_symplectic_triangular")
    return is_triangular_perm(w.one_line)


def is_sigma_invariant(p: Sequence[int]) -> bool:
    m = len(p)
    return all(p[m - k] == m + 1 - p[k - 1] for k in range(1, m + 1))


def iota(w: WeylElement) -> Permutation:
    """The sigma-invariant permutation of 1..2n attached to a type C element.

    Index k <= n stands for eps_k and 2n+1-k for -eps_k, so s_i becomes
    t_i t_{2n-i} for i < n and s_n becomes t_n.
    """
    t = w.lie_type
    if t.family != "C":
        raise ValueError("iota is defined for type C")
    n = t.rank
    out = [0] * (2 * n)
    for k, img in enumerate(w.images, start=1):
        m = img if img > 0 else 2 * n + 1 - (-img)
        out[k - 1] = m
        out[2 * n - k] = 2 * n + 1 - m
    return tuple(out)


def is_symplectic_triangular(w: WeylElement) -> bool:
    return is_triangular_perm(iota(w))


def reduce_bar(p: Sequence[int]) -> Permutation:
    """Replace entries above n+1 by n+1 and keep only the leftmost n+1."""
    n = len(p) // 2
    out, seen = [], False
    for x in p:
        if x >= n + 1:
            if seen:
                continue
            seen = True
            out.append(n + 1)
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class LiftResult:
    perm: Permutation
    sigma_invariant: bool
    triangular: bool
    reduces_back: bool

    @property
    def ok(self) -> bool:
        return self.sigma_invariant and self.triangular and self.reduces_back


def lift(p: Sequence[int]) -> LiftResult:
    """A sigma-invariant preimage of p in S_{2n} under reduce_bar.

    Entries left of n+1 keep their places and are mirrored to the right end.
    The entries right of n+1 go, mirrored and reversed, directly after the
    left block, followed by the entries themselves.
    """
    p = tuple(p)
    n = len(p) - 1
    k = p.index(n + 1)
    left, right = list(p[:k]), list(p[k + 1:])
    q = tuple(
        left
        + [2 * n + 1 - r for r in reversed(right)]
        + right
        + [2 * n + 1 - v for v in reversed(left)]
    )
    return LiftResult(q, is_sigma_invariant(q), is_triangular_perm(q), reduce_bar(q) == p)


def format_word(word: Sequence[int]) -> str:
    return "".join(f"s{i}" for i in word) or "id"


def aw_labels(w: WeylElement) -> list[str]:
    return [r.label for r in sort_roots(w.lie_type, a_w(w))]
