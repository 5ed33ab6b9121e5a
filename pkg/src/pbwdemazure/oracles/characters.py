"""Weyl and Demazure character formulas on epsilon-coordinate weights."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..fflv import weight_epsilon
from ..roots import LieType, pairing, positive_roots, simple_root, to_epsilon
from ..weyl import from_word

Weight = tuple[int, ...]


class FormalCharacter:
    """Finitely supported integer combination of e^mu."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        acc: dict[Weight, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mu, c in items:
            acc[tuple(mu)] += c
        self.terms = {mu: c for mu, c in acc.items() if c}

    @classmethod
    def monomial(cls, mu: Sequence[int]) -> "FormalCharacter":
        return cls({tuple(mu): 1})

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        return FormalCharacter(list(self.terms.items()) + list(other.terms.items()))

    def __eq__(self, other):
        return isinstance(other, FormalCharacter) and self.terms == other.terms

    def __repr__(self):
        return f"FormalCharacter({dict(sorted(self.terms.items()))})"

    def dimension(self) -> int:
        return sum(self.terms.values())


def demazure_op(t: LieType, i: int, f: FormalCharacter) -> FormalCharacter:
    """D_i(e^mu) = (e^mu - e^{s_i(mu) - alpha_i}) / (1 - e^{-alpha_i})."""
    a = to_epsilon(t, simple_root(t, i))
    out: dict[Weight, int] = defaultdict(int)
    for mu, c in f.terms.items():
        m = pairing(t, mu, i)
        if m >= 0:
            for k in range(m + 1):
                out[tuple(x - k * y for x, y in zip(mu, a))] += c
        elif m <= -2:
            for k in range(1, -m):
                out[tuple(x + k * y for x, y in zip(mu, a))] -= c
    return FormalCharacter(out)


def demazure_character(t: LieType, word: Sequence[int], lam: Sequence[int]) -> FormalCharacter:
    """Apply D_{i_1} first, matching the word convention of the weyl module."""
    w = from_word(t, word)
    if w.length != len(word):
        raise ValueError(f"word {tuple(word)} is not reduced")
    f = FormalCharacter.monomial(weight_epsilon(t, lam))
    for i in word:
        f = demazure_op(t, i, f)
    return f


def demazure_dim(t: LieType, word: Sequence[int], lam: Sequence[int]) -> int:
    return demazure_character(t, word, lam).dimension()


def _inner(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def weyl_dim(t: LieType, lam: Sequence[int]) -> int:
    """prod over positive roots of <lam + rho, a^vee> / <rho, a^vee>."""
    lam_e = weight_epsilon(t, lam)
    rho_e = weight_epsilon(t, (1,) * t.rank)
    num = Fraction(1)
    for r in positive_roots(t):
        a = to_epsilon(t, r)
        num *= Fraction(_inner([x + y for x, y in zip(lam_e, rho_e)], a), _inner(rho_e, a))
    assert num.denominator == 1
    return int(num)
