import pytest
from hypothesis import given, strategies as st

from pbwdemazure.admissible import is_admissible
from pbwdemazure.roots import LieType
from pbwdemazure.weyl import (
    a_w,
    aw_labels,
    enumerate_weyl,
    format_word,
    from_one_line,
    from_word,
    group_order,
    identity,
    is_symplectic_triangular,
    is_triangular,
    is_triangular_perm,
    lift,
    parse_word,
    reduce_bar,
    reduced_word,
)

TYPES = [LieType.parse(s) for s in ("A1", "A2", "A3", "C2", "C3")]


@pytest.mark.parametrize("t,order", [(LieType.parse(s), o) for s, o in [("A2", 6), ("A3", 24), ("C2", 8), ("C3", 48)]], ids=str)
def test_group_order(t, order):
    assert group_order(t) == order == len(enumerate_weyl(t))


def test_parse_word():
    assert parse_word("1 2") == parse_word("1,2") == parse_word("s1s2") == (1, 2)
    assert parse_word("") == ()


WORDS = st.sampled_from(TYPES).flatmap(lambda t: st.tuples(st.just(t), st.lists(st.integers(1, t.rank), max_size=8)))


@given(WORDS)
def test_length_is_inversion_count_and_words_roundtrip(args):
    t, word = args
    w = from_word(t, word)
    assert w.length == len(a_w(w)) == len(reduced_word(w))
    assert from_word(t, reduced_word(w)) == w
    assert w.compose(w.inverse()) == identity(t)


@given(WORDS)
def test_word_is_applied_first_letter_first(args):
    t, word = args
    if word:
        w = from_word(t, word)
        assert w == from_word(t, word[1:]).compose(from_word(t, word[:1]))


def test_aw_of_a2_word(T):
    # "1 2" applies s1 first: the inversion set is {alpha_1, alpha_1 + alpha_2}
    assert aw_labels(from_word(T("A2"), (1, 2))) == ["1.1", "1.2"]


def test_c2_symplectic_triangular(T):
    t = T("C2")
    got = sorted(format_word(w.word) for w in enumerate_weyl(t) if is_symplectic_triangular(w))
    assert got == sorted(["id", "s1", "s2", "s1s2", "s2s1s2", "s1s2s1s2"])


@pytest.mark.parametrize("name,count", [("A2", 6), ("A3", 22), ("A4", 88), ("C2", 6), ("C3", 22)])
def test_triangular_counts(name, count):
    # S4 = 22 from brute force; the others frozen from this enumeration
    t = LieType.parse(name)
    tri = is_triangular if t.family == "A" else is_symplectic_triangular
    assert sum(tri(w) for w in enumerate_weyl(t)) == count


def test_pattern_convention(T):
    # the one-line form of w itself, not of its inverse, decides triangularity
    t = T("A3")
    for p in [(4, 2, 3, 1), (2, 4, 1, 3)]:
        w = from_one_line(t, p)
        assert not is_triangular_perm(p) and not is_triangular(w)
        assert not is_admissible(t, a_w(w))
    w = from_one_line(t, (3, 1, 4, 2))
    assert is_triangular(w) and is_admissible(t, a_w(w))


def test_reduce_bar_of_invariant_triangular():
    for w in enumerate_weyl(LieType.parse("C2")):
        if is_symplectic_triangular(w):
            assert is_triangular_perm(reduce_bar(w.one_line))


def test_lift_flags_failure():
    assert lift((1, 2, 3)).ok
    res = lift((2, 3, 1))
    assert res.perm == (2, 4, 1, 3)
    assert res.sigma_invariant and res.reduces_back and not res.triangular
