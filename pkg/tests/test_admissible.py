import pytest
from hypothesis import given, strategies as st

from pbwdemazure.admissible import (
    enumerate_admissible,
    enumerate_sum_closed,
    is_admissible,
    is_induced_admissible,
    is_sum_closed,
)
from pbwdemazure.roots import GuardError, LieType, format_roots, parse_roots, positive_roots


@pytest.mark.parametrize(
    "name,count",
    # A2 and C2 are the published counts; the rest are frozen from the enumerator
    [("A1", 2), ("A2", 7), ("A3", 34), ("A4", 199), ("C2", 8), ("C3", 46)],
)
def test_counts(name, count):
    assert len(enumerate_admissible(LieType.parse(name))) == count


def test_c2_sets(T):
    t = T("C2")
    got = [format_roots(t, s) for s in enumerate_admissible(t)]
    assert got == [
        [], ["1.-1"], ["2.2"], ["1.1"], ["1.-1", "2.2"], ["1.-1", "1.1"],
        ["1.-1", "1.2", "2.2"], ["1.-1", "1.2", "2.2", "1.1"],
    ]


def test_check_examples(T):
    t = T("C2")
    assert is_admissible(t, parse_roots(t, "2.2,1.-1"))
    assert not is_admissible(t, parse_roots(t, "1.2"))
    assert not is_admissible(T("A2"), parse_roots(T("A2"), "1.1,2.2"))


def test_guard(T):
    with pytest.raises(GuardError):
        enumerate_admissible(T("A6"))


@pytest.mark.parametrize("name", ["A2", "A3", "C2"])
def test_admissible_implies_sum_closed(name):
    t = LieType.parse(name)
    closed = set(enumerate_sum_closed(t))
    for A in enumerate_admissible(t):
        assert A in closed and is_sum_closed(t, A)


SUBSETS = st.sampled_from([LieType.parse(s) for s in ("A3", "C2", "C3")]).flatmap(
    lambda t: st.tuples(st.just(t), st.sampled_from(enumerate_admissible(t)), st.sampled_from(enumerate_admissible(t)))
)


@given(SUBSETS)
def test_intersection_of_admissible_sets(args):
    t, a, b = args
    assert is_admissible(t, a & b)


@pytest.mark.parametrize("n", [2, 3])
def test_induced_admissibility(n):
    t = LieType("C", n)
    roots = positive_roots(t)
    for m in range(1 << len(roots)):
        S = [roots[i] for i in range(len(roots)) if m >> i & 1]
        assert is_admissible(t, S) == is_induced_admissible(t, S)
