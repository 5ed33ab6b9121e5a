from itertools import product

import pytest
from hypothesis import given, strategies as st

from pbwdemazure.admissible import enumerate_admissible
from pbwdemazure.fflv import (
    face_points,
    fundamental,
    inequalities,
    lattice_points,
    minkowski_check,
    parse_weight,
    projected_points,
    rho,
)
from pbwdemazure.roots import GuardError, LieType, parse_roots, positive_roots


@pytest.mark.parametrize(
    "name,lam,count",
    # Weyl dimensions of the corresponding modules
    [("A2", (1, 1), 8), ("A3", (1, 1, 0), 20), ("C2", (1, 1), 16), ("C2", (1, 0), 4), ("C2", (0, 1), 5), ("C3", (1, 1, 1), 512)],
)
def test_counts(name, lam, count):
    assert len(lattice_points(LieType.parse(name), lam)) == count


def brute_points(t, lam):
    ineqs = inequalities(t, lam)
    top = max(sum(lam), 0)
    return sorted(x for x in product(range(top + 1), repeat=len(positive_roots(t))) if all(q.holds(t, x) for q in ineqs))


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("A2", (2, 1)), ("A3", (1, 0, 1)), ("C2", (1, 1)), ("C2", (2, 0))])
def test_dfs_matches_all_path_inequalities(name, lam):
    t = LieType.parse(name)
    assert sorted(lattice_points(t, lam)) == brute_points(t, lam)


@pytest.mark.parametrize("name", ["A2", "A3", "C2"])
def test_face_equals_projection(name):
    t = LieType.parse(name)
    for A in enumerate_admissible(t):
        for lam in (rho(t), fundamental(t, 1)):
            assert set(face_points(t, lam, A)) == projected_points(t, lam, A)


def test_face_example(T):
    t = T("A3")
    assert len(face_points(t, (1, 1, 0), parse_roots(t, "1.2,2.2"))) == 5


def test_minkowski_c2(T):
    t = T("C2")
    for A in enumerate_admissible(t):
        ok, info = minkowski_check(t, A, (1, 1), (1, 0))
        assert ok, info


@given(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.tuples(st.integers(0, 2), st.integers(0, 2)))
def test_minkowski_full_a2(lam, mu):
    t = LieType.parse("A2")
    assert minkowski_check(t, positive_roots(t), lam, mu, force=True)[0]


def test_guard_and_parse(T):
    t = T("A3")
    with pytest.raises(GuardError):
        lattice_points(t, (3, 3, 3))
    with pytest.raises(ValueError):
        parse_weight(t, "1,1")
    assert parse_weight(t, "1, 0,2") == (1, 0, 2)
