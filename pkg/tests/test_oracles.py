from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pbwdemazure.admissible import enumerate_admissible, is_admissible
from pbwdemazure.fflv import face_points, weight_epsilon
from pbwdemazure.oracles.characters import FormalCharacter, demazure_character, demazure_dim, demazure_op, weyl_dim
from pbwdemazure.oracles.checks import (
    favourable_check,
    fundamental_module,
    monomial_basis_check,
    relation_check,
    relation_instances,
)
from pbwdemazure.oracles.linalg import EchelonBasis, rank
from pbwdemazure.oracles.modules import build_module, chevalley_matrices, bracket
from pbwdemazure.roots import GuardError, LieType, parse_roots, positive_roots, simple_root
from pbwdemazure.weyl import a_w, enumerate_weyl, is_symplectic_triangular, is_triangular


@pytest.mark.parametrize(
    "name,lam,dim",
    [("A1", (3,), 4), ("A2", (1, 1), 8), ("A3", (0, 1, 0), 6), ("C2", (1, 0), 4), ("C2", (0, 1), 5), ("C3", (0, 0, 1), 14)],
)
def test_weyl_dimension(name, lam, dim):
    assert weyl_dim(LieType.parse(name), lam) == dim


CHARS = st.sampled_from([LieType.parse(s) for s in ("A2", "A3", "C2")]).flatmap(
    lambda t: st.tuples(
        st.just(t),
        st.lists(st.integers(0, 2), min_size=t.rank, max_size=t.rank),
        st.integers(1, t.rank),
    )
)


@given(CHARS)
def test_demazure_operator_is_idempotent(args):
    t, lam, i = args
    f = FormalCharacter.monomial(weight_epsilon(t, lam))
    once = demazure_op(t, i, f)
    assert demazure_op(t, i, once) == once


@pytest.mark.parametrize("name", ["A2", "A3", "C2", "C3"])
def test_longest_element_gives_weyl_dimension(name):
    t = LieType.parse(name)
    w0 = max(enumerate_weyl(t), key=lambda w: w.length)
    for lam in [(1,) * t.rank, tuple(2 if k == 0 else 0 for k in range(t.rank))]:
        assert demazure_dim(t, w0.word, lam) == weyl_dim(t, lam)


@pytest.mark.parametrize("name", ["A2", "A3", "C2", "C3"])
def test_demazure_dimension_is_face_count(name):
    t = LieType.parse(name)
    lam = (1,) * t.rank
    tri = is_triangular if t.family == "A" else is_symplectic_triangular
    for w in enumerate_weyl(t):
        if tri(w):
            assert demazure_dim(t, w.word, lam) == len(face_points(t, lam, a_w(w)))


def test_non_reduced_word_rejected(T):
    with pytest.raises(ValueError):
        demazure_character(T("A2"), (1, 1), (1, 1))


def test_cli_example_value(T):
    # frozen from the character formula
    assert demazure_dim(T("C2"), (2, 1, 2), (1, 1)) == 11


@pytest.mark.parametrize("name", ["A2", "A3", "C2", "C3"])
def test_chevalley_relations(name):
    t = LieType.parse(name)
    mats = chevalley_matrices(t)
    for i in range(1, t.rank + 1):
        e, f = mats[simple_root(t, i)]
        h = bracket(e, f)
        assert any(any(row) for row in h)
        for j in range(1, t.rank + 1):
            if j != i:
                assert not any(any(row) for row in bracket(e, mats[simple_root(t, j)][1]))


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("A2", (2, 0)), ("A3", (1, 1, 0)), ("C2", (1, 1)), ("C2", (0, 2))])
def test_module_dimension(name, lam):
    t = LieType.parse(name)
    assert build_module(t, lam).dimension == weyl_dim(t, lam)


def test_guard(T):
    with pytest.raises(GuardError):
        build_module(T("A3"), (3, 3, 3))


SCALES = st.sampled_from([LieType.parse(s) for s in ("A2", "C2")]).flatmap(
    lambda t: st.tuples(
        st.just(t),
        st.sampled_from(enumerate_admissible(t)),
        st.lists(
            st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool),
            min_size=len(positive_roots(t)),
            max_size=len(positive_roots(t)),
        ),
    )
)


@given(SCALES)
def test_basis_is_independent_of_root_vector_scaling(args):
    t, A, factors = args
    scales = dict(zip(positive_roots(t), factors))
    M = build_module(t, (1,) * t.rank, scales=scales)
    assert monomial_basis_check(M, A).ok


def test_non_admissible_set_fails(T):
    t = T("A2")
    A = parse_roots(t, "1.1,2.2")
    assert not is_admissible(t, A)
    spans = [monomial_basis_check(fundamental_module(t, i), A).spanning for i in (1, 2)]
    assert not all(spans)


def test_favourable_a2(T):
    t = T("A2")
    for A in enumerate_admissible(t):
        assert favourable_check(t, (1, 0), A)[0]


@pytest.mark.parametrize("name", ["A3", "C2"])
def test_relations(name):
    t = LieType.parse(name)
    for inst in relation_instances(t):
        for i in range(1, t.rank + 1):
            if inst.family == "A" and not inst.indices[0] <= i <= inst.indices[1]:
                continue
            assert relation_check(fundamental_module(t, i), inst).holds


@given(st.lists(st.dictionaries(st.integers(0, 5), st.integers(-3, 3), max_size=4), max_size=6))
def test_echelon_rank_matches_dense_elimination(vectors):
    dense = [[Fraction(v.get(k, 0)) for k in range(6)] for v in vectors]
    r = 0
    for c in range(6):
        piv = next((i for i in range(r, len(dense)) if dense[i][c]), None)
        if piv is None:
            continue
        dense[r], dense[piv] = dense[piv], dense[r]
        for i in range(len(dense)):
            if i != r and dense[i][c]:
                q = dense[i][c] / dense[r][c]
                dense[i] = [x - q * y for x, y in zip(dense[i], dense[r])]
        r += 1
    assert rank(vectors) == r
    e = EchelonBasis()
    for v in vectors:
        e.add(v)
    assert all(e.contains(v) for v in vectors)
