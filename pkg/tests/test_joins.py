import pytest
from hypothesis import given, strategies as st

from pbwdemazure.joins import diff_stable, grid_closure, join, join_closed_form, join_closure
from pbwdemazure.roots import LieType, dyck_paths, is_linked, make_root, maximal_dyck_paths, parse_root, positive_roots


def pairs(t, res):
    return {(a.label if a else "0", b.label if b else "0") for a, b in res.pairs}


def test_worked_example_type_a(T):
    t = T("A3")
    res = join(t, parse_root(t, "1.2"), parse_root(t, "2.3"))
    assert pairs(t, res) == {("1.3", "2.2")}


def test_worked_example_type_c(T):
    t = T("C3")
    res = join(t, parse_root(t, "1.-2"), parse_root(t, "1.3"))
    assert ("1.-1", "2.3") in pairs(t, res)
    assert res.to_json(t)["pairs"][0] == ["1.-1", "2.3"]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_minimal_closure_of_barred_root(n):
    t = LieType("C", n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            want = {make_root(t, i, j, True), make_root(t, i, i, True), make_root(t, j, j, True)}
            assert join_closure(t, {make_root(t, i, j, True)}) == want


@pytest.mark.parametrize("t", [LieType("A", n) for n in range(1, 6)] + [LieType("C", 2)], ids=str)
def test_closed_form_agrees(t):
    # agreement up to the pairs (b1, b2), (b2, b1) that only restate the input
    for a in positive_roots(t):
        for b in positive_roots(t):
            c = join_closed_form(t, a, b)
            if c is not None:
                trivial = {(a, b), (b, a)}
                assert join(t, a, b).pairs - trivial == c.pairs - trivial


def test_closed_form_case_four_gap(T):
    # the case-four table lists one pair where the definition gives two
    t = T("C3")
    a, b = parse_root(t, "2.2"), parse_root(t, "1.-2")
    assert pairs(t, join(t, a, b)) == {("1.2", "2.-2"), ("2.-2", "1.2"), ("1.-2", "2.2")}
    # the table returns only the transposed input
    assert pairs(t, join_closed_form(t, a, b)) == {("1.-2", "2.2")}


ROOT_SETS = st.sampled_from([LieType.parse(s) for s in ("A3", "A4", "C2", "C3")]).flatmap(
    lambda t: st.tuples(st.just(t), st.sets(st.sampled_from(positive_roots(t))), st.sets(st.sampled_from(positive_roots(t))))
)


@given(ROOT_SETS)
def test_closure_is_idempotent_and_monotone(args):
    t, s1, s2 = args
    c1 = join_closure(t, s1)
    assert s1 <= c1
    assert join_closure(t, c1) == c1
    assert c1 <= join_closure(t, s1 | s2)


@pytest.mark.parametrize("t", [LieType("A", n) for n in range(2, 6)] + [LieType("C", n) for n in (2, 3, 4)], ids=str)
def test_cover_paths_grid_and_difference_stable(t):
    for p in maximal_dyck_paths(t):
        g = grid_closure(t, p)
        assert g == join_closure(t, p.roots)
        assert diff_stable(t, g)


def test_closure_path_not_difference_stable(T):
    # a linked path with a transitive step whose closure is not difference stable
    t = T("A4")
    path = [parse_root(t, x) for x in "1.1,1.2,1.3,1.4,2.4,4.4".split(",")]
    assert path in [list(p.roots) for p in dyck_paths(t)]
    assert all(is_linked(t, a, b) for a, b in zip(path, path[1:]))
    g = grid_closure(t, path)
    assert g == join_closure(t, path)
    assert {r.label for r in g} == {"1.1", "1.2", "1.3", "1.4", "2.2", "2.3", "2.4", "4.4"}
    assert not diff_stable(t, g)
