import pytest

from pbwdemazure.admissible import enumerate_admissible
from pbwdemazure.roots import LieType, parse_roots
from pbwdemazure.tableaux import (
    decode_entry,
    encode_entry,
    enumerate_tableaux,
    from_rows,
    is_permissible,
    weight_multiset_match,
)
from pbwdemazure.verify import REFERENCE_A3_TABLEAUX, REFERENCE_PERMISSIBLE


def test_a3_list(T):
    got = {tab.rows for tab in enumerate_tableaux(T("A3"), (1, 1, 0))}
    assert got == set(REFERENCE_A3_TABLEAUX)


def test_permissible_list(T):
    t = T("A3")
    A = parse_roots(t, "1.2,2.2,1.3,2.3")
    got = {tab.rows for tab in enumerate_tableaux(t, (1, 1, 0)) if is_permissible(tab, A)}
    assert got == set(REFERENCE_PERMISSIBLE)


def test_c2_count_and_encoding(T):
    t = T("C2")
    tabs = enumerate_tableaux(t, (1, 1))
    assert len(tabs) == 16
    assert tabs[0].to_json() == {"shape": [2, 1], "rows": [[1, 1], [2]]}
    for v in (1, 2, -2, -1):
        assert encode_entry(t, decode_entry(t, v)) == v
    tab = from_rows(t, [[1, -1], [-2]])
    assert tab.to_json()["rows"] == [[1, -1], [-2]]


def test_full_set_is_everything(T):
    t = T("C2")
    A = enumerate_admissible(t)[-1]
    assert all(is_permissible(tab, A) for tab in enumerate_tableaux(t, (1, 1)))


@pytest.mark.parametrize("name", ["A2", "C2"])
def test_weight_multisets(name):
    t = LieType.parse(name)
    for A in enumerate_admissible(t):
        for lam in [(1, 1), (2, 1), (0, 2)]:
            ok, info = weight_multiset_match(t, lam, A)
            assert ok, info
