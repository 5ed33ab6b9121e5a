"""
The verification suite: one function per acceptance criterion.

Each check returns a ``CriterionResult`` with a verdict, a short summary, the
first counterexamples found and a command line that replays one of them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .admissible import enumerate_admissible, enumerate_sum_closed, is_admissible, is_induced_admissible
from .fflv import fundamental, lattice_points, minkowski_check, rho
from .joins import diff_stable, grid_closure, join, join_closed_form, join_closure
from .oracles.characters import demazure_dim, weyl_dim
from .oracles.checks import (
    favourable_check,
    fundamental_module,
    monomial_basis_check,
    relation_check,
    relation_instances,
)
from .oracles.modules import build_module, cached_module
from .roots import (
    LieType,
    dyck_paths,
    format_roots,
    is_linked,
    make_root,
    parse_root,
    parse_roots,
    positive_roots,
    unfold,
)
from .tableaux import enumerate_tableaux, from_rows, is_permissible, weight_multiset_match
from .weyl import (
    a_w,
    enumerate_weyl,
    format_word,
    from_word,
    is_symplectic_triangular,
    is_triangular,
    is_triangular_perm,
)

PROG = "pbwdemazure"


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    summary: str
    counterexamples: list = field(default_factory=list)
    replay: str = ""
    elapsed: float = 0.0
    limit: float = 0.0

    def to_json(self) -> dict:
        out = {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "summary": self.summary,
        }
        if self.counterexamples:
            out["counterexamples"] = self.counterexamples[:10]
        if self.replay:
            out["replay"] = self.replay
        return out

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.title}: {self.summary} ({self.elapsed:.2f}s, limit {self.limit:g}s)"


T = LieType.parse


def _sets(t, sets):
    return sorted(format_roots(t, s) for s in sets)


# -- 1, 2: admissible sets -------------------------------------------------------

def admissible_counts(level="quick"):
    counts = {s: len(enumerate_admissible(T(s))) for s in ("A2", "C2")}
    ok = counts == {"A2": 7, "C2": 8}
    return ok, f"A2 -> {counts['A2']}, C2 -> {counts['C2']} (expected 7, 8)", [], f"{PROG} admissible enumerate --type C2"


def non_weyl_sets(level="quick"):
    expected = {"A2": [["1.2"]], "C2": [["1.-1"], ["1.-1", "2.2"]]}
    found = {}
    for s in expected:
        t = T(s)
        weyl_sets = {a_w(w) for w in enumerate_weyl(t)}
        found[s] = _sets(t, [A for A in enumerate_admissible(t) if A not in weyl_sets])
    ok = all(sorted(found[s]) == sorted(expected[s]) for s in expected)
    return ok, f"non-Weyl admissible sets {found}", [] if ok else [found], f"{PROG} admissible enumerate --type C2"


# -- 3, 4, 5: triangular elements -----------------------------------------------------

def c2_symplectic_list(level="quick"):
    t = T("C2")
    listed = {from_word(t, w) for w in [(), (1,), (2,), (1, 2), (2, 1, 2), (1, 2, 1, 2)]}
    found = {w for w in enumerate_weyl(t) if is_symplectic_triangular(w)}
    a2 = enumerate_weyl(T("A2"))
    all_a2 = all(is_triangular(w) for w in a2)
    ok = found == listed and all_a2 and len(a2) == 6
    words = sorted(format_word(w.word) for w in found)
    return ok, f"C2 symplectic triangular: {words}; A2 all triangular: {all_a2}", [], f"{PROG} weyl triangular --type C2 --all"


def _adm_vs_tri(t):
    bad = []
    count = 0
    for w in enumerate_weyl(t):
        adm = is_admissible(t, a_w(w))
        tri = is_triangular(w) if t.family == "A" else is_symplectic_triangular(w)
        count += adm
        if adm != tri:
            bad.append({"word": format_word(w.word), "one_line": list(w.one_line), "admissible": adm, "triangular": tri})
    return count, bad


def _brute_triangular_count(m):
    """Independent count: a 4-subset is bad if it is order-isomorphic to 4231 or 2413."""
    from itertools import combinations, permutations

    def bad(q):
        a, b, c, d = q
        return (a > c > b > d) or (c < a < d < b)

    return sum(1 for p in permutations(range(m)) if not any(bad(q) for q in combinations(p, 4)))


def a_triangular(level="quick"):
    bad, counts = [], {}
    for s in ("A2", "A3", "A4"):
        counts[s], b = _adm_vs_tri(T(s))
        bad += [dict(x, type=s) for x in b]
    s4 = _brute_triangular_count(4)
    extra = ""
    if level == "full":
        c5, b = _adm_vs_tri(T("A5"))
        bad += [dict(x, type="A5") for x in b]
        brute = [_brute_triangular_count(m) for m in range(1, 8)]
        lib = []
        for m in range(1, 8):
            from itertools import permutations

            lib.append(sum(1 for p in permutations(range(1, m + 1)) if is_triangular_perm(p)))
        if brute != lib:
            bad.append({"counts_library": lib, "counts_brute": brute})
        extra = f"; A5 {c5}; triangular counts S1..S7 {lib}"
    ok = not bad and s4 == 22 and counts["A3"] == 22
    return ok, f"admissible A_w counts {counts}, brute triangular count in S4 = {s4}{extra}", bad, f"{PROG} weyl triangular --type A3 --all"


def c_triangular(level="quick"):
    bad, counts = [], {}
    for s in ("C2", "C3"):
        counts[s], b = _adm_vs_tri(T(s))
        bad += [dict(x, type=s) for x in b]
    a_counts = {s: sum(is_triangular(w) for w in enumerate_weyl(T(s))) for s in ("A2", "A3")}
    ok = not bad and counts["C2"] == a_counts["A2"] and counts["C3"] == a_counts["A3"]
    return ok, f"admissible A_w: {counts}; triangular in type A: {a_counts}", bad, f"{PROG} weyl triangular --type C3 --all"


# -- 6, 7, 8: folding and joins ------------------------------------------------------

def folding(level="quick"):
    bad, sizes = [], {}
    for n in (2, 3):
        t, big = LieType("C", n), LieType("A", 2 * n - 1)
        roots = positive_roots(t)
        sizes[str(big)] = 1 << len(roots)
        for m in range(1 << len(roots)):
            S = [roots[i] for i in range(len(roots)) if m >> i & 1]
            a = is_admissible(big, unfold(n, S))
            c = is_admissible(t, S)
            if a != c or is_induced_admissible(t, S) != a:
                bad.append({"type": str(t), "set": format_roots(t, S), "C": c, "A": a})
    ok = not bad and sizes == {"A3": 16, "A5": 512}
    replay = f"{PROG} admissible check --type {bad[0]['type']} --set {','.join(bad[0]['set'])}" if bad else ""
    return ok, f"tau-invariant subsets checked {sizes}, mismatches {len(bad)}", bad, replay


def _pairs_json(t, pairs):
    lab = lambda r: r.label if r is not None else "0"
    return sorted([lab(a), lab(b)] for a, b in pairs)


def join_consistency(level="quick"):
    bad, covered = [], 0
    types = [LieType("A", n) for n in range(1, 6)] + [LieType("C", n) for n in range(2, 5)]
    for t in types:
        for a in positive_roots(t):
            for b in positive_roots(t):
                c = join_closed_form(t, a, b)
                if c is None:
                    continue
                covered += 1
                trivial = {(a, b), (b, a)}
                d = join(t, a, b).pairs - trivial
                if d != c.pairs - trivial:
                    bad.append({"type": str(t), "b1": a.label, "b2": b.label,
                                "join": _pairs_json(t, d), "closed_form": _pairs_json(t, c.pairs - trivial)})
    # worked examples
    ex = []
    t = T("A3")
    ex.append(join(t, parse_root(t, "1.2"), parse_root(t, "2.3")).pairs == {(parse_root(t, "1.3"), parse_root(t, "2.2"))})
    t = T("C3")
    ex.append((parse_root(t, "1.-1"), parse_root(t, "2.3")) in join(t, parse_root(t, "1.-2"), parse_root(t, "1.3")).pairs)
    for n in range(2, 5):
        t = LieType("C", n)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                start = {make_root(t, i, j, True)}
                want = {make_root(t, i, j, True), make_root(t, i, i, True), make_root(t, j, j, True)}
                ex.append(join_closure(t, start) == want)
    ok = not bad and all(ex)
    replay = f"{PROG} joins join --type {bad[0]['type']} --b1 {bad[0]['b1']} --b2 {bad[0]['b2']}" if bad else ""
    return ok, f"{covered} covered pairs, {len(bad)} disagree; worked examples {sum(ex)}/{len(ex)}", bad, replay


def grid_and_diff(level="quick"):
    bad_grid, bad_diff, n_paths = [], [], 0
    types = [LieType("A", n) for n in range(1, 5)] + [LieType("C", n) for n in (2, 3)]
    for t in types:
        for p in dyck_paths(t):
            if not all(is_linked(t, a, b) for a, b in zip(p.roots, p.roots[1:])):
                continue
            n_paths += 1
            g = grid_closure(t, p)
            if g != join_closure(t, p.roots):
                bad_grid.append({"type": str(t), "path": p.labels()})
            if not diff_stable(t, g):
                bad_diff.append({"type": str(t), "path": p.labels(), "closure": format_roots(t, g)})
    ok = not bad_grid and not bad_diff
    first = (bad_grid or bad_diff)
    replay = f"{PROG} joins grid --type {first[0]['type']} --path {','.join(first[0]['path'])}" if first else ""
    return ok, (f"{n_paths} linked paths; grid != closure: {len(bad_grid)}; "
                f"not difference-stable: {len(bad_diff)}"), bad_grid + bad_diff, replay


# -- 9 - 15: modules ------------------------------------------------------------------

def _weights(t, top=2):
    return list(product(range(top + 1), repeat=t.rank))


def fflv_counting(level="quick"):
    bad = []
    for s in ("A1", "A2", "A3", "C2", "C3"):
        t = T(s)
        longest = max(enumerate_weyl(t), key=lambda w: w.length).word
        for lam in _weights(t):
            pts = len(lattice_points(t, lam, force=True))
            wd = weyl_dim(t, lam)
            dd = demazure_dim(t, longest, lam)
            md = build_module(t, lam, force=True).dimension if s != "C3" else wd
            if not pts == wd == dd == md:
                bad.append({"type": s, "weight": list(lam), "points": pts, "weyl": wd, "demazure": dd, "module": md})
    replay = f"{PROG} fflv points --type {bad[0]['type']} --weight {','.join(map(str, bad[0]['weight']))} --force" if bad else ""
    return not bad, f"lattice points = Weyl = Demazure = module dimension, mismatches {len(bad)}", bad, replay


def _basis_weights(t):
    if str(t) == "A2":
        return _weights(t)
    return [fundamental(t, i) for i in range(1, t.rank + 1)] + [rho(t)]


def monomial_bases(level="quick"):
    bad, n = [], 0
    for s in ("A2", "A3", "C2"):
        t = T(s)
        for A in enumerate_admissible(t):
            for lam in _basis_weights(t):
                n += 1
                v = monomial_basis_check(cached_module(t, tuple(lam)), A)
                if not v.ok:
                    bad.append({"type": s, "set": format_roots(t, A), "weight": list(lam), **v.to_json()})
    replay = (f"{PROG} oracle verify-basis --type {bad[0]['type']} --weight {','.join(map(str, bad[0]['weight']))} "
              f"--set {','.join(bad[0]['set'])} --graded") if bad else ""
    return not bad, f"{n} (set, weight) cases, failures {len(bad)}", bad, replay


def minkowski(level="quick"):
    bad, n = [], 0
    for s in ("A2", "C2"):
        t = T(s)
        ws = [fundamental(t, 1), fundamental(t, 2), rho(t)]
        for A in enumerate_admissible(t):
            for lam in ws:
                for mu in ws:
                    n += 1
                    ok, info = minkowski_check(t, A, lam, mu)
                    if not ok:
                        bad.append({"type": s, "set": format_roots(t, A), "lam": list(lam), "mu": list(mu)})
    return not bad, f"{n} cases, failures {len(bad)}", bad, ""


def not_admissible(level="quick"):
    bad, n = [], 0
    for s in ("A2", "A3", "C2"):
        t = T(s)
        adm = set(enumerate_admissible(t))
        for A in enumerate_sum_closed(t):
            if A in adm:
                continue
            n += 1
            spans = [monomial_basis_check(fundamental_module(t, i), A).spanning for i in range(1, t.rank + 1)]
            if all(spans):
                bad.append({"type": s, "set": format_roots(t, A)})
    return not bad, f"{n} sum-closed non-admissible sets, each fails to span for some fundamental: {not bad}", bad, ""


def relations(level="quick"):
    bad, n = [], 0
    for s in ("A3", "C2"):
        t = T(s)
        for inst in relation_instances(t):
            for i in range(1, t.rank + 1):
                if inst.family == "A" and not inst.indices[0] <= i <= inst.indices[1]:
                    continue
                n += 1
                v = relation_check(fundamental_module(t, i), inst)
                if not v.holds:
                    bad.append({"type": s, "fundamental": i, "family": inst.family,
                                "indices": list(inst.indices), "terms": inst.describe()})
    return not bad and n > 0, f"{n} relation instances, failures {len(bad)}", bad, f"{PROG} oracle relations --type C2 --fundamental 1 --all"


# Reference tableau lists, rows top to bottom.
REFERENCE_A3_TABLEAUX = [
    ((1, 1), (2,)), ((1, 2), (2,)), ((1, 1), (3,)), ((1, 2), (3,)), ((1, 3), (3,)),
    ((3, 1), (2,)), ((3, 2), (2,)), ((3, 3), (2,)), ((4, 1), (2,)), ((4, 2), (2,)),
    ((4, 3), (2,)), ((4, 4), (2,)), ((4, 1), (3,)), ((4, 2), (3,)), ((4, 3), (3,)),
    ((4, 4), (3,)), ((1, 1), (4,)), ((1, 2), (4,)), ((1, 3), (4,)), ((1, 4), (4,)),
]
REFERENCE_PERMISSIBLE = [
    ((1, 1), (2,)), ((1, 1), (3,)), ((1, 3), (3,)), ((3, 1), (2,)), ((3, 3), (2,)),
    ((4, 1), (2,)), ((4, 3), (2,)), ((4, 4), (2,)), ((4, 1), (3,)), ((4, 3), (3,)),
    ((4, 4), (3,)), ((1, 1), (4,)), ((1, 3), (4,)), ((1, 4), (4,)),
]
A3_TO_C2_ENTRY = {1: 1, 2: 2, 3: -2, 4: -1}


def tableaux_lists(level="quick"):
    a3, c2 = T("A3"), T("C2")
    got_a3 = {T_.rows for T_ in enumerate_tableaux(a3, (1, 1, 0))}
    ok_a3 = got_a3 == set(REFERENCE_A3_TABLEAUX) and len(REFERENCE_A3_TABLEAUX) == 20
    expected_c2 = {
        from_rows(c2, [[A3_TO_C2_ENTRY[x] for x in row] for row in rows]).rows
        for rows in REFERENCE_A3_TABLEAUX[:16]
    }
    got_c2 = {T_.rows for T_ in enumerate_tableaux(c2, (1, 1))}
    ok_c2 = got_c2 == expected_c2
    A = parse_roots(a3, "1.2,2.2,1.3,2.3")
    got_perm = {T_.rows for T_ in enumerate_tableaux(a3, (1, 1, 0)) if is_permissible(T_, A)}
    ok_perm = got_perm == set(REFERENCE_PERMISSIBLE)
    bad = []
    for s in ("A3", "C2"):
        t = T(s)
        for A in enumerate_admissible(t):
            for lam in _weights(t):
                ok, info = weight_multiset_match(t, lam, A)
                if not ok:
                    bad.append({"type": s, "set": format_roots(t, A), "weight": list(lam), **info})
    ok = ok_a3 and ok_c2 and ok_perm and not bad
    summary = (f"A3 list {len(got_a3)} {'=' if ok_a3 else '!='} reference, C2 list {len(got_c2)} "
               f"{'=' if ok_c2 else '!='} reference, permissible {len(got_perm)} {'=' if ok_perm else '!='} reference; "
               f"weight multiset mismatches {len(bad)}")
    return ok, summary, bad, f"{PROG} tableaux enumerate --type C2 --weight 1,1"


def favourable(level="quick"):
    bad, n = [], 0
    for s in ("A2", "C2"):
        t = T(s)
        for A in enumerate_admissible(t):
            for i in range(1, t.rank + 1):
                n += 1
                ok, dim, pts = favourable_check(t, fundamental(t, i), A)
                if not ok:
                    bad.append({"type": s, "set": format_roots(t, A), "fundamental": i, "dim": dim, "points": pts})
    return not bad, f"{n} cases, failures {len(bad)}", bad, ""


CRITERIA: list[tuple[int, str, float, Callable]] = [
    (1, "admissible-set counts", 1, admissible_counts),
    (2, "non-Weyl admissible sets", 1, non_weyl_sets),
    (3, "C2 symplectic triangular list", 1, c2_symplectic_list),
    (4, "type A: admissible A_w iff triangular", 10, a_triangular),
    (5, "type C: admissible A_w iff symplectic triangular", 60, c_triangular),
    (6, "admissible iff induced admissible", 60, folding),
    (7, "join equals case tables", 30, join_consistency),
    (8, "grid closure and difference stability", 120, grid_and_diff),
    (9, "lattice points vs dimension oracles", 300, fflv_counting),
    (10, "monomial bases of submodules", 900, monomial_bases),
    (11, "Minkowski property of faces", 60, minkowski),
    (12, "non-admissible sets fail to span", 300, not_admissible),
    (13, "relations in fundamental modules", 120, relations),
    (14, "tableaux lists and weight multisets", 120, tableaux_lists),
    (15, "favourable tensor-square condition", 300, favourable),
]


def run_criterion(number: int, level: str = "quick") -> CriterionResult:
    num, title, limit, fn = next(c for c in CRITERIA if c[0] == number)
    t0 = time.perf_counter()
    ok, summary, bad, replay = fn(level)
    elapsed = time.perf_counter() - t0
    return CriterionResult(num, title, bool(ok), summary, bad, replay if not ok else "", elapsed, limit)


def verify_all(level: str = "quick", only=None) -> list[CriterionResult]:
    return [run_criterion(c[0], level) for c in CRITERIA if only is None or c[0] in only]
