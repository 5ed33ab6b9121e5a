"""
Command-line front end.  Every command prints one JSON report

    {"command": ..., "parameters": ..., "verdict": ok|violated|error, "payload": ...}

to stdout and a one-line human summary (with elapsed time) to stderr.
Exit codes: 0 ok, 1 a verification found a violation, 2 usage or guard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import shlex
import sys
import time
from typing import Optional, Sequence

from . import __version__
from .admissible import enumerate_admissible, is_admissible, is_induced_admissible
from .fflv import lattice_points, minkowski_check, parse_weight, point_to_json
from .joins import check_linked_path, diff_stable, grid_closure, join, join_closure
from .oracles.characters import demazure_dim, weyl_dim
from .oracles.checks import fundamental_module, monomial_basis_check, relation_check, relation_instances
from .oracles.modules import build_module
from .roots import (
    GuardError,
    LieType,
    dyck_paths,
    format_roots,
    maximal_dyck_paths,
    parse_root,
    parse_roots,
    positive_roots,
)
from .tableaux import enumerate_tableaux, is_permissible
from .verify import verify_all
from .weyl import (
    PATTERN_CONVENTION,
    a_w,
    aw_labels,
    enumerate_weyl,
    format_word,
    from_word,
    is_symplectic_triangular,
    is_triangular,
    parse_word,
)

log = logging.getLogger("pbwdemazure")


class Violation(Exception):
    """Raised by a handler to report a failed verification with its payload."""

    def __init__(self, payload):
        super().__init__("verification failed")
        self.payload = payload


def _lie_type(text: str) -> LieType:
    try:
        return LieType.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


# -- handlers: each returns (payload, summary) or raises Violation --------------------

def cmd_roots_list(a):
    t = a.type
    roots = positive_roots(t)
    return [{"root": r.label, "height": r.height, "coeffs": list(r.coeffs)} for r in roots], f"{len(roots)} positive roots"


def cmd_roots_paths(a):
    t = a.type
    paths = maximal_dyck_paths(t) if a.maximal else dyck_paths(t)
    return [{"roots": p.labels(), "s": p.s, "e": p.e} for p in paths], f"{len(paths)} Dyck paths"


def cmd_joins_join(a):
    t = a.type
    res = join(t, parse_root(t, a.b1), parse_root(t, a.b2))
    return res.to_json(t), f"{len(res.pairs)} pairs"


def cmd_joins_closure(a):
    t = a.type
    c = join_closure(t, parse_roots(t, a.set))
    return {"roots": format_roots(t, c)}, f"closure of size {len(c)}"


def cmd_joins_grid(a):
    t = a.type
    path = check_linked_path(t, [parse_root(t, x) for x in a.path.split(",")])
    g = grid_closure(t, path)
    c = join_closure(t, path)
    payload = {
        "grid": format_roots(t, g),
        "closure": format_roots(t, c),
        "equal": g == c,
        "difference_stable": diff_stable(t, g),
    }
    if not (payload["equal"] and payload["difference_stable"]):
        raise Violation(payload)
    return payload, "grid closure equals join closure and is difference stable"


def cmd_admissible_check(a):
    t = a.type
    S = parse_roots(t, a.set)
    out = {"admissible": is_admissible(t, S)}
    if t.family == "C":
        out["induced_admissible"] = is_induced_admissible(t, S)
    return out, f"admissible: {out['admissible']}"


def cmd_admissible_enumerate(a):
    t = a.type
    sets = enumerate_admissible(t, force=a.force)
    return [format_roots(t, s) for s in sets], f"{len(sets)} admissible sets"


def _weyl_row(w):
    t = w.lie_type
    tri = is_triangular(w) if t.family == "A" else is_symplectic_triangular(w)
    return {
        "word": format_word(w.word),
        "one_line": list(w.one_line),
        "length": w.length,
        "triangular": tri,
        "admissible": is_admissible(t, a_w(w)),
        "a_w": aw_labels(w),
    }


def cmd_weyl_aw(a):
    w = from_word(a.type, parse_word(a.word))
    return _weyl_row(w), f"A_w has {w.length} roots"


def cmd_weyl_triangular(a):
    t = a.type
    if a.all:
        rows = [_weyl_row(w) for w in enumerate_weyl(t, force=a.force)]
        n = sum(r["triangular"] for r in rows)
        return rows, f"{n} of {len(rows)} elements triangular"
    if a.word is None:
        raise ValueError("give --word or --all")
    row = _weyl_row(from_word(t, parse_word(a.word)))
    return row, f"triangular: {row['triangular']}"


def cmd_fflv_points(a):
    t = a.type
    lam = parse_weight(t, a.weight)
    face = parse_roots(t, a.face) if a.face else None
    pts = lattice_points(t, lam, support=face, force=a.force)
    if a.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([r.label for r in positive_roots(t)])
        w.writerows(pts)
        return buf.getvalue(), f"{len(pts)} lattice points"
    return [point_to_json(t, p) for p in pts], f"{len(pts)} lattice points"


def cmd_fflv_minkowski(a):
    t = a.type
    A = parse_roots(t, a.set)
    ok, info = minkowski_check(t, A, parse_weight(t, a.lam), parse_weight(t, a.mu), force=a.force)
    payload = {"ok": ok, **info}
    if not ok:
        raise Violation(payload)
    return payload, "Minkowski property holds"


def cmd_tableaux_enumerate(a):
    t = a.type
    lam = parse_weight(t, a.weight)
    tabs = enumerate_tableaux(t, lam, force=a.force)
    if a.permissible is not None:
        A = parse_roots(t, a.permissible)
        tabs = [T for T in tabs if is_permissible(T, A)]
    return [T.to_json() for T in tabs], f"{len(tabs)} tableaux"


def cmd_oracle_demazure(a):
    t = a.type
    lam = parse_weight(t, a.weight)
    word = parse_word(a.word)
    return {"dimension": demazure_dim(t, word, lam), "weyl_dimension": weyl_dim(t, lam)}, "Demazure dimension"


def cmd_oracle_verify_basis(a):
    t = a.type
    lam = parse_weight(t, a.weight)
    A = parse_roots(t, a.set)
    if not is_admissible(t, A):
        log.warning("the set is not admissible; the basis property is not expected")
    v = monomial_basis_check(build_module(t, lam, force=a.force), A)
    payload = v.to_json()
    if not a.graded:
        for k in ("graded", "graded_dims", "graded_points"):
            payload.pop(k)
    ok = v.independent and v.spanning and (v.graded or not a.graded)
    if not ok:
        raise Violation(payload)
    return payload, f"{v.points} monomials form a basis of a {v.submodule_dim}-dimensional submodule"


def cmd_oracle_relations(a):
    t = a.type
    M = fundamental_module(t, a.fundamental)
    insts = relation_instances(t)
    if not a.all:
        if a.family is None or a.indices is None:
            raise ValueError("give --all or both --family and --indices")
        insts = [x for x in insts if x.family == a.family and x.indices == a.indices]
        if not insts:
            raise ValueError(f"no relation instance {a.family} {a.indices} in {t}")
    rows = []
    for inst in insts:
        v = relation_check(M, inst)
        rows.append({"family": inst.family, "indices": list(inst.indices), "terms": inst.describe(), **v.to_json()})
    failed = [r for r in rows if not r["holds"]]
    if failed:
        raise Violation({"failed": failed, "checked": len(rows)})
    return rows, f"{len(rows)} relation instances hold"


def cmd_verify_all(a):
    only = set(a.only) if a.only else None
    results = verify_all(a.level, only)
    for r in results:
        print(r.line(), file=sys.stderr)
    payload = [r.to_json() for r in results]
    if not all(r.passed for r in results):
        raise Violation(payload)
    return payload, f"{len(results)} criteria pass"


# -- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--force", action="store_true", help="lift the desk-scale guards (may run long)")
    common.add_argument("--seed", type=int, default=None, help="accepted and ignored; everything is deterministic")

    typed = argparse.ArgumentParser(add_help=False, parents=[common])
    typed.add_argument("--type", required=True, type=_lie_type, help="Lie type, e.g. A3 or C2")

    p = argparse.ArgumentParser(prog="pbwdemazure", description=__doc__.strip().splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="group", required=True)

    def leaf(group_parsers, name, func, parent=typed, **kw):
        q = group_parsers.add_parser(name, parents=[parent], **kw)
        q.set_defaults(func=func)
        return q

    g = sub.add_parser("roots").add_subparsers(dest="cmd", required=True)
    leaf(g, "list", cmd_roots_list)
    leaf(g, "paths", cmd_roots_paths).add_argument("--maximal", action="store_true", help="cover-step paths only")

    g = sub.add_parser("joins").add_subparsers(dest="cmd", required=True)
    q = leaf(g, "join", cmd_joins_join)
    q.add_argument("--b1", required=True)
    q.add_argument("--b2", required=True)
    leaf(g, "closure", cmd_joins_closure).add_argument("--set", required=True)
    leaf(g, "grid", cmd_joins_grid).add_argument("--path", required=True, help="linked Dyck path, comma separated")

    g = sub.add_parser("admissible").add_subparsers(dest="cmd", required=True)
    leaf(g, "check", cmd_admissible_check).add_argument("--set", required=True)
    leaf(g, "enumerate", cmd_admissible_enumerate)

    g = sub.add_parser("weyl").add_subparsers(dest="cmd", required=True)
    leaf(g, "aw", cmd_weyl_aw).add_argument("--word", required=True, help='e.g. "1 2" (first letter applied first)')
    q = leaf(g, "triangular", cmd_weyl_triangular)
    q.add_argument("--word")
    q.add_argument("--all", action="store_true")

    g = sub.add_parser("fflv").add_subparsers(dest="cmd", required=True)
    q = leaf(g, "points", cmd_fflv_points)
    q.add_argument("--weight", required=True)
    q.add_argument("--face", help="restrict to points supported on this root set")
    q.add_argument("--csv", action="store_true", help="CSV dump instead of JSON")
    q = leaf(g, "minkowski", cmd_fflv_minkowski)
    q.add_argument("--set", required=True)
    q.add_argument("--lam", required=True)
    q.add_argument("--mu", required=True)

    g = sub.add_parser("tableaux").add_subparsers(dest="cmd", required=True)
    q = leaf(g, "enumerate", cmd_tableaux_enumerate)
    q.add_argument("--weight", required=True)
    q.add_argument("--permissible", help="keep tableaux permissible for this root set")

    g = sub.add_parser("oracle").add_subparsers(dest="cmd", required=True)
    q = leaf(g, "demazure-dim", cmd_oracle_demazure)
    q.add_argument("--word", required=True)
    q.add_argument("--weight", required=True)
    q = leaf(g, "verify-basis", cmd_oracle_verify_basis)
    q.add_argument("--weight", required=True)
    q.add_argument("--set", required=True)
    q.add_argument("--graded", action="store_true", help="also compare graded dimensions")
    q = leaf(g, "relations", cmd_oracle_relations)
    q.add_argument("--fundamental", required=True, type=int)
    q.add_argument("--all", action="store_true")
    q.add_argument("--family", choices=["A", "C1", "C2"])
    q.add_argument("--indices", type=_int_list)

    q = sub.add_parser("verify-all", parents=[common])
    q.set_defaults(func=cmd_verify_all)
    q.add_argument("--level", choices=["quick", "full"], default="quick")
    q.add_argument("--only", type=_int_list, help="criterion numbers, comma separated")
    return p


_IGNORED = {"func", "force", "seed", "group", "cmd"}


def _parameters(a) -> dict:
    out = {}
    for k, v in sorted(vars(a).items()):
        if k in _IGNORED or v is None or v is False:
            continue
        out[k] = str(v) if isinstance(v, LieType) else (list(v) if isinstance(v, tuple) else v)
    if a.force:
        out["force"] = True
    return out


def _configure_logging():
    level = os.environ.get("FFLV_LOG", "error").lower()
    levels = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}
    logging.basicConfig(level=levels.get(level, logging.ERROR), stream=sys.stderr, format="%(levelname)s %(message)s")


def main(argv: Optional[Sequence[str]] = None) -> int:
    _configure_logging()
    parser = build_parser()
    a = parser.parse_args(argv)
    command = a.group if a.group == "verify-all" else f"{a.group} {a.cmd}"
    report = {"command": command, "parameters": _parameters(a)}
    if a.group in ("weyl", "verify-all"):
        report["metadata"] = {"pattern_convention": PATTERN_CONVENTION}
    t0 = time.perf_counter()
    code = 0
    try:
        payload, summary = a.func(a)
        report.update(verdict="ok", payload=payload)
    except Violation as v:
        if isinstance(v.payload, dict):
            v.payload.setdefault("replay", shlex.join(["pbwdemazure", *(sys.argv[1:] if argv is None else argv)]))
        report.update(verdict="violated", payload=v.payload)
        summary, code = "verification failed", 1
    except (GuardError, ValueError, KeyError) as e:
        report.update(verdict="error", payload={"error": str(e)})
        summary, code = f"error: {e}", 2
    elapsed = int((time.perf_counter() - t0) * 1000)
    if isinstance(report.get("payload"), str):
        sys.stdout.write(report["payload"])
    else:
        json.dump(report, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
    print(f"{command}: {summary} (elapsed_ms={elapsed})", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
