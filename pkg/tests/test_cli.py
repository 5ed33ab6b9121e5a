import json

import pytest

from pbwdemazure.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.startswith("{") else out


def test_admissible_enumerate(capsys):
    code, rep = run(capsys, "admissible", "enumerate", "--type", "C2")
    assert code == 0 and rep["verdict"] == "ok" and len(rep["payload"]) == 8
    assert rep["command"] == "admissible enumerate" and rep["parameters"] == {"type": "C2"}


def test_invalid_type_exits_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["fflv", "points", "--type", "Z9", "--weight", "1"])
    assert e.value.code == 2


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["nonsense"])
    assert e.value.code == 2


def test_guard_exits_2_and_force_lifts_it(capsys):
    code, rep = run(capsys, "fflv", "points", "--type", "A2", "--weight", "4,3")
    assert code == 2 and rep["verdict"] == "error"
    code, rep = run(capsys, "fflv", "points", "--type", "A2", "--weight", "4,3", "--force")
    assert code == 0 and rep["verdict"] == "ok"


def test_join(capsys):
    code, rep = run(capsys, "joins", "join", "--type", "C3", "--b1", "1.-2", "--b2", "1.3")
    assert rep["payload"] == {"pairs": [["1.-1", "2.3"]], "roots": ["1.-1", "2.3"]}


def test_closure_and_check(capsys):
    _, rep = run(capsys, "joins", "closure", "--type", "C2", "--set", "1.-2")
    assert rep["payload"]["roots"] == ["1.-1", "1.2", "2.2"]
    _, rep = run(capsys, "admissible", "check", "--type", "C2", "--set", "2.2,1.-1")
    assert rep["payload"]["admissible"] is True


def test_weyl(capsys):
    _, rep = run(capsys, "weyl", "aw", "--type", "C2", "--word", "1 2")
    assert rep["payload"]["a_w"] == ["1.-1", "1.1"] and "pattern_convention" in rep["metadata"]
    _, rep = run(capsys, "weyl", "triangular", "--type", "A3", "--all")
    assert len(rep["payload"]) == 24 and sum(r["triangular"] for r in rep["payload"]) == 22
    assert all(r["triangular"] == r["admissible"] for r in rep["payload"])


def test_fflv(capsys):
    _, rep = run(capsys, "fflv", "points", "--type", "A3", "--weight", "1,1,0", "--face", "1.2,2.2")
    assert rep["payload"] == [{}, {"2.2": 1}, {"1.2": 1}, {"1.2": 1, "2.2": 1}, {"1.2": 2}]
    code, out = run(capsys, "fflv", "points", "--type", "A2", "--weight", "1,1", "--csv")
    assert code == 0 and out.splitlines()[0] == "1.1,1.2,2.2" and len(out.splitlines()) == 9
    code, rep = run(capsys, "fflv", "minkowski", "--type", "C2", "--set", "2.2,1.-1", "--lam", "1,1", "--mu", "1,0")
    assert code == 0 and rep["payload"]["ok"] is True


def test_tableaux(capsys):
    _, rep = run(capsys, "tableaux", "enumerate", "--type", "C2", "--weight", "1,1")
    assert len(rep["payload"]) == 16 and rep["payload"][0] == {"shape": [2, 1], "rows": [[1, 1], [2]]}


def test_oracles(capsys):
    _, rep = run(capsys, "oracle", "demazure-dim", "--type", "C2", "--word", "2 1 2", "--weight", "1,1")
    assert rep["payload"]["dimension"] == 11
    code, rep = run(capsys, "oracle", "verify-basis", "--type", "A2", "--weight", "1,1", "--set", "1.2", "--graded")
    assert code == 0 and rep["payload"]["graded_dims"] == rep["payload"]["graded_points"]
    code, rep = run(capsys, "oracle", "relations", "--type", "C2", "--fundamental", "1", "--all")
    assert code == 0


def test_violation_is_replayable(capsys):
    argv = ["oracle", "verify-basis", "--type", "A2", "--weight", "1,1", "--set", "1.1,2.2"]
    code, rep = run(capsys, *argv)
    assert code == 1 and rep["verdict"] == "violated"
    assert rep["payload"]["replay"] == "pbwdemazure " + " ".join(argv)


def test_deterministic_output(capsys):
    argv = ["weyl", "triangular", "--type", "C2", "--all", "--seed", "7"]
    main(argv)
    first = capsys.readouterr().out
    main(argv[:-2])
    assert capsys.readouterr().out == first


def test_verify_all_subset(capsys):
    code, rep = run(capsys, "verify-all", "--level", "quick", "--only", "1,2,3")
    assert code == 0 and [r["criterion"] for r in rep["payload"]] == [1, 2, 3]
