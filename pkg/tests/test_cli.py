import json

import pytest

from antiramsey.cli import main
from antiramsey.colorings import load_coloring, num_colors
from antiramsey.graph import matching, petersen
from antiramsey.canon import is_isomorphic
from antiramsey.graph6 import decode, write_family_file


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_decompose_g6(capsys):
    code, out, _ = run(capsys, "decompose", "--expr", "K4", "--expr", "2*K3")
    assert code == 0
    assert out.split() == ["Bw", "C`"]


def test_decompose_json_from_file(tmp_path, capsys):
    path = tmp_path / "f.g6"
    write_family_file(path, [petersen()])
    code, out, _ = run(capsys, "decompose", "--family", str(path), "--emit", "json")
    assert code == 0
    (g6,) = json.loads(out)["decomposition"]
    assert is_isomorphic(decode(g6), matching(6))


def test_sequence_json(capsys):
    code, out, _ = run(capsys, "sequence", "--expr", "K5", "--emit", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["stages"]) == 4 and doc["p0"] == 4


def test_sequence_frozen_p(capsys):
    code, out, _ = run(capsys, "sequence", "--expr", "K5", "--freeze-p")
    assert code == 0 and "p = 4" in out


def test_ar_exact(capsys):
    code, out, err = run(capsys, "ar-exact", "--expr", "K3", "-n", "5")
    assert code == 0
    assert json.loads(out)["value"] == 4
    assert "best" in err


def test_ar_exact_budget(capsys):
    code, out, err = run(capsys, "ar-exact", "--expr", "K4", "-n", "6", "--budget", "20")
    assert code == 3
    assert json.loads(out)["status"] == "budget-exhausted"


def test_formula(capsys):
    assert run(capsys, "formula", "--theorem", "petersen", "-n", "12")[1].strip() == "43"
    assert run(capsys, "formula", "--theorem", "1.4", "-n", "7", "-p", "2")[1].strip() == "13"


def test_construct_and_verify(tmp_path, capsys):
    out_path = tmp_path / "c.json"
    code, _, err = run(capsys, "construct", "--theorem", "petersen", "-n", "12", "--out", str(out_path))
    assert code == 0 and "43" in err
    assert num_colors(load_coloring(out_path)) == 43
    code, out, _ = run(capsys, "verify", "--coloring", str(out_path), "--expr", "petersen")
    assert code == 0 and json.loads(out)["free"] is True
    code, out, _ = run(capsys, "verify", "--coloring", str(out_path), "--expr", "K3")
    assert code == 1 and "violation" in json.loads(out)


def test_construct_stdout(capsys):
    code, out, _ = run(capsys, "construct", "--theorem", "h-prime", "-n", "10", "-k", "3", "--labels", "0", "1")
    assert code == 0 and json.loads(out)["n"] == 10


def test_verify_renormalize(tmp_path, capsys):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"n": 3, "edges": [[0, 1, 5], [0, 2, 5], [1, 2, 2]]}))
    assert run(capsys, "verify", "--coloring", str(path), "--expr", "K3")[0] == 2
    assert run(capsys, "verify", "--coloring", str(path), "--expr", "K3", "--renormalize")[0] == 0


def test_theorem(capsys):
    code, out, _ = run(capsys, "theorem", "--theorem", "1.12", "-n", "12", "-k", "3")
    assert code == 0 and "overall: PASS" in out
    code, out, _ = run(capsys, "theorem", "--theorem", "h-prime", "-n", "12", "-k", "3", "--expr", "petersen",
                       "--emit", "json")
    assert code == 0 and json.loads(out)["passed"]


def test_qmax(capsys):
    code, out, _ = run(capsys, "qmax", "-p", "2", "-k", "3", "--expr", "petersen")
    doc = json.loads(out)
    assert code == 0 and doc["q"] == 2 and doc["stable"]


def test_k5_check_reports_failure(capsys):
    code, out, _ = run(capsys, "k5-check")
    assert code == 1
    assert "M2" in out and "overall: FAIL" in out
    code, out, _ = run(capsys, "k5-check", "--emit", "json")
    assert json.loads(out)["passed"] is False


@pytest.mark.parametrize("argv", [
    ["decompose"],
    ["decompose", "--expr", "K"],
    ["nonsense"],
    ["ar-exact", "--expr", "K3"],
    ["verify", "--coloring", "/nonexistent.json", "--expr", "K3"],
    ["construct", "--theorem", "gadget", "-n", "6", "-p", "3", "-k", "4"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2
