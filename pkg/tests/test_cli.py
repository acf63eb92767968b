import json
import os
import subprocess
import sys

import pytest

from quandle_cocycles.cli import main
from quandle_cocycles.io import cochain_to_json, entries_from_json, load_cochain, result_to_json
from quandle_cocycles.invariants import twistspin_invariant


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_process(*argv, env=None):
    e = dict(os.environ, **(env or {}))
    return subprocess.run([sys.executable, "-m", "quandle_cocycles.cli", *argv], capture_output=True, text=True, env=e)


def test_colorings(capsys):
    code, out, _ = run(capsys, "colorings", "--braid", "1 1 1", "--quandle", "dihedral:3")
    assert code == 0
    assert out.startswith("9 colorings") and "3 trivial" in out and "6 non-trivial" in out


def test_colorings_single_strand(capsys):
    code, out, _ = run(capsys, "colorings", "--braid", "", "--strands", "1", "--quandle", "dihedral:5", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["count"] == 5 and obj["trivial"] == 5


def test_colorings_figure_eight_over_r3(capsys):
    code, out, _ = run(capsys, "colorings", "--braid", "1 -2 1 -2", "--quandle", "dihedral:3", "--format", "json")
    assert json.loads(out)["count"] == 3


def test_module_invariant(capsys):
    code, out, _ = run(capsys, "module-invariant", "--knot", "3_1", "--quandle", "dihedral:3", "--action", "wreath", "--q", "0", "--format", "json")
    obj = json.loads(out)
    got = {(tuple(e["value"]["torsion"]), e["value"]["rank"], e["type"]): e["count"] for e in obj["entries"]}
    assert got == {((3,), 3, "trivial"): 3, ((), 4, "nontrivial"): 6}


def test_module_invariant_dump(capsys):
    code, out, _ = run(capsys, "module-invariant", "--braid", "1 1 1", "--dump-matrices")
    assert code == 0 and out.count("\n") > 9


def test_twistspin_table_row(capsys):
    code, out, _ = run(capsys, "twistspin", "--knot", "8_18", "--twists", "2", "--cocycle", "builtin:r3-example3", "--orientation", "reversed", "--format", "json")
    counts = sorted(e["count"] for e in json.loads(out)["entries"])
    assert code == 0 and sum(counts) == 27


def test_twistspin_bind(capsys):
    code, out, _ = run(capsys, "twistspin", "--knot", "3_1", "--orientation", "reversed", "--bind", "q1=1,q2=0")
    assert code == 0 and "q1" not in out.split("\n", 1)[1]
    code, _, err = run(capsys, "twistspin", "--knot", "3_1", "--bind", "q1=x")
    assert code == 2 and "binding" in err


def test_conj_invariant_hopf(capsys):
    code, out, _ = run(capsys, "conj-invariant", "--braid", "1 1", "--quandle", "transpositions:5", "--beta", "builtin:s5-section")
    # [(4 5)] and [(3 4)] name the same class of transpositions in Sym(3,4,5)
    assert code == 0 and "([(4 5)], [(4 5)])" in out


def test_cocycle_verify_and_search(capsys):
    assert run(capsys, "cocycle", "verify", "--cocycle", "builtin:r3-example2")[0] == 0
    assert run(capsys, "cocycle", "verify", "--cocycle", "builtin:r3-example3")[0] == 0
    code, out, _ = run(capsys, "cocycle", "search", "--quandle", "dihedral:3", "--module", "wreath", "--q", "3", "--degree", "2", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["cohomology_dim"] == 1


def test_cocycle_verify_failure(tmp_path, capsys):
    f, _, _ = load_cochain("builtin:r3-example2")
    data = cochain_to_json(f, "dihedral:3")
    old = data["values"].get("0,1", [[0], [0], [0]])
    data["values"]["0,1"] = [[(old[0][0] + 1) % 3]] + old[1:]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(data))
    code, out, _ = run(capsys, "cocycle", "verify", "--cocycle", str(p))
    assert code == 1


def test_quandle_commands(tmp_path, capsys):
    p = tmp_path / "r4.json"
    assert run(capsys, "quandle", "make", "dihedral:4", "-o", str(p))[0] == 0
    assert run(capsys, "quandle", "verify", str(p))[0] == 0
    p.write_text(json.dumps({"op": [[1, 1], [0, 0]]}))
    assert run(capsys, "quandle", "verify", str(p))[0] != 0


def test_table_commands(capsys):
    code, out, _ = run(capsys, "table", "3", "--only", "3_1,8_18,8_19")
    assert code == 0 and out.count("PASS") == 3
    assert run(capsys, "table", "5", "--only", "3_1")[0] == 0
    assert run(capsys, "table", "1", "--only", "3_1")[0] == 0
    code, out, _ = run(capsys, "table", "classical", "--only", "7_7")
    assert code == 1 and "FAIL" in out


def test_reports(capsys):
    code, out, _ = run(capsys, "report", "invertibility", "--knots", "3_1,8_18,8_20", "--expect", "3_1,8_18")
    assert code == 0 and "8_20   inconclusive" in out
    code, out, _ = run(capsys, "report", "chirality", "--knots", "3_1,6_1", "--format", "json")
    assert json.loads(out)["results"] == {"3_1": "chiral", "6_1": "inconclusive"}
    assert run(capsys, "report", "chirality", "--knots", "6_1", "--expect", "6_1")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["colorings", "--braid", "1 x", "--quandle", "dihedral:3"],
        ["colorings", "--braid", "1", "--quandle", "nope:3"],
        ["module-invariant", "--knot", "99_1"],
        ["twistspin", "--knot", "3_1", "--cocycle", "builtin:r3-example2"],
        ["cocycle-invariant", "--braid", "1 1 1", "--cocycle", "/nonexistent.json"],
        ["colorings", "--quandle", "dihedral:3"],
        ["module-invariant", "--braid", "1 1 1", "--convention", "sideways"],
    ],
)
def test_input_errors_exit_2(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_json_round_trip(capsys, knots):
    code, out, _ = run(capsys, "twistspin", "--knot", "8_18", "--format", "json")
    f, X, A = load_cochain("builtin:r3-example3")
    res = twistspin_invariant(knots["8_18"]["braid"], X, A, f)
    assert entries_from_json(json.loads(out)) == dict(res.counter())
    assert entries_from_json(result_to_json(res)) == dict(res.counter())
    code, out, _ = run(capsys, "module-invariant", "--knot", "8_18", "--format", "json")
    obj = json.loads(out)
    assert sum(entries_from_json(obj).values()) == 27


@pytest.mark.parametrize(
    "argv",
    [
        ["twistspin", "--knot", "8_18", "--orientation", "reversed", "--format", "json"],
        ["table", "2", "--format", "json"],
        ["report", "chirality", "--knots", "3_1,4_1,8_18,8_19"],
    ],
)
def test_output_is_deterministic(argv):
    a = run_process(*argv, env={"PYTHONHASHSEED": "1"})
    b = run_process(*argv, "--jobs", "3", env={"PYTHONHASHSEED": "2"})
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout and a.stdout


def test_seeded_sampling_is_reproducible():
    argv = ["cocycle", "search", "--quandle", "dihedral:3", "--q", "3", "--sample", "2"]
    a = run_process(*argv, "--seed", "7")
    b = run_process(*argv, "--seed", "7")
    assert a.returncode == 0 and a.stdout == b.stdout
