import json
import subprocess
import sys
from pathlib import Path

import pytest

from einfty.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_homology_text_and_json(capsys):
    code, out, _ = run(capsys, "homology", "--input", "rp2")
    assert code == 0 and "H_1(Z) = Z/2" in out
    code, out, _ = run(capsys, "homology", "--input", str(DATA / "lattice_torus.json"), "--json")
    payload = json.loads(out)
    assert [g["betti"] for g in payload["homology"]] == [1, 2, 1]
    code, out, _ = run(capsys, "homology", "--input", "rp2", "--ring", "Z/3")
    assert code == 0 and "H_1(Z/3) = 0" in out


def test_cohomology(capsys):
    code, out, _ = run(capsys, "cohomology", "--input", "torus_presented", "--json")
    payload = json.loads(out)
    assert [c["dimension"] for c in payload["cohomology"]] == [1, 2, 1]
    prods = {(r["i"], r["j"]): r["product"] for r in payload["cup"] if r["p"] == r["q"] == 1}
    assert prods[(0, 1)] == [1] and prods[(0, 0)] == [0]


def test_sq(capsys):
    code, out, _ = run(capsys, "sq", "--input", "rp2", "--k", "1", "--json")
    rep = json.loads(out)
    assert code == 0 and rep[1]["sq"]["matrix"] == [[1]]
    code, _, err = run(capsys, "sq", "--input", "rp2")
    assert code == 2 and "--k" in err


def test_eval_word(capsys):
    code, out, _ = run(capsys, "eval", "--term", "cup(1)", "--input", "[01]")
    assert code == 0 and out.strip() == "[01] ⊗ [01]"
    code, out, _ = run(capsys, "eval", "--term", "star", "--input", "[1][1]|[0][01]")
    assert code == 0 and out.strip() == "-[01][01]"
    code, out, _ = run(capsys, "eval", "--term", "delta", "--input", "[0,1]", "--side", "simplicial")
    assert code == 0 and "[0] ⊗ [0,1]" in out


def test_eval_on_complex(capsys):
    code, out, _ = run(capsys, "eval", "--term", "delta", "--input", "torus_presented", "--json")
    payload = json.loads(out)
    assert code == 0 and set(payload["cells"]) == {"Q"}


@pytest.mark.parametrize("argv", [
    ["eval", "--term", "comp(delta", "--input", "[01]"],
    ["eval", "--term", "star", "--input", "[01]"],
    ["eval", "--term", "delta", "--input", "[0x]"],
    ["eval", "--term", "star", "--input", "[0]|[0][1]"],
    ["eval", "--input", "[0]"],
    ["homology"],
    ["homology", "--input", "nowhere.json"],
    ["homology", "--input", "rp2", "--ring", "Q"],
    ["triangulate", "--input", "rp2"],
    ["verify", "--suite", "nope"],
    ["compare", "--n", "0"],
])
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ez", "--n", "3")
    assert code == 0 and "all relations hold" in out
    code, out, _ = run(capsys, "verify", "--suite", "bialgebra", "--n", "2", "--seed", "3", "--json")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_failure_exits_1(capsys, monkeypatch):
    from einfty import verify

    def broken(**kw):
        rep = verify.SuiteReport("broken")
        rep.add("always fails", False)
        return rep

    monkeypatch.setitem(verify.SUITES, "cs", broken)
    code, out, _ = run(capsys, "verify", "--suite", "cs")
    assert code == 1 and "FAIL" in out


def test_triangulate(capsys):
    code, out, _ = run(capsys, "triangulate", "--input", "cube_surface", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["ranks"] == [8, 18, 12] and len(payload["facets"]) == 12


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--n", "2")
    assert code == 0 and "EZ([01][01]) = -001x011 + 011x001" in out and "CS([01][01]) = [0,1,2]" in out
    code, out, _ = run(capsys, "compare", "--input", "hollow_square", "--json")
    assert code == 0 and json.loads(out)["passed"]


def test_counterexamples(capsys):
    code, out, _ = run(capsys, "counterexamples", "--json")
    payload = json.loads(out)
    assert code == 0 and len(payload["counterexamples"]) == 3
    assert all(c["reproduced"] for c in payload["counterexamples"])


def test_output_is_deterministic(capsys):
    first = run(capsys, "cohomology", "--input", "lattice_torus", "--json")[1]
    second = run(capsys, "cohomology", "--input", "lattice_torus", "--json")[1]
    assert first == second


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "einfty.cli", "homology", "--input", "hollow_square"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "H_1(Z) = Z" in r.stdout
