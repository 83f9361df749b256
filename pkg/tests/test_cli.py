import json
from pathlib import Path

import pytest

from terminal_divisors import analysis
from terminal_divisors.cli import main

REQUESTS = Path(__file__).resolve().parent.parent / "demos" / "requests"

DEGENERATE = """quotient 4; 1 3 1 2
1 2 0 0 0
1 0 2 0 0
1 0 0 4 1
-2 0 0 2 2
1 0 0 0 3
1 0 0 18 0
"""


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", ["cax4_example.txt", "cax2_example.txt", "cd32_example.txt",
                                  "cd33_example.txt", "cd31_example.txt", "cd22_example.txt",
                                  "ce2_genus3.txt", "ce2_two_cones.txt", "ce2_generic.json"])
def test_examples_verify(capsys, name):
    code, out, _ = run(capsys, "analyze", REQUESTS / name, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["theorem_check"]["status"] == "verified"


def test_report_schema(capsys):
    _, out, _ = run(capsys, "analyze", REQUESTS / "cax4_example.txt", "--json")
    doc = json.loads(out)
    assert set(doc) == {"schema", "version", "mode", "type", "parameters", "equation", "quotient",
                        "bound", "candidates", "theorem_check", "flags"}
    assert doc["schema"] == "terminal-divisors/report" and doc["version"] == 1
    row = next(c for c in doc["candidates"] if c["weight"] == "1/4(9,11,1,2)")
    assert row["label"] == "nu1" and row["genus"] == 2 and row["discrepancy"] == "1/4"
    assert set(row) >= {"kind", "quotient_order", "face", "verdict", "genus_bound", "components"}
    assert doc["theorem_check"] == {"status": "verified", "nonrational": 2, "maximum": 2}


def test_output_is_deterministic(capsys):
    for argv in (["analyze", REQUESTS / "ce2_generic.json", "--json", "--seed", "3"],
                 ["analyze", REQUESTS / "cd22_example.txt"],
                 ["enumerate", "--type", "cD/2-2", "--param", "n=7", "--json"]):
        first = run(capsys, *argv)[1]
        assert first and run(capsys, *argv)[1] == first


def test_undetermined_exit(capsys, tmp_path):
    path = tmp_path / "degenerate.txt"
    path.write_text(DEGENERATE)
    code, out, _ = run(capsys, "analyze", path, "--check-nondegeneracy")
    assert code == 3 and "degenerate" in out


def test_inconsistent_exit(capsys, monkeypatch):
    monkeypatch.setitem(analysis.MAX_NONRATIONAL, "cAx/4", 1)
    code, out, _ = run(capsys, "analyze", REQUESTS / "cax4_example.txt", "--json")
    assert code == 4
    assert json.loads(out)["theorem_check"]["status"] == "inconsistent"


@pytest.mark.parametrize("text", ["0.5 2 0 0 0\n", "", "quotient 4; 1 3 1 2\n1 1 1 1 1\n",
                                  "1 2 0 0 0\noption colour 1\n"])
def test_invalid_input_exit(capsys, tmp_path, text):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    code, out, err = run(capsys, "analyze", path)
    assert code == 2 and out == "" and err.startswith("error:")


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", tmp_path / "absent.txt")
    assert code == 2 and "cannot read" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--type", "cE/2", "--json")
    assert code == 0
    rows = json.loads(out)["candidates"]
    assert len(rows) == 7
    code, out, _ = run(capsys, "enumerate", "--type", "cAx/4", "--param", "n=3")
    assert code == 0 and "1/4(1,3,1,2)" in out
    assert run(capsys, "enumerate", "--type", "cAx/4")[0] == 2
    assert run(capsys, "enumerate", "--type", "cAx/4", "--param", "n")[0] == 2
    assert run(capsys, "enumerate", "--type", "cQ/7", "--param", "n=1")[0] == 2


def test_family_flag(capsys):
    code, out, _ = run(capsys, "analyze", REQUESTS / "cd22_example.txt", "--family", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["mode"] == "family" and doc["parameters"]["n"] == 13


def test_genus_command(capsys):
    code, out, _ = run(capsys, "genus", "--weights", "3,1,1", "--poly",
                       REQUESTS / "hyperelliptic_genus2.txt", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["genus"] == 2
    assert sum(r["applicable"] for r in doc["routes"].values()) >= 2
    assert run(capsys, "genus", "--weights", "3,1", "--poly",
               REQUESTS / "hyperelliptic_genus2.txt")[0] == 2
    assert run(capsys, "genus", "--weights", "1,1,1", "--poly",
               REQUESTS / "hyperelliptic_genus2.txt")[0] == 2


def test_genus_undetermined(capsys, tmp_path, monkeypatch):
    from terminal_divisors import cli
    from terminal_divisors.curves import NotApplicable

    def never(curve):
        raise NotApplicable("disabled")
    for name in ("genus_cover", "genus_newton", "genus_quasismooth"):
        monkeypatch.setattr(cli, name, never)
    code, out, _ = run(capsys, "genus", "--weights", "3,1,1", "--poly",
                       REQUESTS / "hyperelliptic_genus2.txt")
    assert code == 3 and "undetermined" in out
