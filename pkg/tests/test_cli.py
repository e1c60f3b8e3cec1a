import io
import json
import subprocess
import sys

import pytest

from fepadic.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_fe_numbers_csv():
    code, out = run("fe-numbers", "--u", "2", "--max-n", "2", "--format", "csv")
    assert code == 0
    assert out.strip() == "0,1\n1,1\n2,3"


def test_fe_numbers_json_cross_check():
    code, out = run("fe-numbers", "--u", "-1/2", "--max-n", "4", "--format", "json", "--cross-check")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"u": "-1/2", "values": ["1", "-2/3", "2/9", "2/9", "-10/27"], "cross_check": True}


def test_fe_numbers_plain():
    code, out = run("fe-numbers", "--u=-1", "--max-n", "1")
    assert code == 0
    assert out == "H_0(-1) = 1\nH_1(-1) = -1/2\n"


def test_fe_poly():
    assert run("fe-poly", "--u", "2", "--n", "2") == (0, "3 + 2*x + x^2\n")
    code, out = run("fe-poly", "--u", "2", "--n", "2", "--format", "csv")
    assert out == "0,3\n1,2\n2,1\n"


def test_bernstein():
    assert run("bernstein", "--k", "1", "--n", "2") == (0, "2*x - 2*x^2\n")
    assert run("bernstein", "--k", "1", "--n", "2", "--eval", "1/2") == (0, "1/2\n")


def test_integrate():
    assert run("integrate", "--p", "3", "--u", "4", "--poly", "1", "--precision", "6") == (0, "292 mod 3^6\n")
    assert run("integrate", "--p", "3", "--u", "4", "--poly", "x", "--exact") == (0, "-8/25\n")
    assert run("integrate", "--p", "3", "--u", "2", "--poly", "(1-x)", "--exact") == (0, "10/9\n")


def test_verify_c1_default(tmp_path):
    code, out = run("verify", "--claims", "C1", "--grid", "default")
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"]["C1"]["refuted"] == 0
    assert doc["summary"]["C1"]["verified"] == len(doc["results"]) > 0


def test_verify_replay_witness():
    code, out = run("verify", "--claim", "C6", "--n", "1", "--u", "2")
    assert code == 0
    row = json.loads(out)["results"][0]
    assert (row["status"], row["lhs"], row["rhs"]) == ("refuted", "10/9", "8/9")
    code, _ = run("verify", "--claim", "C6", "--n", "1", "--u", "2", "--fail-on-refuted")
    assert code == 3
    code, out = run("verify", "--claim", "C12b", "--k", "1", "--ns", "1,2,3", "--s", "3", "--u", "-1/2")
    assert code == 0
    assert json.loads(out)["results"][0]["params"]["ns"] == [1, 2, 3]


def test_verify_grid_file_and_report(tmp_path):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps({"n": [0, 1, 2], "u": ["2", "-1/2"], "x": ["0"], "s": [2]}))
    report = tmp_path / "r.md"
    code, out = run("verify", "--claims", "C4,C6", "--grid", str(grid), "--report", str(report),
                    "--format", "markdown", "--fail-on-refuted")
    assert code == 3
    assert out == ""
    assert report.read_text().startswith("# Verification report")


def test_exit_code_contract(tmp_path):
    # usage / parse errors -> 1
    assert run("bogus")[0] == 1
    assert run("fe-numbers", "--u", "2")[0] == 1
    assert run("fe-numbers", "--u", "0.5", "--max-n", "2")[0] == 1
    assert run("integrate", "--p", "3", "--u", "4", "--poly", "(1-x")[0] == 1
    assert run("integrate", "--p", "3", "--u", "4", "--poly", "1/0")[0] == 1
    assert run("verify", "--claims", "C99")[0] == 1
    assert run("verify", "--claim", "C6", "--n", "1")[0] == 1
    assert run("verify", "--grid", str(tmp_path / "missing.json"))[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": [0, 99]}')
    assert run("verify", "--claims", "C1", "--grid", str(bad))[0] == 1
    # computation errors (preconditions) -> 2
    assert run("fe-numbers", "--u", "1", "--max-n", "2")[0] == 2
    assert run("integrate", "--p", "3", "--u", "2", "--poly", "x")[0] == 2
    assert run("integrate", "--p", "9", "--u", "10", "--poly", "x")[0] == 2
    assert run("bernstein", "--k", "3", "--n", "2")[0] == 2
    assert run("integrate", "--p", "3", "--u", "-1", "--poly", "x", "--exact")[0] == 2


def test_errors_go_to_stderr(capsys):
    out = io.StringIO()
    assert main(["integrate", "--p", "3", "--u", "4", "--poly", "x +"], out=out) == 1
    assert out.getvalue() == ""
    err = capsys.readouterr().err
    assert "byte 3" in err


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "fepadic", "verify", "--claims", "C5,C8a", "--format", "markdown"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True)
    b = subprocess.run(cmd, capture_output=True, text=True, check=True)
    assert a.stdout == b.stdout and a.stdout
