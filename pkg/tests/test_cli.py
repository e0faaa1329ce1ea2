import io
import json
import subprocess
import sys

import pytest

from spinfib import kernel
from spinfib.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    try:
        code = main(list(argv), out, err)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(autouse=True)
def _restore_cap():
    yield
    kernel.set_max_index(kernel.DEFAULT_MAX_INDEX)


def test_grid_text():
    code, out, _ = run("grid", "--seeds", "0,1,1,1", "--size", "7")
    assert code == 0
    rows = [list(map(int, line.split())) for line in out.strip().splitlines()]
    assert rows[0] == [13, 21, 18, 19, 19, 18, 21, 13]
    assert rows[-1] == [0, 1, 1, 2, 3, 5, 8, 13]


def test_grid_csv():
    code, out, _ = run("grid", "--seeds", "0,1,1,1", "--size", "1", "--format", "csv")
    assert code == 0 and out == "0,1\n1,1\n"


def test_grid_json():
    code, out, _ = run("grid", "--seeds", "2,1,3,4", "--size", "1", "--format", "json",
                       "--convention", "d-wins")
    data = json.loads(out)
    assert data["rows"] == [["2", "4"], ["4", "3"]]
    assert data["convention"] == "d-wins"


@pytest.mark.parametrize("argv", [
    ("grid", "--seeds", "x", "--size", "3"),
    ("grid", "--size", "0"),
    ("grid", "--size", "501"),
    ("sum", "--region", "diagonal", "--n", "3"),
])
def test_usage_errors(argv):
    code, _, _ = run(*argv)
    assert code == 2


def test_eval_methods():
    for method in ("closed", "recurrence"):
        assert run("eval", "7", "4", "--seeds", "0,1,1,1", "--method", method)[1] == "19\n"
    assert run("eval", "0", "0", "--seeds", "5,0,0,0")[1] == "5\n"
    code, out, err = run("eval", "3", "5", "--seeds", "2,1,3,4", "--method", "prop3")
    assert (code, out, err) == (0, "23\n", "")


def test_eval_paper_literal_warns_on_stderr():
    code, out, err = run("eval", "3", "5", "--seeds", "2,1,3,4", "--method", "prop3",
                         "--variant", "paper-literal")
    assert code == 0 and out == "20\n"
    assert "23" in err and "warning" in err


def test_eval_prop3_domain():
    code, out, err = run("eval", "3", "4", "--method", "prop3")
    assert code == 3 and out == ""
    assert "|m - n| >= 2" in err


def test_eval_recurrence_respects_convention():
    assert run("eval", "1", "0", "--seeds", "2,1,3,4", "--method", "recurrence",
               "--convention", "d-wins")[1] == "4\n"


def test_eval_json_roundtrip():
    big = ("eval", "1500", "700", "--seeds", "3,-1,4,1", "--method", "closed")
    text = run(*big)[1].strip()
    data = json.loads(run(*big, "--format", "json")[1])
    assert data["value"] == text
    assert data["method"] == "closed" and data["m"] == 1500 and data["seeds"] == [3, -1, 4, 1]
    assert int(data["value"]) == int(text)


def test_sum_commands():
    assert run("sum", "--seeds", "0,1,1,1", "--region", "triangle-incl", "--n", "3", "--closed")[1] == "16\n"
    assert run("sum", "--seeds", "0,1,1,1", "--region", "square", "--n", "2")[1] == "10\n"
    assert run("sum", "--seeds", "2,1,3,4", "--region", "square", "--n", "0")[1] == "2\n"


def test_sum_json_matches_text():
    args = ("sum", "--seeds", "2,1,3,4", "--region", "lower-strict", "--n", "40")
    text = run(*args)[1].strip()
    assert json.loads(run(*args, "--format", "json")[1])["value"] == text


def test_sum_closed_unavailable():
    code, _, err = run("sum", "--seeds", "2,1,3,4", "--region", "square", "--n", "3", "--closed")
    assert code == 3
    code, _, _ = run("sum", "--region", "upper-incl", "--n", "3", "--closed")
    assert code == 3


def test_sum_verify():
    code, out, _ = run("sum", "--region", "square", "--n", "40", "--verify", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["difference"] == "0" and data["direct"] == data["closed"]


def test_verify_suites():
    code, out, _ = run("verify", "--suite", "prop1", "--max", "30")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run("verify", "--suite", "prop3", "--max", "12")
    assert code == 0 and "diverges from the oracle on" in out
    code, out, _ = run("verify", "--suite", "identities", "--max", "1")
    assert code == 0


def test_verify_reports_failure(monkeypatch):
    from spinfib import sums
    monkeypatch.setattr(sums, "triangle_sum_closed", lambda m: 0)
    code, out, _ = run("verify", "--suite", "prop5", "--max", "5", "--format", "json")
    data = json.loads(out)
    assert code == 1
    bad = [r for r in data if not r["passed"]]
    assert bad and bad[0]["counterexample"]


def test_verify_bad_max():
    assert run("verify", "--max", "0")[0] == 2


def test_oeis_check_row():
    code, out, _ = run("oeis", "check", "--row", "0,1,1,1", "--column", "upper", "--anum", "A178523",
                       "--shift", "1", "--count", "20", "--offline")
    assert code == 0 and out.startswith("MATCH")


def test_oeis_check_zero_row():
    code, out, _ = run("oeis", "check", "--row", "0,0,0,0", "--column", "upper", "--anum", "A000045",
                       "--shift", "0", "--count", "5", "--offline")
    assert code == 1 and out.startswith("MISMATCH")


def test_oeis_check_all_json():
    code, out, _ = run("oeis", "check", "--all", "--count", "20", "--both-conventions", "--offline",
                       "--format", "json")
    data = json.loads(out)
    assert len(data["reports"]) == 50
    assert len(data["cells"]) == 25
    # A122491 and A190062 have no bundled fixture.
    assert code == 4


def test_oeis_check_missing_fixture():
    code, _, _ = run("oeis", "check", "--row", "0,1,1,1", "--column", "upper", "--anum", "A999999")
    assert code == 4


def test_oeis_check_needs_arguments():
    assert run("oeis", "check", "--row", "0,1,1,1")[0] == 2
    assert run("oeis", "check", "--all", "--count", "3")[0] == 2


def test_oeis_fetch_offline():
    code, out, _ = run("oeis", "fetch", "A000045", "A999999")
    assert code == 4
    assert "A000045: offset 0" in out and "A999999: error" in out


def test_bench():
    code, out, _ = run("bench", "fib", "10")
    assert code == 0 and "2 digits" in out
    assert run("bench", "grid", "0")[0] == 2
    code, out, _ = run("bench", "sums", "20", "--format", "csv")
    assert code == 0 and out.startswith("target,n,seconds,digits")


def test_max_index_flag():
    assert run("bench", "fib", "5000", "--max-index", "1000")[0] == 2
    assert run("eval", "1500", "1", "--max-index", "1000")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spinfib", "eval", "7", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "19\n"
