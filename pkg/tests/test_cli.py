from __future__ import annotations

import json
import subprocess
import sys

import pytest

from altdesc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_table_alt_eulerian(capsys):
    code, out, _ = run(capsys, "table", "alt-eulerian", "--max-n", "7")
    assert code == 0
    assert out.splitlines()[-1] == "272 594 1056 1196 1056 594 272"
    assert out.splitlines()[4] == "16 26 36 26 16"


def test_table_euler_zero(capsys):
    assert run(capsys, "table", "euler", "--max-n", "0")[1] == "1"


def test_table_ehat_json(capsys):
    code, out, _ = run(capsys, "table", "ehat", "--max-n", "7", "--format", "json")
    rows = json.loads(out)["rows"]
    assert rows[7]["values"] == ["5", "21", "42", "56", "56", "44", "28", "14", "5", "1"]


@pytest.mark.parametrize("kind", ["euler", "alt-eulerian", "ehat", "R", "catalan"])
def test_table_csv_shapes(capsys, kind):
    code, out, _ = run(capsys, "table", kind, "--max-n", "5", "--format", "csv")
    assert code == 0 and out.splitlines()[0].startswith("n,")


def test_table_cap(capsys):
    assert run(capsys, "table", "euler", "--max-n", "11")[0] == 2
    assert run(capsys, "table", "euler", "--max-n", "11", "--unsafe")[0] == 0


def test_poly_outputs(capsys):
    code, out, _ = run(capsys, "poly", "cd-alt", "--n", "6")
    assert code == 0 and out.startswith("61c^5")
    assert run(capsys, "poly", "ahat-tq", "--n", "2")[1] == "1 + t*q"
    assert run(capsys, "poly", "fhat", "--n", "3")[1] == "m + m^3"
    data = json.loads(run(capsys, "poly", "ehat-q", "--n", "5", "--format", "json")[1])
    assert data == {"variable": "q", "coefficients": ["2", "5", "5", "3", "1"]}


def test_bijections(capsys):
    assert run(capsys, "bijection", "circle", "--perm", "1,3,2")[1].splitlines()[0] == "2,1"
    assert run(capsys, "bijection", "circle-inv", "--perm", "2,1")[1].splitlines()[0] == "1,3,2"
    assert run(capsys, "bijection", "blocks", "--perm", "5,9,3,4,1,8,6,7,2")[1] == "59341|8|672"
    assert run(capsys, "bijection", "code", "--perm", "2,1")[1].splitlines()[0] == "1,3,2"


@pytest.mark.parametrize(
    "argv",
    [
        ("bijection", "blocks", "--perm", "2,1"),
        ("bijection", "circle", "--perm", "2,1,3"),
        ("bijection", "code", "--perm", "1,1"),
        ("verify", "no-such-id"),
        ("verify", "tables", "--series-order", "15"),
    ],
)
def test_precondition_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_usage_errors_exit_2():
    for argv in (["table", "bogus"], ["poly", "fhat"], ["table", "euler", "--format", "xml"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_verify_one(capsys):
    code, out, _ = run(capsys, "verify", "thm-weighted-paths", "--max-n", "7")
    assert code == 0
    assert json.loads(out) == {"check_id": "thm-weighted-paths", "first_failure": None,
                               "order": 12, "status": "pass"}


def test_verify_failure_exit_code(capsys, monkeypatch):
    from altdesc import checks

    broken = checks.Check("tables", "always fails", 3, 12, lambda n, o: "boom")
    monkeypatch.setitem(checks.REGISTRY, "tables", broken)
    import altdesc.cli as cli

    monkeypatch.setattr(cli, "REGISTRY", checks.REGISTRY)
    code, out, _ = run(capsys, "verify", "tables")
    assert code == 1 and json.loads(out)["first_failure"] == "boom"


def test_verify_all_deterministic_across_jobs():
    cmd = [sys.executable, "-m", "altdesc", "verify", "all", "--max-n", "6", "--series-order", "10"]
    one = subprocess.run(cmd, capture_output=True, text=True)
    many = subprocess.run(cmd + ["--jobs", "3"], capture_output=True, text=True)
    assert one.returncode == 0 == many.returncode
    assert one.stdout == many.stdout
    assert all(json.loads(line)["status"] == "pass" for line in one.stdout.splitlines())


def test_timing_is_opt_in(capsys):
    _, out, _ = run(capsys, "verify", "tan-sec-euler", "--timing")
    assert "seconds" in json.loads(out)
    _, out, _ = run(capsys, "verify", "tan-sec-euler")
    assert "seconds" not in json.loads(out)
