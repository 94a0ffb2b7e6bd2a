import csv
import io
import json
import subprocess
import sys

import pytest

from septic_qseries import identities
from septic_qseries.cli import main
from septic_qseries.identities import IdentityCheck
from septic_qseries.series import QSeries


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_klein_text(capsys):
    code, out, _ = run(capsys, "verify", "--check", "septic.klein", "--order", "10")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6  # five checks and a summary
    assert all(" pass " in line and "10" in line and " ms" in line for line in lines[:-1])
    assert lines[-1].startswith("5 pass, 0 fail")


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "--check", "nosuch")
    assert code == 2 and "nosuch" in err


@pytest.mark.parametrize("argv", [
    ["verify"],
    ["verify", "--all", "--order", "-3"],
    ["verify", "--all", "--order", "abc"],
    ["verify", "--all", "--jobs", "0"],
    ["verify", "--alpha", "1/2"],
    ["verify", "--all", "--format", "yaml"],
    ["frobnicate"],
    [],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_all_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--order", "10", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"version", "order", "results", "summary"}
    assert data["order"] == "10"
    names = [r["name"] for r in data["results"]]
    assert names == sorted(names) and len(names) == len(identities.REGISTRY)
    for r in data["results"]:
        assert set(r) == {"name", "status", "order_verified", "first_failure", "elapsed_ms"}
        assert r["status"] == "pass" and r["first_failure"] is None and r["order_verified"] == "10"
        assert isinstance(r["elapsed_ms"], int)
    assert data["summary"] == {"pass": len(names), "fail": 0, "precision_error": 0}
    # parse and re-serialize is idempotent
    assert json.dumps(json.loads(json.dumps(data))) == json.dumps(data)


def test_text_and_json_agree(capsys):
    argv = ["verify", "--check", "products", "--check", "cubic", "--order", "8"]
    _, text, _ = run(capsys, *argv)
    _, js, _ = run(capsys, *argv, "--format", "json")
    by_text = {line.split()[0]: line.split()[1] for line in text.strip().splitlines()[:-1]}
    by_json = {r["name"]: r["status"] for r in json.loads(js)["results"]}
    assert by_text == by_json


def test_default_order_is_per_check(capsys):
    _, out, _ = run(capsys, "verify", "--check", "septic.klein.quartic", "--format", "json")
    data = json.loads(out)
    assert data["order"] is None
    assert data["results"][0]["order_verified"] == "10"


def test_fractional_order(capsys):
    code, out, _ = run(capsys, "verify", "--check", "septic.klein.quartic", "--order", "7/2", "--format", "json")
    assert code == 0 and json.loads(out)["results"][0]["order_verified"] == "7/2"


def test_alpha_flag_adds_checks(capsys):
    code, out, _ = run(capsys, "verify", "--alpha", "4/9", "--order", "10", "--format", "json")
    names = [r["name"] for r in json.loads(out)["results"]]
    assert code == 0 and len(names) == 3 and all("4_9" in n for n in names)


def _fake(monkeypatch, residual):
    check = IdentityCheck("septic.klein.fake", lambda S, o: residual(o), 5, "test anchor")
    monkeypatch.setitem(identities.REGISTRY, check.name, check)


def test_failing_check_exit_1_with_witness(capsys, monkeypatch):
    _fake(monkeypatch, lambda o: QSeries.from_coeffs({3: 2}, prec=10))
    code, out, _ = run(capsys, "verify", "--check", "septic.klein.fake", "--format", "json")
    assert code == 1
    r = json.loads(out)["results"][0]
    assert r["status"] == "fail" and r["first_failure"] == {"exponent": "3", "coefficient": "2"}


def test_precision_error_exit_3(capsys, monkeypatch):
    _fake(monkeypatch, lambda o: QSeries.from_coeffs([0], prec=2))
    code, out, _ = run(capsys, "verify", "--check", "septic.klein.fake")
    assert code == 3 and "precision-error" in out


def test_failure_dominates_precision_error(capsys, monkeypatch):
    _fake(monkeypatch, lambda o: QSeries.from_coeffs([0], prec=2))
    bad = IdentityCheck("septic.klein.fake2", lambda S, o: QSeries.from_coeffs({1: 1}, prec=9), 5, "x")
    monkeypatch.setitem(identities.REGISTRY, bad.name, bad)
    code, out, _ = run(capsys, "verify", "--check", "septic.klein", "--format", "json")
    assert code == 1
    assert json.loads(out)["summary"] == {"pass": 5, "fail": 1, "precision_error": 1}


def test_internal_error_exit_3(capsys, monkeypatch):
    def boom(o):
        raise RuntimeError("boom")
    _fake(monkeypatch, boom)
    code, _, err = run(capsys, "verify", "--check", "septic.klein.fake")
    assert code == 3 and "boom" in err


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--check", "quintic", "--order", "5", "--format", "json",
                       "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["summary"]["pass"] == 3


def _csv_rows(text):
    rows = list(csv.DictReader(io.StringIO(text)))
    return [(int(r["exponent_num"]), int(r["exponent_den"]), r["coefficient"]) for r in rows], rows


def test_dump_x(capsys):
    code, out, _ = run(capsys, "dump", "--series", "x", "--order", "4")
    assert code == 0
    assert out.splitlines()[0] == "exponent_num,exponent_den,coefficient,float_approx"
    rows, _ = _csv_rows(out)
    assert rows == [(1, 1, "1"), (2, 1, "0"), (3, 1, "-1")]


def test_dump_e2_and_j7(capsys):
    rows, raw = _csv_rows(run(capsys, "dump", "--series", "E2", "--order", "3")[1])
    assert rows == [(0, 1, "1"), (1, 1, "-24"), (2, 1, "-72")]
    assert float(raw[1]["float_approx"]) == -24
    rows, _ = _csv_rows(run(capsys, "dump", "--series", "j7", "--order", "0")[1])
    assert rows[0] == (-1, 1, "1")


def test_dump_fractional_and_cyclotomic(capsys):
    rows, _ = _csv_rows(run(capsys, "dump", "--series", "septic.c", "--order", "1/2")[1])
    assert rows[0] == (1, 56, "1")
    code, out, _ = run(capsys, "dump", "--series", "e_1/7", "--order", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["rows"][0]["coefficient"] == "1"
    c1 = data["rows"][1]["coefficient"]
    assert c1["level"] == 28 and len(c1["coords"]) == 12
    _, out, _ = run(capsys, "dump", "--series", "e_1/7", "--order", "2")
    rows, _ = _csv_rows(out)
    assert json.loads(rows[1][2]) == c1


def test_dump_unknown_series(capsys):
    code, _, err = run(capsys, "dump", "--series", "nosuch", "--order", "3")
    assert code == 2 and "nosuch" in err


def test_constants_text_and_json(capsys):
    code, out, _ = run(capsys, "constants")
    assert code == 0
    assert "x-quadratic" in out and "Phi-sum = 5" in out
    code, out, _ = run(capsys, "constants", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["efund"]) == 9 and all(r["match"] for r in data["efund"])
    assert data["quadratics"]["x"]["phi_sum"] == "5"
    assert data["quadratics"]["x"]["a"] == ["0", "37", "25", "61", "61", "25", "37"]
    row = data["efund"][0]
    assert row["closed_form"] == row["transform"] and row["closed_form"]["level"] == 28


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == len(identities.REGISTRY)
    system = [line for line in lines if line.startswith("septic.system")]
    assert system and all("Theorem d_sept" in line for line in system if "deq" in line)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "septic_qseries", "verify", "--check", "septic.klein.xyz",
                           "--order", "20"], capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stderr
    assert "pass" in proc.stdout
