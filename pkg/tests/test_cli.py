import csv
import io
import json

import pytest

from dirichlet_bohr.cli import run

RECORD_KEYS = {"command", "parameters", "value", "error_bound", "citations", "provenance"}


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_abscissa_bohr_json():
    code, out, _ = call("abscissa", "--paper", "bohr", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert all(set(r) == RECORD_KEYS for r in records)
    main = records[0]
    assert main["provenance"] == "computed"
    assert abs(main["value"]["root"] - 1.7267) <= 2e-3
    lo, hi = main["value"]["bracket"]
    assert lo < main["value"]["root"] < hi
    res = main["value"]["residual"]
    assert abs(res["value"]) <= res["error"]
    cited = {r["value"] for r in records if r["provenance"] == "cited"}
    assert {1.8154, 1.584962501} <= cited
    assert all(r["provenance"] == "cited" for r in records if r["value"] in (1.8154, 1.7287))


def test_abscissa_mixed_text():
    code, out, _ = call("abscissa", "--paper", "mixed", "--precision", "6")
    assert code == 0
    assert "root" in out and "1.20621" in out and "1.7287" in out


def test_abscissa_target_and_tol():
    code, out, _ = call("abscissa", "--target", "0.5", "--tol", "1e-4", "--format", "json")
    assert code == 0
    rec = json.loads(out)[0]
    assert rec["parameters"] == {"target": 0.5, "tol": 0.0001}
    assert rec["value"]["bracket"][1] - rec["value"]["bracket"][0] <= 1e-4


def test_rogosinski_radius():
    assert call("rogosinski-radius", "--l", "1")[1].split(":")[1].split()[0] == "0.5"
    code, out, _ = call("rogosinski-radius", "--l", "2", "--alternate-r2", "--format", "json")
    assert json.loads(out)[0]["value"] == pytest.approx(0.6123724357)


def test_lattice_json():
    code, out, _ = call("lattice", "--k", "4", "--format", "json")
    value = json.loads(out)[0]["value"]
    assert sorted(map(tuple, value["points"])) == [(0, 0), (0, 1), (1, 0), (2, 0)]
    assert value["verified"] is True


def test_bohr_sum_sweep_csv():
    code, out, _ = call("bohr-sum", "--sweep", "1:2:0.5")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["sigma", "value", "error"]
    assert [float(r[0]) for r in rows[1:]] == [1.0, 1.5, 2.0]
    values = [float(r[1]) for r in rows[1:]]
    assert values == sorted(values, reverse=True)


def test_kernel_commands_csv():
    code, out, _ = call("almost-prime-zeta", "--k", "2", "--s", "4", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert float(rows[0]["value"]) == pytest.approx(0.0049947, abs=1e-7)
    assert rows[0]["provenance"] == "computed"
    code, out, _ = call("prime-zeta", "--s", "2", "--format", "json")
    assert json.loads(out)[0]["value"] == pytest.approx(0.45224742)
    code, out, _ = call("bohr-sum", "--sigma", "1.7267", "--format", "json")
    assert json.loads(out)[0]["value"] == pytest.approx(0.5, abs=1e-3)


def test_lift_command(tmp_path):
    f = tmp_path / "p.txt"
    f.write_text("# 1 + 2^-s + 6^-s\n1 1 0\n2 1 0\n6 1 0\n")
    code, out, _ = call("lift", "--input", str(f), "--format", "json")
    assert code == 0
    value = json.loads(out)[0]["value"]
    assert value["prime_basis"] == [2, 3, 5]
    assert [t["exponents"] for t in value["terms"]] == [[0, 0, 0], [1, 0, 0], [1, 1, 0]]


def test_rogosinski_bound_command():
    code, out, _ = call("rogosinski-bound", "--k", "2", "--format", "json")
    assert json.loads(out)[0]["value"] == 1.0


def test_oracle_command(monkeypatch):
    monkeypatch.delenv("BOHR_FIXTURE_DIR", raising=False)
    code, out, _ = call("oracle", "direct-sum", "--k", "1", "--s", "2", "--N", "10", "--prime-limit", "100", "--format", "json")
    rec = json.loads(out)[0]
    assert rec["value"] == pytest.approx(1 / 4 + 1 / 9 + 1 / 25 + 1 / 49)
    assert rec["error_bound"] >= 0.1


def test_exit_codes(tmp_path):
    assert call("bogus")[0] == 1
    assert call("rogosinski-radius")[0] == 1
    assert call("bohr-sum", "--sweep", "2:1:0.1")[0] == 1
    code, _, err = call("prime-zeta", "--s", "1")
    assert code == 2 and "s > 1" in err
    code, _, err = call("bohr-sum", "--sigma", "0.6")
    assert code == 2 and "P(2*sigma) < 1" in err
    assert call("rogosinski-radius", "--l", "0")[0] == 2
    assert call("oracle", "direct-sum", "--k", "1", "--s", "2", "--N", "1000", "--prime-limit", "100")[0] == 2
    assert call("lift", "--input", str(tmp_path / "missing.txt"))[0] == 1


def test_verify_is_deterministic_and_reports_failures():
    first = call("verify")
    second = call("verify")
    assert first == second
    code, out, _ = first
    lines = out.splitlines()
    assert len(lines) == 10
    failing = [l for l in lines if l.startswith("[FAIL]")]
    assert code == (3 if failing else 0)
    quiet = call("verify", "--quiet")
    assert quiet[1] == lines[-1] + "\n"
