"""
CLI tests through typer's CliRunner (machine-readable output goes through --out)
"""
import csv
import json

import pytest
from typer.testing import CliRunner

from src.cli.main import app

runner = CliRunner()


@pytest.fixture(autouse=True)
def _isolated_config(config_dir):
    yield


def _read_csv(path):
    with open(path, encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f))


def test_triangle_text():
    result = runner.invoke(app, ["triangle", "--n-max", "5"])
    assert result.exit_code == 0, result.output
    lines = [line for line in result.output.splitlines() if ":" in line]
    assert lines[0] == "0: 1"
    assert lines[-1] == "5: 10 10 5 5 1 1"


def test_triangle_sums_and_csv(tmp_path):
    result = runner.invoke(app, ["triangle", "--n-max", "3", "--sums"])
    assert "3: 3 3 1 1  (sum 8)" in result.output

    out = tmp_path / "triangle.csv"
    result = runner.invoke(app, ["--format", "csv", "--out", str(out), "triangle", "--n-max", "2"])
    assert result.exit_code == 0, result.output
    rows = _read_csv(out)
    assert [(r["n"], r["k"], r["value"]) for r in rows] == [
        ("0", "0", "1"), ("1", "0", "1"), ("1", "1", "1"), ("2", "0", "2"), ("2", "1", "1"), ("2", "2", "1"),
    ]


def test_triangle_rejects_svg():
    assert runner.invoke(app, ["--format", "svg", "triangle"]).exit_code == 1


def test_bijection_table_and_csv(tmp_path):
    result = runner.invoke(app, ["bijection", "--n", "2"])
    assert result.exit_code == 0, result.output
    assert "{1,2}" in result.output

    out = tmp_path / "bijection.csv"
    result = runner.invoke(app, ["--format", "csv", "--out", str(out), "bijection", "--n", "3"])
    assert result.exit_code == 0, result.output
    rows = _read_csv(out)
    assert len(rows) == 8
    assert all(r["ok"] == "true" for r in rows)


def test_bijection_over_cap_fails():
    result = runner.invoke(app, ["bijection", "--n", "30"])
    assert result.exit_code == 1


def test_verify_suites(tmp_path):
    out = tmp_path / "verify.json"
    result = runner.invoke(app, ["--format", "json", "--out", str(out), "verify", "--suite", "recursions", "--n-max", "12"])
    assert result.exit_code == 0, result.output
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["meta"]["command"] == "verify"
    assert [r["suite"] for r in payload["data"]] == ["recursions"]
    assert payload["data"][0]["passed"] is True
    assert "duration_seconds" not in payload["data"][0]


def test_verify_all_csv(tmp_path):
    out = tmp_path / "verify.csv"
    result = runner.invoke(app, ["--format", "csv", "--out", str(out), "verify", "--n-max", "8"])
    assert result.exit_code == 0, result.output
    rows = _read_csv(out)
    assert [r["suite"] for r in rows] == ["recursions", "gf", "factor", "gcd", "roots", "algebra"]
    assert all(r["passed"] == "true" and r["failures"] == "0" for r in rows)


def test_verify_unknown_suite():
    assert runner.invoke(app, ["verify", "--suite", "nope"]).exit_code == 1


def test_roots_csv(tmp_path):
    out = tmp_path / "roots.csv"
    result = runner.invoke(app, ["--format", "csv", "--out", str(out), "roots", "--n", "3"])
    assert result.exit_code == 0, result.output
    rows = _read_csv(out)
    assert len(rows) == 3
    assert rows[-1]["class"] == "trivial"
    assert rows[-1]["re"] == "-1" and rows[-1]["im"] == "0"
    assert sorted(r["class"] for r in rows[:2]) == ["imaginary", "imaginary"]
    for r in rows[:2]:
        assert abs(float(r["norm"]) - 3 ** -0.5) < 1e-9


def test_roots_csv_is_deterministic(tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (first, second):
        assert runner.invoke(app, ["--out", str(out), "roots", "--n", "24"]).exit_code == 0
    assert first.read_bytes() == second.read_bytes()
    assert b"\r\n" not in first.read_bytes()


def test_roots_json_and_svg(tmp_path):
    out = tmp_path / "roots.json"
    result = runner.invoke(app, ["--format", "json", "--out", str(out), "roots", "--n", "4"])
    assert result.exit_code == 0, result.output
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["data"]["annulus"]["passed"] is True
    assert len(payload["data"]["roots"]) == 4

    svg = tmp_path / "roots.svg"
    result = runner.invoke(app, ["--format", "svg", "--out", str(svg), "roots", "--n", "9"])
    assert result.exit_code == 0, result.output
    assert svg.read_text(encoding="utf-8").lstrip().startswith("<?xml")


def test_roots_bad_degree():
    assert runner.invoke(app, ["roots", "--n", "0"]).exit_code == 1
    assert runner.invoke(app, ["roots", "--n", "600"]).exit_code == 1


def test_curve(tmp_path):
    out = tmp_path / "curve.csv"
    result = runner.invoke(app, ["--out", str(out), "curve", "--n", "2"])
    assert result.exit_code == 0, result.output
    assert "0.375" in result.output
    rows = _read_csv(out)
    assert {r["kind"] for r in rows} == {"boundary_n", "boundary_limit", "approximant", "root", "K", "min_margin"}
    summary = {r["kind"]: r["value"] for r in rows if r["value"]}
    assert float(summary["K"]) == pytest.approx(0.375)
    assert float(summary["min_margin"]) > 0


def test_curve_csv_carries_metrics(tmp_path):
    out = tmp_path / "curve.csv"
    result = runner.invoke(app, ["--out", str(out), "curve", "--n", "12", "--metrics"])
    assert result.exit_code == 0, result.output
    summary = {r["kind"]: r["value"] for r in _read_csv(out) if r["value"]}
    assert set(summary) == {"K", "min_margin", "hausdorff_to_curve", "max_match_to_zm", "fill_gap"}
    assert all(float(v) >= 0 for k, v in summary.items() if k != "min_margin")


def test_curve_metrics_json(tmp_path):
    out = tmp_path / "curve.json"
    result = runner.invoke(app, ["--format", "json", "--out", str(out), "curve", "--n", "12", "--metrics"])
    assert result.exit_code == 0, result.output
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["data"]["passed"] is True
    assert payload["data"]["metrics"]["n"] == 12


def test_curve_bad_degree():
    assert runner.invoke(app, ["curve", "--n", "1"]).exit_code == 1
    assert runner.invoke(app, ["curve", "--n", "2", "--metrics"]).exit_code == 1


def test_conjecture(tmp_path):
    out = tmp_path / "conjecture.json"
    result = runner.invoke(app, ["--format", "json", "--out", str(out), "conjecture", "--n-max", "10", "--primes", "3,5,7"])
    assert result.exit_code == 0, result.output
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert [row["n"] for row in payload["data"]] == [2, 4, 6, 8, 10]
    assert runner.invoke(app, ["conjecture", "--primes", "4"]).exit_code == 1


def test_config_show_and_set(config_dir):
    result = runner.invoke(app, ["config", "--show"])
    assert result.exit_code == 0, result.output
    assert "enumeration_cap" in result.output

    result = runner.invoke(app, ["config", "--set", "enumeration_cap=16"])
    assert result.exit_code == 0, result.output
    assert json.loads((config_dir / "config.json").read_text(encoding="utf-8"))["enumeration_cap"] == 16

    assert runner.invoke(app, ["config", "--set", "enumeration_cap=-3"]).exit_code == 1
    assert runner.invoke(app, ["config", "--set", "nonsense"]).exit_code == 1
