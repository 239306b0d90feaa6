import csv
import io
import json
from pathlib import Path

import pytest

from degentrig.cli import EVAL_COLUMNS, SERIES_COLUMNS, main
from degentrig.identities import CSV_COLUMNS

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def _no_env_seed(monkeypatch):
    monkeypatch.delenv("DEGENTRIG_SEED", raising=False)


class TestEval:
    def test_cos_half_turn(self, capsys):
        code, out, _ = run(capsys, "eval", "--fn", "cos", "--lambda", "1", "--a", "1.718281828459045", "--x", "3.141592653589793")
        assert code == 0
        rec = json.loads(out)
        assert list(rec) == list(EVAL_COLUMNS)
        assert rec["value"] == pytest.approx(-1.0, abs=1e-15)

    def test_exp(self, capsys):
        code, out, _ = run(capsys, "eval", "--fn", "exp", "--lambda", "1", "--a", "3", "--x", "2")
        assert code == 0 and json.loads(out)["value"] == 16.0

    def test_cot_pole(self, capsys):
        code, _, err = run(capsys, "eval", "--fn", "cot", "--lambda", "1", "--a", "1", "--x", "0")
        assert code == 2 and "zero" in err

    def test_invalid_context(self, capsys):
        code, _, _ = run(capsys, "eval", "--fn", "sin", "--lambda", "0", "--a", "1", "--x", "1")
        assert code == 2

    @pytest.mark.parametrize("fn", ["cos", "sin", "tan", "cot", "cosh", "sinh", "tanh", "coth", "exp"])
    def test_all_functions(self, capsys, fn):
        code, out, _ = run(capsys, "eval", "--fn", fn, "--lambda", "0.5", "--a", "1", "--x", "0.4", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == list(EVAL_COLUMNS) and rows[1][0] == fn

    @pytest.mark.parametrize(
        "argv",
        [
            ["eval", "--fn", "sec", "--lambda", "1", "--a", "1", "--x", "1"],
            ["eval", "--fn", "cos", "--lambda", "1", "--a", "1"],
            ["eval", "--fn", "cos", "--lambda", "one", "--a", "1", "--x", "1"],
            ["frobnicate"],
            [],
            ["verify", "--lambda", "0.5"],
            ["verify", "--max-m", "0"],
            ["series-verify", "--order", "-1"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, _, _ = run(capsys, *argv)
        assert code == 64


class TestVerify:
    def test_single_context_full(self, capsys):
        code, out, err = run(capsys, "verify", "--lambda", "0.5", "--a", "1", "--max-m", "8", "--max-n", "16", "--seed", "7")
        assert code == 0
        recs = [json.loads(line) for line in out.splitlines()]
        assert len(recs) == 152 and all(r["pass"] for r in recs)
        assert "152 passed, 0 failed" in err

    def test_branch_violation(self, capsys):
        code, _, _ = run(capsys, "verify", "--lambda", "0.5", "--a", "-3")
        assert code == 2

    def test_csv_matches_json(self, capsys):
        argv = ["verify", "--lambda", "-0.5", "--a", "1.5", "--max-m", "3", "--max-n", "3", "--seed", "5"]
        _, js, _ = run(capsys, *argv)
        _, cs, _ = run(capsys, *argv, "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(cs)))
        recs = [json.loads(line) for line in js.splitlines()]
        assert list(rows[0]) == list(CSV_COLUMNS)
        for row, rec in zip(rows, recs, strict=True):
            assert float(row["max_rel_residual"]) == rec["max_rel_residual"]
            assert float(row["max_abs_residual"]) == rec["max_abs_residual"]
            assert int(row["n_samples"]) == rec["n_samples"]

    def test_failure_exit_code(self, capsys):
        code, _, err = run(capsys, "verify", "--lambda", "0.5", "--a", "1", "--max-m", "1", "--max-n", "1", "--tolerance", "1e-20")
        assert code == 1 and "failed" in err

    def test_env_seed_overrides(self, capsys, monkeypatch):
        base = ["verify", "--lambda", "0.5", "--a", "1", "--max-m", "1", "--max-n", "1"]
        _, seeded, _ = run(capsys, *base, "--seed", "3")
        monkeypatch.setenv("DEGENTRIG_SEED", "3")
        _, env, _ = run(capsys, *base, "--seed", "99")
        assert env == seeded

    def test_output_file_deterministic(self, capsys, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for p in paths:
            assert main(["verify", "--max-m", "2", "--max-n", "2", "--seed", "4", "--format", "csv", "--out", str(p)]) == 0
        capsys.readouterr()
        assert paths[0].read_bytes() == paths[1].read_bytes()


class TestSweep:
    def test_converges(self, capsys):
        code, out, _ = run(capsys, "sweep", "--x", "1", "--a", "1")
        lines = [json.loads(line) for line in out.splitlines()]
        assert code == 0
        assert len(lines) == 14
        assert 0.85 <= lines[-1]["fitted_slope"] <= 1.15

    def test_degenerate(self, capsys):
        code, out, err = run(capsys, "sweep", "--x", "0", "--a", "2")
        assert code == 0 and "degenerate" in err
        rows = [json.loads(line) for line in out.splitlines()]
        assert all(r["error"] == 0.0 for r in rows[:-1])
        assert rows[-1]["fitted_slope"] is None

    def test_negative_a(self, capsys):
        code, out, _ = run(capsys, "sweep", "--x", "1", "--a", "-0.5", "--format", "csv")
        assert code == 0
        assert len(out.splitlines()) == 14


class TestSeriesVerify:
    def test_order_zero(self, capsys):
        code, out, _ = run(capsys, "series-verify", "--order", "0")
        assert code == 0
        assert all(json.loads(line)["pass"] for line in out.splitlines())

    def test_csv_columns(self, capsys):
        code, out, _ = run(capsys, "series-verify", "--order", "2", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == ",".join(SERIES_COLUMNS)


@pytest.mark.parametrize(
    "golden, argv",
    [
        ("eval_cos.jsonl", ["eval", "--fn", "cos", "--lambda", "1", "--a", "1.718281828459045", "--x", "3.141592653589793"]),
        ("eval_exp.csv", ["eval", "--fn", "exp", "--lambda", "1", "--a", "3", "--x", "2", "--format", "csv"]),
        ("verify_small.csv", ["verify", "--lambda", "0.5", "--a", "1", "--max-m", "2", "--max-n", "2", "--points", "32", "--seed", "7", "--format", "csv"]),
        ("verify_small.jsonl", ["verify", "--lambda", "0.5", "--a", "1", "--max-m", "2", "--max-n", "2", "--points", "32", "--seed", "7"]),
        ("sweep.csv", ["sweep", "--x", "1", "--a", "1", "--format", "csv"]),
        ("series_order4.csv", ["series-verify", "--order", "4", "--format", "csv"]),
    ],
)
def test_golden(capsys, golden, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()
