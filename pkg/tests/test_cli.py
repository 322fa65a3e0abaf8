import csv
import io
import json

import pytest

from hypquad.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_gauss_identity(self, capsys):
        code, out, _ = run(capsys, "eval", "--case", "gauss", "--a", "0.5", "--b", "1", "--x", "0.2")
        assert code == 0
        lines = dict(l.split(" = ") for l in out.strip().splitlines())
        assert abs(float(lines["diff"])) < 1e-10

    def test_trivial_point(self, capsys):
        code, out, _ = run(capsys, "eval", "--case", "plus1", "--a", "1", "--b", "0.5", "--x", "0")
        assert code == 0
        lines = dict(l.split(" = ") for l in out.strip().splitlines())
        assert float(lines["lhs"]) == 1
        assert float(lines["rhs"]) == 1

    def test_domain_violation_exit_2(self, capsys):
        code, _, err = run(capsys, "eval", "--case", "minus1", "--a", "1", "--b", "0.25", "--x", "-0.5")
        assert code == 2
        assert "4x/(1+x)^2" in err

    def test_bad_case_exit_2(self, capsys):
        code, _, err = run(capsys, "eval", "--case", "nope", "--a", "1", "--b", "1", "--x", "0.1")
        assert code == 2


class TestCheck:
    def test_csv_report(self, capsys, tmp_path):
        out_file = tmp_path / "report.csv"
        code, _, _ = run(
            capsys, "check", "--case", "plus1", "--samples", "50", "--tol", "1e-10",
            "--seed", "42", "--format", "csv", "--out", str(out_file),
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out_file.read_text())))
        assert rows[0] == ["a", "b", "x", "lhs", "rhs", "abs_err", "rel_err", "pass"]
        assert len(rows) == 51
        assert all(row[-1] == "True" for row in rows[1:])

    def test_json_report_schema(self, capsys):
        code, out, _ = run(
            capsys, "check", "--case", "minus1", "--samples", "20",
            "--seed", "7", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["case"] == "minus1"
        assert payload["seed"] == 7
        assert payload["n_pass"] == 20
        assert payload["n_fail"] == 0
        assert len(payload["samples"]) == 20
        assert set(payload["samples"][0]) == {
            "a", "b", "x", "lhs", "rhs", "abs_err", "rel_err", "pass"
        }

    def test_empty_grid_rejected(self, capsys):
        code, _, _ = run(capsys, "check", "--case", "gauss", "--samples", "0")
        assert code == 2

    def test_determinism_byte_identical(self, capsys, tmp_path):
        f1, f2 = tmp_path / "r1.json", tmp_path / "r2.json"
        for f in (f1, f2):
            code, _, _ = run(
                capsys, "check", "--case", "gauss", "--samples", "30",
                "--seed", "5", "--format", "json", "--out", str(f),
            )
            assert code == 0
        assert f1.read_bytes() == f2.read_bytes()

    def test_env_seed_override(self, capsys, monkeypatch, tmp_path):
        f1, f2 = tmp_path / "a.csv", tmp_path / "b.csv"
        monkeypatch.setenv("HYPQ_SEED", "99")
        run(capsys, "check", "--case", "gauss", "--samples", "10",
            "--seed", "5", "--format", "csv", "--out", str(f1))
        monkeypatch.delenv("HYPQ_SEED")
        run(capsys, "check", "--case", "gauss", "--samples", "10",
            "--seed", "99", "--format", "csv", "--out", str(f2))
        assert f1.read_bytes() == f2.read_bytes()


class TestCoeffs:
    def test_analytic_table_all_equal(self, capsys):
        code, out, _ = run(
            capsys, "coeffs", "--case", "plus1", "--a", "1", "--b", "1/2",
            "--lambda", "0", "--N", "20",
        )
        assert code == 0
        assert "False" not in out

    def test_resonant_exit_2(self, capsys):
        code, _, err = run(
            capsys, "coeffs", "--case", "minus1", "--a", "1", "--b", "1",
            "--lambda", "0", "--N", "20",
        )
        assert code == 2
        assert "resonant" in err

    def test_gauss_odd_rows_zero(self, capsys):
        code, out, _ = run(
            capsys, "coeffs", "--case", "gauss", "--a", "1/3", "--b", "1/5",
            "--lambda", "0", "--N", "20",
        )
        assert code == 0
        rows = out.strip().splitlines()[1:]
        for row in rows:
            fields = row.split()
            if int(fields[0]) % 2 == 1:
                assert fields[1] == "0" and fields[2] == "0"

    def test_singular_branch(self, capsys):
        # minus1 at b=5/4 has second exponent 2-2b = -1/2
        code, out, _ = run(
            capsys, "coeffs", "--case", "minus1", "--a", "1", "--b", "5/4",
            "--lambda=-1/2", "--N", "12",
        )
        assert code == 0
        assert "False" not in out

    def test_non_root_lambda_exit_2(self, capsys):
        code, _, err = run(
            capsys, "coeffs", "--case", "plus1", "--a", "1", "--b", "1/3",
            "--lambda", "1/7", "--N", "8",
        )
        assert code == 2
        assert "indicial" in err


class TestResidualAndFit:
    def test_residual_small(self, capsys):
        code, out, _ = run(
            capsys, "residual", "--case", "plus1", "--a", "2/3", "--b", "2/5",
            "--lambda", "0", "--x", "0.3", "--N", "60",
        )
        assert code == 0
        lines = dict(l.split(" = ") for l in out.strip().splitlines())
        assert abs(float(lines["relative"])) < 1e-10

    def test_fit_reports_unity(self, capsys):
        code, out, _ = run(
            capsys, "fit", "--case", "gauss", "--a", "0.5", "--b", "0.25",
            "--xs", "0.1,0.2,0.3,0.4",
        )
        assert code == 0
        lines = dict(l.split(" = ") for l in out.strip().splitlines())
        assert abs(float(lines["A"]) - 1) < 1e-8
        assert abs(float(lines["B"])) < 1e-8
