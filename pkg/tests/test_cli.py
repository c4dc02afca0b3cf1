"""Command-line behavior: exit codes, CSV schemas, determinism."""

import csv
import math
from pathlib import Path

import pytest

from lagsob.cli import RunConfig, main, run_validate


def read_csv(path: Path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


class TestSolveCommand:
    def test_builtin_exp_decay(self, tmp_path):
        code = main(
            ["solve", "--problem", "exp-decay", "--nmax", "8", "--count", "21",
             "--out-dir", str(tmp_path)]
        )
        assert code == 0
        header, rows = read_csv(tmp_path / "convergence.csv")
        assert header == ["n", "eps_n", "log10_eps_n"]
        assert len(rows) == 9
        eps = [float(r[1]) for r in rows]
        assert all(eps[i + 1] <= eps[i] for i in range(8))
        assert float(rows[0][2]) == pytest.approx(math.log10(eps[0]))

        header, rows = read_csv(tmp_path / "coeffs.csv")
        assert header == ["n", "a_n", "g_n", "f_n", "s_n", "uhat_n", "quad_tol_achieved"]
        assert float(rows[0][1]) == pytest.approx(1.0 / 3.0, abs=1e-15)
        assert float(rows[0][5]) == pytest.approx(0.16871491427704446, rel=1e-9)

        header, rows = read_csv(tmp_path / "solution.csv")
        assert header == ["x", "approx_8", "u_exact", "abs_err"]
        assert len(rows) == 21
        assert float(rows[0][1]) == 0.0  # boundary value at x = 0
        x, approx, exact, err = (float(v) for v in rows[10])
        assert err == pytest.approx(abs(approx - exact), rel=1e-12, abs=1e-17)

    def test_convergence_regression_fixture(self, tmp_path):
        # frozen from an exact-rational-arithmetic computation of the same
        # quantities; the quadrature route must reproduce every row to 1e-6
        fixture = [
            0.3948029165507343,
            0.24605782346383867,
            0.097113086672043922,
            0.026345005767912776,
            0.012355614651909088,
            0.01233578720310631,
            0.0092840265391547373,
            0.0045295413435639878,
            0.0014187759927820492,
            0.00029288546345051608,
            0.00010685937869876385,
            0.00010642644653931773,
            7.7855340526102791e-05,
            3.6297727648072948e-05,
            1.0829465823444722e-05,
            2.0688380251809883e-06,
            6.5290160627076629e-07,
            6.4641690030014355e-07,
            4.7296216751575322e-07,
            2.1848657153225258e-07,
            6.4469178903071459e-08,
        ]
        assert main(["solve", "--problem", "exp-decay", "--nmax", "20",
                     "--out-dir", str(tmp_path)]) == 0
        _, rows = read_csv(tmp_path / "convergence.csv")
        assert len(rows) == 21
        for row, expected in zip(rows, fixture):
            assert float(row[1]) == pytest.approx(expected, rel=1e-6)

    def test_byte_identical_reruns(self, tmp_path):
        d1, d2 = tmp_path / "a", tmp_path / "b"
        for d in (d1, d2):
            assert main(["solve", "--problem", "exp-decay", "--nmax", "6",
                         "--out-dir", str(d)]) == 0
        for name in ("solution.csv", "convergence.csv", "coeffs.csv"):
            assert (d1 / name).read_bytes() == (d2 / name).read_bytes()

    def test_zero_expression(self, tmp_path):
        code = main(["solve", "--f-expr", "0", "--nmax", "5", "--out-dir", str(tmp_path)])
        assert code == 0
        _, rows = read_csv(tmp_path / "coeffs.csv")
        assert all(float(r[5]) == 0.0 for r in rows)
        assert not (tmp_path / "convergence.csv").exists()

    def test_expression_with_exact_solution(self, tmp_path):
        code = main(
            ["solve", "--f-expr", "exp(-x)*(3*cos(x) - 2*(-1 + x)*sin(x))",
             "--u-expr", "x*cos(x)*exp(-x)",
             "--du-expr", "exp(-x)*(cos(x) - x*sin(x) - x*cos(x))",
             "--nmax", "6", "--out-dir", str(tmp_path)]
        )
        assert code == 0
        assert (tmp_path / "convergence.csv").exists()

    def test_rational_decay_reports_quadrature_cap(self, tmp_path):
        code = main(["solve", "--problem", "rational-decay", "--nmax", "20",
                     "--out-dir", str(tmp_path)])
        assert code == 3
        # files are still written, errors still monotone
        header, rows = read_csv(tmp_path / "convergence.csv")
        eps = [float(r[1]) for r in rows]
        assert len(eps) == 21
        assert all(eps[i + 1] <= eps[i] for i in range(20))
        _, crows = read_csv(tmp_path / "coeffs.csv")
        assert any(float(r[6]) > 1e-12 for r in crows)

    def test_config_errors(self, tmp_path):
        out = ["--out-dir", str(tmp_path)]
        assert main(["solve"] + out) == 2
        assert main(["solve", "--problem", "exp-decay", "--f-expr", "0"] + out) == 2
        assert main(["solve", "--f-expr", "0", "--u-expr", "0"] + out) == 2
        assert main(["solve", "--f-expr", "2*"] + out) == 2
        assert main(["solve", "--problem", "exp-decay", "--lambda", "2"] + out) == 2
        assert main(["solve", "--f-expr", "0", "--lambda", "-1"] + out) == 2


class TestCoeffsCommand:
    def test_table_values(self, tmp_path):
        assert main(["coeffs", "--nmax", "2", "--out-dir", str(tmp_path)]) == 0
        header, rows = read_csv(tmp_path / "an_table.csv")
        assert header == ["n", "a_rec", "a_ratio", "abs_diff", "a_asymptotic"]
        a_rec = [float(r[1]) for r in rows]
        assert a_rec == pytest.approx([1 / 3, 9 / 23, 23 / 53], abs=1e-15)
        assert all(float(r[3]) <= 1e-12 for r in rows)
        assert rows[0][4] == "nan"

    def test_lambda_flows_through(self, tmp_path):
        assert main(["coeffs", "--lambda", "2", "--nmax", "1", "--out-dir", str(tmp_path)]) == 0
        _, rows = read_csv(tmp_path / "an_table.csv")
        assert float(rows[0][1]) == pytest.approx(1.0 / 5.0, abs=1e-15)


class TestBasisCommand:
    def test_printed_coefficients(self, tmp_path):
        assert main(["basis", "--nmax", "4", "--count", "5", "--out-dir", str(tmp_path)]) == 0
        header, rows = read_csv(tmp_path / "basis_coeffs.csv")
        assert header == ["n", "c0", "c1", "c2", "c3", "c4"]
        assert float(rows[1][1]) == pytest.approx(5.0 / 3.0, abs=1e-14)
        assert float(rows[1][2]) == pytest.approx(-1.0, abs=1e-14)
        assert rows[1][3] == ""
        assert float(rows[4][1]) == pytest.approx(2045.0 / 567.0, abs=1e-13)
        assert float(rows[4][5]) == pytest.approx(1.0 / 24.0, abs=1e-15)

        header, rows = read_csv(tmp_path / "basis_samples.csv")
        assert header == ["x", "S0", "S1", "S2", "S3", "S4"]
        assert len(rows) == 5

    def test_rejects_large_nmax(self, tmp_path, capsys):
        assert main(["basis", "--nmax", "31", "--out-dir", str(tmp_path)]) == 2
        assert "coefficient mode" in capsys.readouterr().err


class TestValidateCommand:
    def test_default_run_passes(self, capsys):
        assert main(["validate"]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out and "FAIL" not in out

    def test_other_lambda_passes(self):
        assert main(["validate", "--lambda", "2"]) == 0

    def test_fault_injection_trips_gram_suite(self, capsys):
        config = RunConfig(command="validate", lam=1.0)
        assert run_validate(config, perturb_a0=1e-6) == 1
        out = capsys.readouterr()
        assert "sobolev-gram" in out.err


class TestEnvironment:
    def test_out_dir_env_override(self, tmp_path, monkeypatch):
        env_dir = tmp_path / "env_target"
        flag_dir = tmp_path / "flag_target"
        monkeypatch.setenv("LAGSOB_OUT_DIR", str(env_dir))
        assert main(["coeffs", "--nmax", "1", "--out-dir", str(flag_dir)]) == 0
        assert (env_dir / "an_table.csv").exists()
        assert not flag_dir.exists()
