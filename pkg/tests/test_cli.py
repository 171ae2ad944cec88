"""End-to-end CLI checks: formats, exit codes, round-trips."""

import csv
import io
import json
import math
import subprocess
import sys

from logtan.core import ZetaExpr, parse_zeta_expr


def run_cli(*args, env=None):
    return subprocess.run(
        [sys.executable, "-m", "logtan.cli", *args],
        capture_output=True,
        text=True,
        env=env,
    )


class TestExactCommand:
    def test_linear_moment_text(self):
        out = run_cli("exact", "0,1")
        assert out.returncode == 0
        assert "7/8 * zeta(3)" in out.stdout
        assert "1.05179979026464" in out.stdout

    def test_quadratic_json(self):
        out = run_cli("exact", "0,0,1", "--format", "json")
        assert out.returncode == 0
        payload = json.loads(out.stdout)
        assert set(payload) == {"command", "inputs", "exact", "numeric", "oracle",
                                "delta", "checks"}
        assert payload["exact"] == "7/16 * pi * zeta(3)"
        assert payload["delta"] <= 1e-9
        assert parse_zeta_expr(payload["exact"])  # round-trips

    def test_constant_renders_zero(self):
        out = run_cli("exact", "5")
        assert out.returncode == 0
        assert "exact: 0" in out.stdout

    def test_scaled_variable(self):
        # coefficients read in u = 2x/pi: L(2x/pi) = (2/pi)(7/8) zeta(3)
        out = run_cli("exact", "0,1", "--var", "scaled", "--format", "json")
        assert out.returncode == 0
        payload = json.loads(out.stdout)
        assert payload["exact"] == "7/4 * pi^-1 * zeta(3)"

    def test_round_trip_parse(self):
        from fractions import Fraction

        from logtan.closed_forms import exact_L
        from logtan.core import Polynomial

        out = run_cli("exact", "0,-2,0,3", "--format", "json")
        payload = json.loads(out.stdout)
        parsed = parse_zeta_expr(payload["exact"])
        expected = exact_L(Polynomial.from_rationals([0, Fraction(-2), 0, Fraction(3)]))
        assert isinstance(parsed, ZetaExpr)
        assert parsed == expected

    def test_parse_error_exit_code(self):
        out = run_cli("exact", "0,abc,1")
        assert out.returncode == 2
        assert "position 1" in out.stderr

    def test_empty_spec_rejected(self):
        out = run_cli("exact", "  ")
        assert out.returncode == 2

    def test_zero_denominator_rejected(self):
        out = run_cli("exact", "1/0")
        assert out.returncode == 2


class TestProjectCommand:
    def test_sqrt_five_terms(self):
        out = run_cli("project", "sqrt", "--terms", "5", "--format", "json")
        assert out.returncode == 0
        payload = json.loads(out.stdout)
        assert abs(payload["numeric"]["value"] - 0.688084888082269) <= 1e-9
        assert abs(payload["oracle"]["value"] - 0.689247) <= 5e-6
        assert abs(payload["delta"] - 1.16e-3) <= 1e-4
        assert len(payload["inputs"]["coefficients"]) == 6

    def test_monomial_exact(self):
        out = run_cli("project", "x", "--terms", "1", "--format", "json")
        payload = json.loads(out.stdout)
        assert payload["delta"] < 1e-10

    def test_even_legendre_zero(self):
        out = run_cli("project", "legendre2", "--terms", "4", "--format", "json")
        payload = json.loads(out.stdout)
        assert abs(payload["numeric"]["value"]) <= 1e-11

    def test_unknown_function(self):
        out = run_cli("project", "bogus", "--terms", "2")
        assert out.returncode == 2
        assert "catalog" in out.stderr

    def test_bad_terms(self):
        out = run_cli("project", "sqrt", "--terms", "0")
        assert out.returncode == 2


class TestQuadCommand:
    def test_plain_constant(self):
        out = run_cli("quad", "x0", "--plain", "--format", "json")
        payload = json.loads(out.stdout)
        assert abs(payload["numeric"]["value"] - math.pi / 2) <= 1e-10

    def test_parameterized_function(self):
        out = run_cli("quad", "cos:0.5", "--format", "json")
        payload = json.loads(out.stdout)
        assert abs(payload["numeric"]["value"] + math.log(2)) <= 1e-9

    def test_subinterval(self):
        out = run_cli("quad", "x0", "--b", str(math.pi / 4), "--format", "json")
        payload = json.loads(out.stdout)
        assert abs(payload["numeric"]["value"] + 0.915965594177219) <= 1e-9

    def test_tol_floor(self):
        out = run_cli("quad", "x", "--tol", "1e-14")
        assert out.returncode == 2


class TestConstantsCommand:
    def test_zeta(self):
        out = run_cli("constants", "zeta", "3", "--format", "json")
        payload = json.loads(out.stdout)
        assert abs(payload["numeric"]["value"] - 1.20205690315959) <= 1e-12

    def test_catalan(self):
        out = run_cli("constants", "catalan", "--format", "json")
        payload = json.loads(out.stdout)
        assert abs(payload["numeric"]["value"] - 0.915965594177219) <= 1e-12

    def test_digamma(self):
        out = run_cli("constants", "digamma", "0.5", "--format", "json")
        payload = json.loads(out.stdout)
        assert abs(payload["numeric"]["value"] + 1.96351002602142) <= 1e-12

    def test_missing_argument(self):
        out = run_cli("constants", "zeta")
        assert out.returncode == 2

    def test_bad_argument(self):
        out = run_cli("constants", "digamma", "-1")
        assert out.returncode == 2


class TestVerifyCommand:
    def test_exact_suite_passes(self):
        out = run_cli("verify", "exact")
        assert out.returncode == 0
        assert "L(x)=7/8 zeta(3)" in out.stdout
        assert "FAIL" not in out.stdout

    def test_constants_suite_passes(self):
        out = run_cli("verify", "constants")
        assert out.returncode == 0
        assert "psi(1/2) = -gamma - 2 log 2" in out.stdout

    def test_series_suite_passes(self):
        out = run_cli("verify", "series")
        assert out.returncode == 0
        assert "catalan_series N=10" in out.stdout

    def test_json_schema(self):
        out = run_cli("verify", "exact", "--format", "json")
        payload = json.loads(out.stdout)
        assert payload["command"] == "verify"
        assert all(row["pass"] for row in payload["checks"])

    def test_csv_header(self):
        out = run_cli("verify", "constants", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out.stdout)))
        assert rows[0] == ["command", "name", "exact", "numeric", "oracle",
                           "delta", "expected", "got", "tolerance", "status"]
        assert all(row[9] == "pass" for row in rows[1:])

    def test_failing_check_exits_one(self, monkeypatch, capsys):
        from logtan import cli
        from logtan.verify import CheckRow

        monkeypatch.setattr(
            cli, "run_suite",
            lambda suite, tol: [CheckRow("forced failure", "0", "1", 0.0, False)],
        )
        assert cli.main(["verify", "exact"]) == 1
        out = capsys.readouterr().out
        assert "FAIL" in out


class TestOutputFile:
    def test_out_writes_file(self, tmp_path):
        target = tmp_path / "report.json"
        out = run_cli("exact", "0,1", "--format", "json", "--out", str(target))
        assert out.returncode == 0
        assert out.stdout == ""
        payload = json.loads(target.read_text())
        assert payload["exact"] == "7/8 * zeta(3)"

    def test_csv_single_row(self):
        out = run_cli("exact", "0,1", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out.stdout)))
        assert len(rows) == 2
        assert rows[1][2] == "7/8 * zeta(3)"


class TestEnvironment:
    def test_max_levels_env_is_honored(self):
        import os

        env = dict(os.environ, LOGTAN_MAX_LEVELS="2")
        out = run_cli("quad", "sqrt", "--format", "json", env=env)
        payload = json.loads(out.stdout)
        assert payload["inputs"]["levels"] <= 2
