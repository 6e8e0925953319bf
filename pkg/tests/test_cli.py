import json
import subprocess
import sys


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "bcn_reduction", *args],
        capture_output=True,
        text=True,
    )


class TestExitCodes:
    def test_pass_is_zero(self, tmp_path):
        out = tmp_path / "r.json"
        res = run_cli(
            "verify", "reduction", "--case", "I", "--n", "1",
            "--gamma", "1", "--kl1", "1", "--kl2", "0", "--kr1", "0",
            "--samples", "20", "--tol", "1e-8", "--json", str(out),
        )
        assert res.returncode == 0
        report = json.loads(out.read_text())
        assert report["status"] == "pass"
        assert report["couplings"] == {"a": 1, "b": 1, "c": 0, "constant": "0"}

    def test_check_failure_is_one(self):
        # impossible tolerance forces a residual failure
        res = run_cli(
            "verify", "reduction", "--case", "I", "--n", "1",
            "--gamma", "1", "--kl1", "1", "--kl2", "0", "--kr1", "0",
            "--samples", "5", "--tol", "1e-16",
        )
        assert res.returncode == 1

    def test_usage_error_is_two(self):
        res = run_cli("verify", "reduction", "--case", "IV", "--n", "1")
        assert res.returncode == 2
        res = run_cli("verify", "reduction", "--case", "I")  # missing --n
        assert res.returncode == 2
        res = run_cli(
            "verify", "reduction", "--case", "I", "--n", "1"  # missing params
        )
        assert res.returncode == 2

    def test_enumerate_cap_is_two(self):
        res = run_cli(
            "enumerate", "--case", "I", "--n", "1",
            "--gamma-max", "3", "--k-bound", "3", "--cap", "100",
        )
        assert res.returncode == 2

    def test_inadmissible_couplings_is_one(self):
        res = run_cli(
            "couplings", "--case", "I", "--n", "1",
            "--gamma", "1", "--kl1", "1", "--kl2", "0", "--kr1", "0",
            "--kr2", "5",
        )
        assert res.returncode == 1
        assert "sum to zero" in res.stderr


class TestReports:
    def test_json_deterministic_apart_from_wall_clock(self, tmp_path):
        outs = []
        for name in ("a.json", "b.json"):
            path = tmp_path / name
            res = run_cli(
                "verify", "inertia", "--case", "II", "--n", "2",
                "--samples", "5", "--seed", "99", "--json", str(path),
            )
            assert res.returncode == 0
            data = json.loads(path.read_text())
            data.pop("wall_clock_s")
            outs.append(json.dumps(data, sort_keys=True))
        assert outs[0] == outs[1]

    def test_inertia_suite_passes(self, tmp_path):
        out = tmp_path / "i.json"
        res = run_cli(
            "verify", "inertia", "--case", "III", "--n", "2",
            "--samples", "20", "--json", str(out),
        )
        assert res.returncode == 0
        report = json.loads(out.read_text())
        diag = [c for c in report["checks"] if c["name"] == "inertia.diagonalization"]
        assert diag and diag[0]["max_abs_err"] <= 1e-10

    def test_fock_suite_dimension(self, tmp_path):
        out = tmp_path / "f.json"
        res = run_cli(
            "verify", "fock", "--modes", "2", "--level", "12", "--json", str(out)
        )
        assert res.returncode == 0
        report = json.loads(out.read_text())
        dim = [c for c in report["checks"] if c["name"] == "fock.dimension"]
        assert "dim 13" in dim[0]["detail"]

    def test_csv_written(self, tmp_path):
        out = tmp_path / "r.csv"
        res = run_cli(
            "verify", "basis", "--case", "I", "--n", "2", "--csv", str(out)
        )
        assert res.returncode == 0
        lines = out.read_text().strip().splitlines()
        assert len(lines) > 2 and "name" in lines[0]


class TestCouplingsCommand:
    def test_case3_worked(self, tmp_path):
        out = tmp_path / "c.json"
        res = run_cli(
            "couplings", "--case", "III", "--n", "1",
            "--gamma", "1", "--gamma-tilde", "0", "--gamma-hat", "2", "--k", "0",
            "--json", str(out),
        )
        assert res.returncode == 0
        report = json.loads(out.read_text())
        coup = report["couplings"]
        assert (coup["a"], coup["b"], coup["c"]) == (1, 2, 4)

    def test_case1_mu_output(self, tmp_path):
        out = tmp_path / "c.json"
        res = run_cli(
            "couplings", "--case", "I", "--n", "1",
            "--gamma", "1", "--kl1", "1", "--kl2", "0", "--kr1", "0",
            "--json", str(out),
        )
        assert res.returncode == 0
        report = json.loads(out.read_text())
        assert report["mu"] == {"pair": "2", "short": "1", "long": "1/2"}

    def test_case3_rational_constant(self, tmp_path):
        out = tmp_path / "c.json"
        res = run_cli(
            "couplings", "--case", "III", "--n", "1",
            "--gamma", "0", "--gamma-tilde", "0", "--gamma-hat", "0", "--k", "0",
            "--json", str(out),
        )
        report = json.loads(out.read_text())
        assert report["couplings"]["constant"] == "-9/2"


class TestEnumerateCommand:
    def test_case1_admissible_rows_have_zero_sum(self, tmp_path):
        out = tmp_path / "e.json"
        res = run_cli(
            "enumerate", "--case", "I", "--n", "1",
            "--gamma-max", "2", "--k-bound", "1", "--json", str(out),
        )
        assert res.returncode == 0
        report = json.loads(out.read_text())
        admissible = [r for r in report["rows"] if r["predicted_dim"] == 1]
        assert admissible
        for row in admissible:
            assert row["k_l1"] + row["k_l2"] + row["k_r1"] + row["k_r2"] == 0

    def test_case2_rows_satisfy_coupling_bound(self, tmp_path):
        out = tmp_path / "e.json"
        res = run_cli(
            "enumerate", "--case", "II", "--n", "1",
            "--gamma-max", "2", "--k-bound", "1", "--brute", "--json", str(out),
        )
        assert res.returncode == 0
        report = json.loads(out.read_text())
        admissible = [r for r in report["rows"] if r["predicted_dim"] == 1]
        assert admissible
        for row in admissible:
            assert row["b"] >= row["a"] + 1
            assert row["brute_dim"] == 1

    def test_case3_rows_satisfy_coupling_bounds(self, tmp_path):
        out = tmp_path / "e.json"
        res = run_cli(
            "enumerate", "--case", "III", "--n", "1",
            "--gamma-max", "1", "--k-bound", "1", "--json", str(out),
        )
        assert res.returncode == 0
        report = json.loads(out.read_text())
        admissible = [r for r in report["rows"] if r["predicted_dim"] == 1]
        assert admissible
        for row in admissible:
            assert row["b"] >= row["a"] + 1 and row["c"] >= row["a"] + 1


class TestVerifyAll:
    def test_runs_clean(self, tmp_path):
        out = tmp_path / "all.json"
        res = run_cli(
            "verify", "all", "--case", "II", "--n", "1",
            "--samples", "5", "--json", str(out),
        )
        assert res.returncode == 0
        report = json.loads(out.read_text())
        names = {c["name"] for c in report["checks"]}
        assert {"basis.gram_identity", "inertia.diagonalization",
                "density.measure_factor_fd", "fock.dimension"} <= names
        skipped = [c for c in report["checks"] if c["status"] == "skip"]
        assert skipped  # reduction skipped without parameters
