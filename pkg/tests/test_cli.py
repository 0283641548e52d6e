import json
import subprocess
import sys

import pytest

from cyclecover import cli
from cyclecover.core import deserialize


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestConstructAndVerify:
    def test_construct(self, capsys, tmp_path):
        path = tmp_path / "fam.json"
        code, doc = run_cli(
            capsys, "construct", "--n", "5", "--k", "3", "--out", str(path)
        )
        assert code == 0
        assert doc["rounds"] == 2
        fam = deserialize(path.read_text())
        assert fam.n == 5 and len(fam.rounds) == 2

    @pytest.mark.parametrize("mode", ["increasing", "weak", "all"])
    def test_verify_ok(self, capsys, tmp_path, mode):
        path = tmp_path / "fam.json"
        run_cli(capsys, "construct", "--n", "6", "--k", "3", "--out", str(path))
        code, doc = run_cli(
            capsys, "verify", "--family", str(path), "--k", "3", "--mode", mode
        )
        assert code == 0
        assert doc["status"] == "ok" and doc["mode"] == mode
        assert "elapsed" in doc

    def test_verify_witness_exit_code(self, capsys, tmp_path):
        path = tmp_path / "fam.json"
        # 9 vertices with the 2-round family built for n=5: must fail
        run_cli(capsys, "construct", "--n", "5", "--k", "3", "--out", str(path))
        fam = json.loads(path.read_text())
        fam["n"] = 9
        fam["rounds"] = [r + "0" * (36 - 10) for r in fam["rounds"]]
        path.write_text(json.dumps(fam))
        code, doc = run_cli(
            capsys, "verify", "--family", str(path), "--k", "3", "--mode", "increasing"
        )
        assert code == 1
        assert doc["status"] == "fail" and "witness" in doc

    def test_missing_file_is_usage_error(self, capsys, tmp_path):
        code, doc = run_cli(
            capsys,
            "verify",
            "--family",
            str(tmp_path / "nope.json"),
            "--k",
            "3",
            "--mode",
            "weak",
        )
        assert code == 2 and doc["status"] == "error"


class TestScalarCommands:
    def test_lowerbound(self, capsys):
        code, doc = run_cli(capsys, "lowerbound", "--n", "33", "--k", "3")
        assert code == 0 and doc["value"] == 5

    def test_search_exact_minimum(self, capsys):
        code, doc = run_cli(
            capsys, "search-exact", "--n", "3", "--k", "3", "--max-rounds", "2"
        )
        assert code == 0 and doc["status"] == "minimum" and doc["minimum"] == 1

    def test_search_exact_refuted(self, capsys):
        code, doc = run_cli(
            capsys, "search-exact", "--n", "4", "--k", "3", "--max-rounds", "1"
        )
        assert code == 1 and doc["status"] == "refuted"

    def test_search_exact_budget(self, capsys):
        code, doc = run_cli(
            capsys,
            "search-exact",
            "--n", "5", "--k", "3", "--max-rounds", "2",
            "--node-budget", "10",
        )
        assert code == 2 and doc["status"] == "budget_exhausted"

    def test_simplex_budget(self, capsys):
        code, doc = run_cli(capsys, "simplex-budget", "--n", "5", "--r", "4")
        assert code == 0 and doc["value"] == 21

    def test_simplex_maxcover(self, capsys):
        code, doc = run_cli(capsys, "simplex-maxcover", "--n", "5", "--r", "4")
        assert code == 0 and doc["value"] == 2

    def test_simplex_maxcover_guard(self, capsys):
        code, doc = run_cli(capsys, "simplex-maxcover", "--n", "10", "--r", "4")
        assert code == 2 and doc["status"] == "guard_exceeded"


class TestSimplexCommands:
    def test_construct_then_verify(self, capsys, tmp_path):
        path = tmp_path / "simplex.json"
        code, doc = run_cli(
            capsys,
            "simplex-construct",
            "--n", "5", "--r", "3", "--seed", "42", "--out", str(path),
        )
        assert code == 0 and doc["status"] == "ok" and doc["rounds"] == 12
        code, doc = run_cli(capsys, "simplex-verify", "--family", str(path))
        assert code == 0 and doc["status"] == "ok"

    def test_construct_resample_limit(self, capsys):
        code, doc = run_cli(
            capsys,
            "simplex-construct",
            "--n", "5", "--r", "4", "--rounds", "2",
            "--seed", "42", "--resample-limit", "200",
        )
        assert code == 2 and doc["status"] == "resample_limit_exhausted"

    def test_verify_witness(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"n": 3, "r": 3, "rounds": ["+++"]}))
        code, doc = run_cli(capsys, "simplex-verify", "--family", str(path))
        assert code == 1 and doc["witness"]["vertices"] == [0, 1, 2]


class TestIndepCommands:
    def test_construct_verify_orient(self, capsys, tmp_path):
        path = tmp_path / "sets.json"
        code, doc = run_cli(
            capsys,
            "indep-construct",
            "--m", "10", "--k", "3", "--t", "60",
            "--seed", "3", "--out", str(path),
        )
        assert code == 0 and doc["status"] == "ok"

        code, doc = run_cli(
            capsys, "indep-verify", "--family", str(path), "--k", "3"
        )
        assert code == 0 and doc["status"] == "ok" and doc["m"] == 10

        out = tmp_path / "orient.json"
        code, doc = run_cli(
            capsys,
            "indep-orient",
            "--family", str(path), "--n", "5", "--k-check", "3",
            "--out", str(out),
        )
        assert code == 0 and doc["status"] == "ok"
        fam = deserialize(out.read_text())
        assert fam.n == 5 and len(fam.rounds) == 60

    def test_construct_retries_exhausted(self, capsys):
        code, doc = run_cli(
            capsys,
            "indep-construct",
            "--m", "10", "--k", "2", "--t", "1",
            "--seed", "0", "--retries", "2",
        )
        assert code == 2 and doc["status"] == "retries_exhausted"

    def test_verify_witness(self, capsys, tmp_path):
        path = tmp_path / "sets.json"
        path.write_text(json.dumps({"t": 3, "sets": [[0], [1]]}))
        code, doc = run_cli(
            capsys, "indep-verify", "--family", str(path), "--k", "2"
        )
        assert code == 1 and doc["status"] == "fail"


class TestDeterminism:
    def _run(self, *argv):
        return subprocess.run(
            [sys.executable, "-m", "cyclecover.cli", *argv],
            capture_output=True,
            text=True,
        )

    @pytest.mark.parametrize(
        "argv",
        [
            ("construct", "--n", "9", "--k", "4"),
            ("simplex-construct", "--n", "5", "--r", "3", "--seed", "7"),
            ("indep-construct", "--m", "10", "--k", "3", "--t", "60", "--seed", "7"),
            ("search-exact", "--n", "5", "--k", "3", "--max-rounds", "2"),
        ],
    )
    def test_seeded_outputs_byte_identical(self, argv):
        a = self._run(*argv)
        b = self._run(*argv)
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout and a.stdout
