"""Command line round trips driven in-process through main(argv)."""

import json

import pytest

from nukc import NUkCSolution, instance_from_json, verify_solution
from nukc.cli import main
from nukc.serialize import load_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def gen_planted(tmp_path, capsys, name="inst.json", **extra):
    path = tmp_path / name
    argv = ["gen", "planted", "--seed", "4", "--clusters", "2",
            "--points-per-cluster", "3", "--outliers", "1", "-o", str(path)]
    for key, value in extra.items():
        argv += [key, str(value)]
    code, _, _ = run(capsys, *argv)
    assert code == 0
    return path


class TestGen:
    def test_writes_instance_with_planted_truth(self, tmp_path, capsys):
        path = gen_planted(tmp_path, capsys)
        doc = load_json(path)
        inst = instance_from_json(doc)
        assert inst.n == 7  # 2 clusters x 3 points + 1 outlier
        assert set(doc["planted"]) == {"centers1", "centers2", "outliers", "cluster_of"}

    def test_stdout_by_default(self, capsys):
        code, out, _ = run(capsys, "gen", "uniform", "--n", "5", "--seed", "1")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["points"]) == 5

    def test_kcenter_truth_covers_strays(self, tmp_path, capsys):
        path = tmp_path / "kc.json"
        code, _, _ = run(capsys, "gen", "kcenter", "--seed", "2", "--clusters", "2",
                         "--points-per-cluster", "4", "--outliers", "2",
                         "-o", str(path))
        assert code == 0
        doc = load_json(path)
        assert doc["r2"] == 0.0
        assert doc["planted"]["centers2"] == doc["planted"]["outliers"]


class TestSolve:
    def test_solution_exit_and_schema(self, tmp_path, capsys):
        path = gen_planted(tmp_path, capsys)
        code, out, _ = run(capsys, "solve", str(path))
        assert code == 0
        doc = json.loads(out)
        assert doc["status"] == "solution"
        assert doc["dilation"] <= 10.0
        inst = instance_from_json(load_json(path))
        sol = NUkCSolution(
            centers1=tuple(doc["centers1"]),
            centers2=tuple(doc["centers2"]),
            dilation=doc["dilation"],
        )
        ok, count = verify_solution(inst, sol, doc["dilation"])
        assert ok and count == doc["covered_count"]

    def test_infeasible_exit(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({
            "points": [[0.0], [9.0]], "r1": 1.0, "r2": 0.5,
            "k1": 0, "k2": 0, "m": 1,
        }))
        code, out, _ = run(capsys, "solve", str(path))
        assert code == 2
        assert json.loads(out) == {"status": "infeasible"}

    def test_rho_reports_original_units(self, tmp_path, capsys):
        path = gen_planted(tmp_path, capsys)
        code, out, _ = run(capsys, "solve", str(path), "--rho", "2.0")
        assert code == 0
        doc = json.loads(out)
        inst = instance_from_json(load_json(path))
        sol = NUkCSolution(
            centers1=tuple(doc["centers1"]),
            centers2=tuple(doc["centers2"]),
            dilation=doc["dilation"],
        )
        ok, _ = verify_solution(inst, sol, doc["dilation"])
        assert ok  # dilation is relative to the file's radii, not the scaled ones

    def test_optimize_adds_rho_star(self, tmp_path, capsys):
        path = gen_planted(tmp_path, capsys)
        code, out, _ = run(capsys, "solve", str(path), "--optimize")
        assert code == 0
        doc = json.loads(out)
        assert 0.0 < doc["rho_star"] <= 1.0
        inst = instance_from_json(load_json(path))
        sol = NUkCSolution(
            centers1=tuple(doc["centers1"]),
            centers2=tuple(doc["centers2"]),
            dilation=doc["dilation"],
        )
        ok, _ = verify_solution(inst, sol, doc["dilation"])
        assert ok

    def test_trace_goes_to_stderr(self, tmp_path, capsys):
        path = gen_planted(tmp_path, capsys)
        code, out, err = run(capsys, "solve", str(path), "--trace")
        assert code == 0
        assert "trace:" in err
        json.loads(out)  # stdout stays machine readable

    def test_no_shortcuts_agrees(self, tmp_path, capsys):
        # k1 + k2 < m dodges the trivial route; the slack (4 coverable vs
        # m = 3) keeps the ellipsoid run short.
        path = tmp_path / "slack.json"
        path.write_text(json.dumps({
            "points": [[0.0], [0.2], [9.0], [9.2]], "r1": 1.0, "r2": 0.3,
            "k1": 1, "k2": 1, "m": 3,
        }))
        code, out, _ = run(capsys, "solve", str(path), "--no-shortcuts")
        assert code == 0
        doc = json.loads(out)
        assert doc["status"] == "solution"
        assert doc["covered_count"] >= 3

    def test_output_file(self, tmp_path, capsys):
        path = gen_planted(tmp_path, capsys)
        out_path = tmp_path / "sol.json"
        code, out, _ = run(capsys, "solve", str(path), "-o", str(out_path))
        assert code == 0
        assert out == ""
        assert load_json(out_path)["status"] == "solution"


class TestCheck:
    def solved(self, tmp_path, capsys):
        inst_path = gen_planted(tmp_path, capsys)
        sol_path = tmp_path / "sol.json"
        code, _, _ = run(capsys, "solve", str(inst_path), "-o", str(sol_path))
        assert code == 0
        return inst_path, sol_path

    def test_valid_solution(self, tmp_path, capsys):
        inst_path, sol_path = self.solved(tmp_path, capsys)
        code, out, _ = run(capsys, "check", str(inst_path), str(sol_path))
        assert code == 0
        assert out.startswith("valid")

    def test_wrong_count_rejected(self, tmp_path, capsys):
        inst_path, sol_path = self.solved(tmp_path, capsys)
        doc = load_json(sol_path)
        doc["covered_count"] += 1
        sol_path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "check", str(inst_path), str(sol_path))
        assert code == 2
        assert "claimed covered_count" in out

    def test_undercovering_rejected(self, tmp_path, capsys):
        inst_path, sol_path = self.solved(tmp_path, capsys)
        doc = load_json(sol_path)
        doc["centers1"] = []
        doc["centers2"] = []
        doc["covered_count"] = 0
        sol_path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "check", str(inst_path), str(sol_path))
        assert code == 2
        assert out.startswith("invalid")

    def test_infeasible_claim_passes_vacuously(self, tmp_path, capsys):
        inst_path, _ = self.solved(tmp_path, capsys)
        claim = tmp_path / "claim.json"
        claim.write_text(json.dumps({"status": "infeasible"}))
        code, out, _ = run(capsys, "check", str(inst_path), str(claim))
        assert code == 0
        assert "nothing to verify" in out


class TestErrors:
    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "solve", "/nonexistent/inst.json")
        assert code == 1
        assert "error:" in err

    def test_malformed_json(self, tmp_path, capsys):
        path = tmp_path / "garbage.json"
        path.write_text("{not json")
        code, _, err = run(capsys, "solve", str(path))
        assert code == 1
        assert "error:" in err

    def test_invalid_instance_document(self, tmp_path, capsys):
        path = tmp_path / "incomplete.json"
        path.write_text(json.dumps({"points": [[0.0], [1.0]], "r1": 1.0}))
        code, _, err = run(capsys, "solve", str(path))
        assert code == 1
        assert "error:" in err

    def test_unknown_command_is_usage_error(self, capsys):
        with pytest.raises(SystemExit):
            main(["frobnicate"])


class TestBench:
    def test_serial_bench_summary(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--kind", "planted", "--count", "2", "--seed", "1",
            "--clusters", "2", "--points-per-cluster", "3", "--outliers", "1",
        )
        assert code == 0
        assert "2 instances, 2 solved" in out
