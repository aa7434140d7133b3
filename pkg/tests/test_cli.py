import json

import pytest

from forcekit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_wheel7(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--family", "wheel:7")
        assert code == 0
        rows = {}
        for line in out.splitlines():
            cells = line.split("\t")
            if len(cells) == 7 and cells[0] == "wheel:7":
                rows[(cells[2], cells[3])] = int(cells[4])
        assert rows[("standard", "Z")] == 3
        assert rows[("standard", "F")] == 4
        assert rows[("psd", "Zplus")] == 3
        assert rows[("psd", "Fplus")] == 4
        assert "# consistent" in out

    def test_path1_failed_zero(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--family", "path:1",
                               "--rule", "standard", "--params", "F", "--json")
        report = json.loads(out)
        assert code == 0
        assert report["computed"] == [{
            "rule": "standard", "parameter": "F", "value": 0,
            "witness": [], "method": "fort-search"}]

    def test_biclique22(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--family", "biclique:2,2",
                               "--json")
        report = json.loads(out)
        values = {(e["rule"], e["parameter"]): e["value"]
                  for e in report["computed"]}
        assert values[("standard", "F")] == 2
        assert values[("psd", "Fplus")] == 1
        assert report["consistent"]

    def test_union_predictions(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--family", "cycle:3+path:2",
                               "--json")
        report = json.loads(out)
        preds = {p["parameter"]: p["value"] for p in report["predictions"]}
        assert preds == {"F": 3, "Fplus": 3}

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("3 3\n0 1\n1 2\n0 2\n")
        code, out, _ = run_cli(capsys, "analyze", "--file", str(path), "--json")
        report = json.loads(out)
        assert code == 0
        assert report["graph"]["n"] == 3
        assert report["predictions"] == []

    def test_bad_family_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "--family", "wheel:2")
        assert code == 2 and "error" in err

    def test_missing_file_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "--file", "/nonexistent")
        assert code == 2

    def test_bad_edge_list_exits_2(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("2 1\n0 0\n")
        code, _, err = run_cli(capsys, "analyze", "--file", str(path))
        assert code == 2 and "loop" in err

    def test_budget_exceeded_exits_3(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "--family", "hypercube:4",
                               "--budget", "0")
        assert code == 3 and "budget" in err

    def test_timings_flag_adds_fields(self, capsys):
        _, out, _ = run_cli(capsys, "analyze", "--family", "path:4",
                            "--timings", "--json")
        report = json.loads(out)
        assert all("seconds" in e for e in report["computed"])

    def test_default_output_byte_identical(self, capsys):
        argv = ("analyze", "--family", "biclique:4,3", "--json")
        _, first, _ = run_cli(capsys, *argv)
        _, second, _ = run_cli(capsys, *argv)
        assert first == second


class TestVerify:
    def test_table1_ok(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "table1",
                               "--max-n", "8")
        assert code == 0 and "OK" in out

    def test_json_byte_identical(self, capsys):
        argv = ("verify", "--suite", "disconnected", "--seed", "42",
                "--jobs", "2", "--json")
        _, first, _ = run_cli(capsys, *argv)
        _, second, _ = run_cli(capsys, *argv)
        assert first == second

    def test_exhaustive_small(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "exhaustive6",
                               "--max-n", "4", "--jobs", "1", "--json")
        result = json.loads(out)
        assert code == 0 and result["graphs_checked"] == 75

    def test_reports_known_discrepancies(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "table51",
                               "--max-n", "6")
        assert code == 0
        assert "known discrepanc" in out
        assert "halfgraph:3" in out

    def test_unknown_suite_rejected_by_parser(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "bogus"])
        assert exc.value.code == 2

    def test_failing_suite_exits_1(self, capsys, monkeypatch):
        import forcekit.cli as cli
        broken = {"suite": "table1", "params": {}, "checks": [
            {"theorem": "Obs 3.1", "graph": "g", "expected": 1,
             "observed": 2, "pass": False}],
            "by_theorem": {}, "passed": 0, "failed": 1,
            "known_discrepancies": 0, "ok": False}
        monkeypatch.setattr(cli, "run_suite", lambda *a, **k: dict(broken))
        code, out, _ = run_cli(capsys, "verify", "--suite", "table1")
        assert code == 1 and "FAILED" in out


class TestTable:
    def test_table1_rows(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--which", "1")
        assert code == 0
        assert "n-2" in out and "iff n=3" in out
        assert "MISMATCH" not in out
        assert ">= 2^n - n" in out

    def test_table2_rows(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--which", "2")
        assert code == 0
        assert "iff s=4" in out and "2s-4" in out
        assert "MISMATCH" not in out
