"""Command line tests: envelope shape, routing, exit codes, determinism.

The CLI is a thin binding, so most tests either compare its payload against
the library function it must delegate to or stub that function out and
check the routing.  One fast verification suite runs for real end to end.
"""

import json

import pytest
from click.testing import CliRunner

from refleq import __version__
from refleq import cli as cli_module
from refleq.cli import cli, emit_table
from refleq.dynkin import DynkinType, info_dict
from refleq.kclass import w0_summary_dict
from refleq.polarization import build_instance, replay_certificate, solve_table
from refleq.tableaux import betti_report


def run_cli(*args):
    return CliRunner().invoke(cli, list(args))


def payload(result):
    report = json.loads(result.stdout)
    assert set(report) == {"command", "results", "toolVersion", "wallTimeMs"}
    assert report["toolVersion"] == __version__
    return report["results"]


class TestEnvelope:
    def test_report_shape_and_echo(self):
        res = run_cli("dynkin", "--type", "A3")
        assert res.exit_code == 0
        report = json.loads(res.stdout)
        assert report["command"]["path"] == "refleq dynkin"
        assert report["command"]["params"] == {"type_name": "A3"}
        assert isinstance(report["wallTimeMs"], int)

    def test_output_is_byte_identical_modulo_wall_time(self):
        def normalized():
            res = run_cli("polarization", "summary", "--l", "3")
            assert res.exit_code == 0
            report = json.loads(res.stdout)
            del report["wallTimeMs"]
            return json.dumps(report, sort_keys=True)

        assert normalized() == normalized()

    def test_stdout_carries_only_json(self):
        res = run_cli("verify", "--scenario", "spInstanton", "--l", "3")
        json.loads(res.stdout)  # must parse even though the check fails
        assert res.exit_code == 1
        assert "fails" in res.stderr


class TestDelegation:
    def test_dynkin_matches_library(self):
        res = run_cli("dynkin", "--type", "D4")
        assert payload(res) == info_dict(DynkinType.parse("D4"))

    def test_kclass_matches_library(self):
        res = run_cli("kclass", "--type", "A2")
        got = payload(res)
        assert got["coxeterNumber"] == 3
        assert got["transform"] == w0_summary_dict(DynkinType.parse("A2"))

    def test_betti_matches_library(self):
        res = run_cli("tableaux", "betti", "--kind", "sp", "--l", "3", "--w1", "2")
        got = payload(res)
        assert got == betti_report("sp", 3, 2)

    def test_polarization_summary_matches_library(self):
        res = run_cli("polarization", "summary", "--l", "4")
        assert payload(res) == solve_table(l_values=(2, 3, 4))

    def test_verify_routing(self, monkeypatch):
        calls = {}

        def fake(kind, l, mode="symbolic"):
            calls["args"] = (kind, l, mode)
            return {"holds": True, "identity": "reflection"}

        monkeypatch.setattr(cli_module, "check_reflection", fake)
        res = run_cli("verify", "--scenario", "flagMinus", "--l", "4",
                      "--mode", "multipoint")
        assert res.exit_code == 0
        assert calls["args"] == ("flagMinus", 4, "multipoint")

    def test_suite_routing(self, monkeypatch):
        def fake():
            return {"ok": False, "results": [
                {"criterion": 1, "title": "stub", "ok": False, "detail": "boom"}
            ]}

        monkeypatch.setattr(cli_module, "run_acceptance", fake)
        res = run_cli("suite", "acceptance")
        assert res.exit_code == 1
        assert payload(res)["ok"] is False
        assert "FAIL" in res.stderr


class TestTableaux:
    def test_so_component_example(self):
        res = run_cli("tableaux", "betti", "--kind", "so", "--l", "2", "--w1", "3")
        got = payload(res)
        assert got["components"] == 2
        assert got["sizes"] == [4, 4]

    def test_betti_csv(self):
        res = run_cli("tableaux", "betti", "--kind", "sp", "--l", "4", "--w1", "2",
                      "--emit", "csv")
        assert res.exit_code == 0
        lines = res.stdout.strip().splitlines()
        assert lines[0] == "l,w1,dim,poincare"
        assert len(lines) == 1 + 3 * 3  # l in 2..4 times w1 in 0..2
        assert lines[1] == "2,0,0,1"

    def test_csv_matches_json_rows(self):
        rows, text = emit_table("betti", {"kind": "sp", "l": 3, "w1": 1})
        assert [r["l"] for r in rows] == [2, 2, 3, 3]
        assert str(rows[1]["dim"]) in text.splitlines()[2]

    def test_flag_points(self):
        res = run_cli("tableaux", "flags", "--sign", "minus", "--l", "5", "--w1", "4")
        got = payload(res)
        assert got["count"] == 25
        assert got["diagnostics"] == []

    def test_flag_diagnostics_on_stderr(self):
        res = run_cli("tableaux", "flags", "--sign", "minus", "--l", "5", "--w1", "1")
        assert res.exit_code == 0
        got = payload(res)
        assert got["count"] == 0
        assert got["diagnostics"]
        assert "even" in res.stderr


class TestRkmat:
    def test_anti_identity_table(self):
        res = run_cli("rkmat", "kmatrix", "--kind", "flagPlus", "--l", "4")
        got = payload(res)
        assert got["labels"] == [1, 2, 3, 4]
        cells = {(e["row"], e["col"]): e["value"] for e in got["entries"]}
        assert cells == {(1, 4): "1", (2, 3): "1", (3, 2): "1", (4, 1): "1"}

    def test_flag_minus_entries_are_rational(self):
        res = run_cli("rkmat", "kmatrix", "--kind", "flagMinus", "--l", "2")
        cells = {(e["row"], e["col"]): e["value"] for e in payload(res)["entries"]}
        assert cells[(1, 1)] == "h / (2*u + h)"
        assert cells[(2, 1)] == "2*u / (2*u + h)"


class TestVerify:
    def test_single_scenario_holds(self):
        res = run_cli("verify", "--scenario", "flagPlus", "--l", "2")
        assert res.exit_code == 0
        assert payload(res)["holds"] is True

    def test_single_scenario_failure_exit(self):
        res = run_cli("verify", "--scenario", "spInstanton", "--l", "3")
        assert res.exit_code == 1
        assert payload(res)["holds"] is False

    def test_fast_suite_end_to_end(self):
        res = run_cli("verify", "--suite", "unitarity", "--l", "2")
        assert res.exit_code == 0
        got = payload(res)
        assert got["ok"] is True
        assert all(v["holds"] == v["expected"] for v in got["verdicts"]
                   if v["expected"] is not None)

    def test_usage_errors(self):
        assert run_cli("verify").exit_code == 2
        assert run_cli("verify", "--scenario", "flagPlus", "--suite", "all").exit_code == 2
        assert run_cli("verify", "--scenario", "flagPlus").exit_code == 2
        assert run_cli("verify", "--suite", "nonsense").exit_code == 2


class TestPolarization:
    def test_solve_sat(self):
        res = run_cli("polarization", "solve", "--sign", "minus", "--l", "2")
        got = payload(res)
        assert got["verdict"] == "SAT"
        assert got["certificate"] is None
        assert len(got["witness"]) == 12  # 4 points x 3 pairs

    def test_solve_unsat_certificate_replays(self):
        res = run_cli("polarization", "solve", "--sign", "minus", "--l", "3")
        assert res.exit_code == 0
        got = payload(res)
        assert got["verdict"] == "UNSAT"
        assert got["witness"] is None
        assert replay_certificate(build_instance("-", 3), got["certificate"])

    def test_bad_size_is_usage_error(self):
        assert run_cli("polarization", "solve", "--sign", "plus", "--l", "1").exit_code == 2


class TestUsage:
    def test_unknown_type_flag(self):
        res = run_cli("dynkin", "--type", "Z9")
        assert res.exit_code == 2
        assert "--type" in res.stderr

    def test_unknown_subcommand(self):
        assert run_cli("nonsense").exit_code == 2

    def test_unknown_table_kind(self):
        with pytest.raises(ValueError):
            emit_table("nonsense", {})

    def test_version_flag(self):
        res = run_cli("--version")
        assert res.exit_code == 0
        assert __version__ in res.stdout
