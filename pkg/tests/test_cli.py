import json

import pytest
from typer.testing import CliRunner

from constants import ExitCodes
from main import app, run
from models.report import Contradiction, Report
from models.verdict import Verdict
from commands.output import exit_code_for

runner = CliRunner(mix_stderr=False)

FAST = ["--samples", "3", "--emax", "2", "--deep", "2,3"]

RINGS = {
    "two-planes": "p 2\nvars x y u v\ngens x*u, x*v, y*u, y*v\n",
    "char2-cusplike": "p 2\nvars x y z\nweights 2 2 3\ngens z^2 + x^3 + y^3\n",
    "poly-2": "p 2\nvars x y\n",
    "poly-3": "p 3\nvars x y\n",
    "bad": "p 6\nvars x\n",
}


@pytest.fixture
def ring_dir(tmp_path):
    for name, text in RINGS.items():
        (tmp_path / f"{name}.ring").write_text(text, encoding="utf-8")
    return tmp_path


class TestClassify:
    def test_two_planes_json_is_stable(self, ring_dir):
        args = ["classify", str(ring_dir / "two-planes.ring"), "--seed", "7", *FAST, "--format", "json"]
        first = runner.invoke(app, args)
        second = runner.invoke(app, args)
        assert first.exit_code == ExitCodes.OK, first.stderr
        assert first.stdout == second.stdout
        report = json.loads(first.stdout)
        assert report["seed"] == 7
        assert report["ring"]["name"] == "two-planes"
        assert report["format_version"] == "1.0"
        assert report["contradictions"] == []

    def test_text_output(self, ring_dir):
        result = runner.invoke(app, ["classify", str(ring_dir / "poly-3.ring"), *FAST])
        assert result.exit_code == ExitCodes.OK
        assert "no contradictions" in result.stdout

    def test_out_file(self, ring_dir, tmp_path):
        target = tmp_path / "report.json"
        result = runner.invoke(
            app, ["classify", str(ring_dir / "poly-2.ring"), *FAST, "--format", "json", "--out", str(target)]
        )
        assert result.exit_code == ExitCodes.OK
        assert result.stdout == ""
        assert json.loads(target.read_text(encoding="utf-8"))["command"] == "classify"

    def test_timings_are_opt_in(self, ring_dir):
        path = str(ring_dir / "poly-2.ring")
        plain = json.loads(runner.invoke(app, ["classify", path, *FAST, "--format", "json"]).stdout)
        timed = json.loads(runner.invoke(app, ["classify", path, *FAST, "--format", "json", "--timings"]).stdout)
        assert all(entry["wall_time"] is None for entry in plain["entries"])
        assert all(entry["wall_time"] is not None for entry in timed["entries"])


class TestExitCodes:
    def test_refuted_headline_exits_2(self, ring_dir):
        result = runner.invoke(
            app, ["finjective", str(ring_dir / "char2-cusplike.ring"), *FAST, "--format", "json"]
        )
        assert result.exit_code == ExitCodes.REFUTED
        report = json.loads(result.stdout)
        headline = [e for e in report["entries"] if e["property"] == report["headline"]][-1]
        assert headline["kind"] == "refuted"
        assert headline["witness"]["y"] == "z"

    def test_parse_error_exits_1(self, ring_dir):
        result = runner.invoke(app, ["classify", str(ring_dir / "bad.ring")])
        assert result.exit_code == ExitCodes.USAGE
        assert "line 1, column 3: p not prime: 6" in result.stderr

    def test_missing_file_exits_1(self, ring_dir):
        result = runner.invoke(app, ["classify", str(ring_dir / "absent.ring")])
        assert result.exit_code == ExitCodes.USAGE
        assert "ring file not found" in result.stderr

    def test_usage_errors_exit_1(self):
        assert run(["classify"]) == ExitCodes.USAGE
        assert run(["no-such-command"]) == ExitCodes.USAGE

    def test_bad_deep_schedule(self, ring_dir):
        result = runner.invoke(app, ["flc", str(ring_dir / "poly-2.ring"), "--deep", "2,x"])
        assert result.exit_code == ExitCodes.USAGE

    def test_run_returns_command_exit_code(self, ring_dir, capsys):
        code = run(["closure", str(ring_dir / "char2-cusplike.ring"), "--ideal", "x, y", "--emax", "1"])
        assert code == ExitCodes.REFUTED

    def test_contradictions_take_precedence(self):
        report = Report(command="classify", headline="f_injective")
        report.entries.append(Verdict.refuted("f_injective", "nilpotent", witness={"nilpotent": "x"}))
        assert exit_code_for(report) == ExitCodes.REFUTED
        report.contradictions.append(Contradiction(rule="r", properties=["a", "b"], detail="d"))
        assert exit_code_for(report) == ExitCodes.CONTRADICTION


class TestSingleChannelCommands:
    def test_closure_witness(self, ring_dir):
        result = runner.invoke(
            app,
            ["closure", str(ring_dir / "char2-cusplike.ring"), "--ideal", "x, y", "--emax", "1", "--format", "json"],
        )
        assert result.exit_code == ExitCodes.REFUTED
        entry = json.loads(result.stdout)["entries"][0]
        assert entry["property"] == "frobenius_closed"
        assert entry["witness"]["y"] == "z"

    def test_closure_membership_of_element(self, ring_dir):
        result = runner.invoke(
            app,
            [
                "closure", str(ring_dir / "char2-cusplike.ring"),
                "--ideal", "x, y", "--element", "z", "--emax", "2", "--format", "json",
            ],
        )
        assert result.exit_code == ExitCodes.OK
        payload = json.loads(result.stdout)
        assert payload["budget"]["element"] == "z"
        entry = payload["entries"][0]
        assert entry["property"] == "closure_membership"
        assert entry["witness"]["level"] == 1

    def test_dseq_on_regular_sequence(self, ring_dir):
        result = runner.invoke(
            app, ["dseq", str(ring_dir / "char2-cusplike.ring"), "--seq", "x, y", "--format", "json"]
        )
        assert result.exit_code == ExitCodes.OK
        assert json.loads(result.stdout)["entries"][0]["kind"] == "proven"

    def test_buchsbaum_constant(self, ring_dir):
        result = runner.invoke(
            app, ["buchsbaum", str(ring_dir / "two-planes.ring"), "--samples", "2", "--deep", "2,3", "--format", "json"]
        )
        assert result.exit_code == ExitCodes.OK
        report = json.loads(result.stdout)
        assert report["headline"] == "buchsbaum"
        assert report["data"]["C"] == 1

    def test_flc_headline(self, ring_dir):
        result = runner.invoke(
            app, ["flc", str(ring_dir / "two-planes.ring"), "--samples", "2", "--deep", "2", "--format", "json"]
        )
        assert result.exit_code == ExitCodes.OK
        assert json.loads(result.stdout)["headline"] == "flc"


class TestCorpusCommands:
    def test_report_over_directory(self, tmp_path):
        for name in ("poly-2", "poly-3"):
            (tmp_path / f"{name}.ring").write_text(RINGS[name], encoding="utf-8")
        result = runner.invoke(app, ["report", str(tmp_path), *FAST, "--workers", "2", "--format", "json"])
        assert result.exit_code == ExitCodes.OK, result.stderr
        report = json.loads(result.stdout)
        assert [child["ring"]["name"] for child in report["rings"]] == ["poly-2", "poly-3"]
        assert report["data"]["files"] == ["poly-2.ring", "poly-3.ring"]

    def test_report_needs_ring_files(self, tmp_path):
        result = runner.invoke(app, ["report", str(tmp_path)])
        assert result.exit_code == ExitCodes.USAGE

    def test_unknown_family(self):
        result = runner.invoke(app, ["search", "--family", "toric"])
        assert result.exit_code == ExitCodes.USAGE
        assert "unknown family" in result.stderr

    def test_search_writes_candidates_under_out(self, tmp_path):
        out_dir = tmp_path / "candidates"
        result = runner.invoke(app, [
            "search", "--family", "squarefree-monomial", "--count", "2", "--samples", "1",
            "--emax", "1", "--deep", "2", "--max-vars", "3", "--out", str(out_dir), "--format", "json",
        ])
        assert result.exit_code == ExitCodes.OK
        report = Report.model_validate_json(result.stdout)
        assert report.command == "search"
        assert report.data["count"] == 2
        # squarefree monomial rings never become candidates
        assert report.candidates == []
        assert not out_dir.exists()
