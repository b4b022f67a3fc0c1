# tests/test_cli.py

import json
import time
from pathlib import Path

import pytest
from typer.testing import CliRunner

from poly_ldc_lib import cli
from poly_ldc_lib.cli import app, exit_code_for
from poly_ldc_lib.errors import DomainMismatch, InvalidMonoid, NotRepresentable, ParseError, SizeCap
from poly_ldc_lib.models import REPORT_SCHEMA_VERSION, Counterexample, LawReport

GOLDEN = Path(__file__).parent / "golden"

runner = CliRunner()

GOLDEN_SCRIPT = [
    ("01_show.json", ["show", "y^3 + y^2", "--forest"]),
    ("02_eval.json", ["eval", "y^2 + 1", "--at", "3"]),
    ("03_homcount.json", ["homcount", "y^3+y^2", "y+y^2"]),
    ("04_tensor.json", ["tensor", "lin(2)", "rep(3)"]),
    ("05_sub.json", ["sub", "rep(2)", "y + 1"]),
    ("06_close.json", ["close", "rep(2)", "y"]),
    ("07_coclose.json", ["coclose", "y", "2y + 1"]),
    ("08_core.json", ["core", "2y"]),
    ("09_check_dual.json", ["check-dual", "--size", "1"]),
    ("10_search_duals.json", ["search-duals", "--max-pos", "1", "--max-dir", "1"]),
    ("11_laws_cores.json", ["laws", "--suite", "cores"]),
    ("12_check_bialgebra.json", ["check-bialgebra", "--monoid", str(GOLDEN / "trivial_monoid.json"), "--side", "right"]),
]


@pytest.mark.parametrize("golden, args", GOLDEN_SCRIPT, ids=[name for name, _ in GOLDEN_SCRIPT])
def test_json_output_matches_golden(golden, args, logger):
    result = runner.invoke(app, ["--json", *args])
    logger.info(f"poly-ldc {' '.join(args)} exited with {result.exit_code}")
    assert result.exit_code == 0, f"Command failed: {result.output}"
    expected = (GOLDEN / golden).read_text(encoding="utf-8")
    assert result.stdout == expected, f"Output of {args[0]} drifted from {golden}."


def test_reports_follow_the_schema(logger):
    for path in sorted(GOLDEN.glob("[0-9]*.json")):
        data = json.loads(path.read_text(encoding="utf-8"))
        assert sorted(data) == ["command", "exit_status", "results", "schema_version"], f"Top-level keys of {path.name}."
        assert data["schema_version"] == REPORT_SCHEMA_VERSION, f"{path.name} is from another schema version."

    result = runner.invoke(app, ["--json", "homcount", "y", "y @"])
    data = json.loads(result.stdout)
    assert sorted(data["results"]) == ["error", "message"], "Errors report their class and message."


def test_text_output(logger):
    result = runner.invoke(app, ["homcount", "y^3+y^2", "y+y^2"])
    assert result.exit_code == 0 and result.stdout.strip() == "72", f"Unexpected output: {result.stdout!r}"

    result = runner.invoke(app, ["core", "2y", "--max-probe", "2"])
    lines = result.stdout.splitlines()
    assert lines[:2] == ["left-core: true", "right-core: false"], f"Unexpected header: {lines[:2]}"
    assert "PASS core.left" in lines and "PASS core.right" in lines, "Both probe reports are printed."

    result = runner.invoke(app, ["show", "lin(2) @ rep(3)", "--unicode"])
    assert result.stdout.strip() == "lin(2) ⊗ rep(3) = 2y³", f"Unexpected output: {result.stdout!r}"


def test_bialgebra_command(tmp_path, logger):
    path = tmp_path / "z2.json"
    path.write_text(json.dumps({"order": 2, "unit": 0, "table": [[0, 1], [1, 0]]}))
    for side in ("left", "right"):
        result = runner.invoke(app, ["--json", "check-bialgebra", "--monoid", str(path), "--side", side])
        assert result.exit_code == 0, f"Z/2 bialgebra on the {side} should pass: {result.output}"
        data = json.loads(result.stdout)
        assert data["results"]["pass"] is True, "JSON reports the overall verdict."
        assert data["results"]["laws"][0]["law"] == f"{side}_linear_bialgebra", "Report is named after the side."
        assert data["results"]["laws"][0]["stats"]["order"] == 2, "Report records the order."

    result = runner.invoke(app, ["check-bialgebra", "--monoid", str(GOLDEN / "trivial_monoid.json")])
    assert result.exit_code == 0, "The trivial monoid gives a bialgebra."


def test_unknown_names_suggest_a_match(tmp_path, logger):
    result = runner.invoke(app, ["laws", "--suite", "coress"])
    assert result.exit_code == 8, "Unknown suite names exit with 8."
    assert "did you mean 'cores'" in result.output, f"Expected a suggestion: {result.output!r}"

    result = runner.invoke(app, ["check-bialgebra", "--monoid", str(GOLDEN / "trivial_monoid.json"), "--side", "lefft"])
    assert result.exit_code == 8, "Unknown sides exit with 8."
    assert "did you mean 'left'" in result.output, f"Expected a suggestion: {result.output!r}"


def test_error_exit_codes(tmp_path, logger):
    result = runner.invoke(app, ["show", "y^"])
    assert result.exit_code == 5, "Parse errors exit with 5."

    result = runner.invoke(app, ["--json", "show", "y^"])
    data = json.loads(result.stdout)
    assert data["exit_status"] == 5 and data["results"]["error"] == "ParseError", "JSON mode reports the error."

    result = runner.invoke(app, ["--cap", "1000", "eval", "rep(30)", "--at", "2"])
    assert result.exit_code == 3, "Exceeding --cap exits with 3."

    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"order": 2, "unit": 0, "table": [[0, 1], [1, 1], [0, 0]]}))
    result = runner.invoke(app, ["check-bialgebra", "--monoid", str(path)])
    assert result.exit_code == 7, "Invalid monoid tables exit with 7."

    result = runner.invoke(app, ["eval", "y", "--at", "-1"])
    assert result.exit_code == 2, "Bad option values are usage errors."


@pytest.mark.parametrize(
    "payload",
    [
        "5",
        '{"order": 1, "unit": "0", "table": [[0]]}',
        '{"order": 2, "unit": 0, "table": [[0, "x"], [1, 0]]}',
    ],
)
def test_malformed_monoid_file_exits_with_seven(tmp_path, payload, logger):
    path = tmp_path / "monoid.json"
    path.write_text(payload)
    result = runner.invoke(app, ["--json", "check-bialgebra", "--monoid", str(path)])
    assert result.exit_code == 7, f"Malformed monoid files are InvalidMonoid: {result.output!r}"
    assert json.loads(result.stdout)["results"]["error"] == "InvalidMonoid", "The report names the error."


def test_large_products_hit_the_cap_quickly(logger):
    for command in ("tensor", "sub"):
        start = time.monotonic()
        result = runner.invoke(app, ["--cap", "1000", command, "rep(100000)", "rep(100000)"])
        elapsed = time.monotonic() - start
        assert result.exit_code == 3, f"{command} of two huge representables should exceed the cap: {result.output!r}"
        assert elapsed < 5, f"{command} took {elapsed:.1f}s to refuse."

    result = runner.invoke(app, ["tensor", "rep(100000)", "rep(100000)"])
    assert result.exit_code == 3, "The default cap refuses 10^10 directions."


def test_bad_environment_is_a_usage_error(logger):
    for name, value in (("POLY_LDC_CAP", "lots"), ("POLY_LDC_WORKERS", "0"), ("POLY_LDC_LOG_LEVEL", "chatty")):
        result = runner.invoke(app, ["homcount", "y", "y"], env={name: value})
        assert result.exit_code == 2, f"{name}={value} should be a usage error, got {result.exit_code}."
        assert name in result.output, f"The message names the variable: {result.output!r}"

    result = runner.invoke(app, ["eval", "rep(30)", "--at", "2"], env={"POLY_LDC_CAP": "1000"})
    assert result.exit_code == 3, "POLY_LDC_CAP is read when the command starts."


def test_exit_code_table(logger):
    assert exit_code_for(SizeCap(10, 5)) == 3, "SizeCap maps to 3."
    assert exit_code_for(DomainMismatch("x")) == 4, "DomainMismatch maps to 4."
    assert exit_code_for(ParseError(1, 1, "term", "")) == 5, "ParseError maps to 5."
    assert exit_code_for(NotRepresentable("x")) == 6, "NotRepresentable maps to 6."
    assert exit_code_for(InvalidMonoid("x")) == 7, "InvalidMonoid maps to 7."


def test_failing_suite_exits_with_one(monkeypatch, logger):
    broken = LawReport.combine("cores", [LawReport("star_functor", False, Counterexample((0,), (), "a", "b"))], stats={"seed": 0})
    monkeypatch.setattr(cli, "run_suite", lambda name, seed=0: broken)
    result = runner.invoke(app, ["laws", "--suite", "cores"])
    assert result.exit_code == 1, "A failing law exits with 1."
    assert result.stdout.startswith("FAIL cores"), f"Text output leads with the verdict: {result.stdout!r}"


def test_seed_is_reported(logger):
    result = runner.invoke(app, ["--json", "--seed", "7", "laws", "--suite", "cores"])
    assert json.loads(result.stdout)["results"]["seed"] == 7, "The seed flows into the report."


def test_log_level_option(logger):
    result = runner.invoke(app, ["--log-level", "bogus", "homcount", "y", "y"])
    assert result.exit_code == 2, "An unknown log level is a usage error."

    result = runner.invoke(app, ["--log-level", "debug", "homcount", "y", "y"])
    assert result.exit_code == 0 and result.stdout.strip() == "1", "Logging never reaches stdout."


def test_same_invocation_gives_identical_json(logger):
    args = ["--json", "--seed", "3", "laws", "--suite", "polycore"]
    first, second = runner.invoke(app, args), runner.invoke(app, args)
    assert first.exit_code == 0, f"polycore suite should pass: {first.output}"
    assert first.stdout == second.stdout, "Seeded runs are byte-identical."
