"""Command-line interface: exit codes, JSON output, input validation."""

import json

import pytest
from click.testing import CliRunner

from repcur.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, args, **kw):
    return runner.invoke(main, args, catch_exceptions=False, **kw)


def test_help(runner):
    assert invoke(runner, ["--help"]).exit_code == 0
    assert invoke(runner, ["verify", "--help"]).exit_code == 0


def test_json_schema(runner):
    res = invoke(runner, ["verify", "casimir", "-o", "-"])
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["version"] == 1
    assert payload["config"]["command"] == "casimir"
    for check in payload["checks"]:
        assert set(check) == {
            "check_name",
            "parameters",
            "status",
            "expected",
            "actual",
            "runtime_ms",
        }
        assert check["status"] == "pass"


def test_output_file(runner, tmp_path):
    out = tmp_path / "report.json"
    res = invoke(runner, ["verify", "span", "-o", str(out)])
    assert res.exit_code == 0
    payload = json.loads(out.read_text())
    assert payload["checks"][0]["check_name"] == "span_surjectivity"


def test_ad_invariance_command(runner):
    res = invoke(runner, ["verify", "ad-invariance", "--family", "sp", "-n", "1",
                          "-k", "2", "-o", "-"])
    assert res.exit_code == 0


def test_schur_weyl_command(runner):
    res = invoke(runner, ["verify", "schur-weyl", "-n", "2", "-k", "2",
                          "--points", "0,1/2", "--tau", "(1 2)", "-o", "-"])
    assert res.exit_code == 0


def test_cycle_generation_command(runner):
    res = invoke(runner, ["verify", "cycle-generation", "-o", "-"])
    assert res.exit_code == 0


def test_irreducibility_with_expect_fail(runner):
    args = ["verify", "irreducibility", "--points", "0,0,0", "-o", "-"]
    assert invoke(runner, args).exit_code == 1
    assert invoke(runner, args + ["--expect-fail"]).exit_code == 0


def test_usage_errors_exit_2(runner):
    cases = [
        ["verify", "casimir", "--weights", "0,2"],  # not dominant
        ["verify", "casimir", "--points", "1,1"],  # repeated points
        ["verify", "casimir", "--points", "1,x"],  # malformed rational
        ["verify", "span", "--degree-cap", "frogs"],
        ["verify", "schur-weyl", "--tau", "5,9"],
        ["verify", "casimir", "--family", "so"],
    ]
    for args in cases:
        res = invoke(runner, args)
        assert res.exit_code == 2, args


def test_dimension_cap(runner, monkeypatch):
    monkeypatch.setenv("REPCUR_MAX_DIM", "5")
    res = invoke(runner, ["verify", "irreducibility"])
    assert res.exit_code == 2
    assert "REPCUR_MAX_DIM" in res.output


def test_quick_sweep(runner):
    res = invoke(runner, ["verify", "all", "--profile", "quick", "-o", "-"])
    assert res.exit_code == 0
    payload = json.loads(res.output)
    criteria = {c["parameters"]["criterion"] for c in payload["checks"]}
    assert {
        "ad_invariance",
        "commutant",
        "casimir_formula",
        "schur_weyl",
        "span_surjectivity",
        "isotypic_irreducibility",
        "cycle_generation",
        "evaluation_irreducibility",
    } <= criteria
