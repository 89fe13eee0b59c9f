"""
Tests for the bracetree command line
"""
import json
import sys
from pathlib import Path

import pytest
from click.testing import CliRunner

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from bracetree import cli as cli_module
from bracetree.cli import cli, resolve_alphabet
from bracetree.errors import ConfigurationError
from bracetree.main import main
from bracetree.reports import AxiomReport, FreenessReport, SeriesPayload

SIX_TERMS = "d[a,b,c] + d[a,c,b] + d[a,c[b]] + d[c,a,b] + d[c[a],b] + d[c[a,b]]"


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def test_enum_weight_four(runner):
    result = runner.invoke(cli, ["enum", "--kind", "planar", "--weight", "4", "--alphabet", "a"])
    assert result.exit_code == 0
    assert result.output.splitlines() == ["a[a,a,a]", "a[a,a[a]]", "a[a[a],a]", "a[a[a,a]]", "a[a[a[a]]]"]


def test_enum_json(runner):
    result = runner.invoke(cli, ["enum", "--kind", "rooted", "--weight", "3", "--alphabet-size", "2", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["kind"] == "rooted"
    assert payload["alphabet"] == ["x1", "x2"]
    assert payload["count"] == len(payload["trees"]) == 14


def test_prod_brace_example(runner):
    result = runner.invoke(cli, ["prod", "--op", "brace", "--args", "a,b", "--target", "d[c]"])
    assert result.exit_code == 0
    assert result.output.strip() == SIX_TERMS


def test_prod_json(runner):
    result = runner.invoke(cli, ["prod", "--op", "prelie-rooted", "--args", "a", "--target", "d[b,c]", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["op"] == "prelie-rooted"
    assert {term["basis"] for term in payload["terms"]} == {"d[a,b,c]", "d[c,b[a]]", "d[b,c[a]]"}
    assert all(term["coefficient"] == "1" for term in payload["terms"])


@pytest.mark.parametrize(
    "op, args, target, expected",
    [
        ("prelie", "a", "b[c]", "b[a,c] + b[c,a] + b[c[a]]"),
        ("star", "a", "b[c]", "b[a,c] + b[c,a]"),
        ("star-rooted", "a", "d[b,c]", "d[a,b,c]"),
        ("shuffle", "a", "b", "(a,b) + (b,a)"),
    ],
)
def test_prod_operations(runner, op, args, target, expected):
    result = runner.invoke(cli, ["prod", "--op", op, "--args", args, "--target", target])
    assert result.exit_code == 0
    assert result.output.strip() == expected


def test_series_generators_json(runner):
    result = runner.invoke(cli, ["series", "--kind", "generators", "--alphabet-size", "1", "--order", "7", "--json"])
    assert result.exit_code == 0
    payload = SeriesPayload.model_validate_json(result.output)
    assert payload.order == 7
    assert payload.coeffs == ["0", "1", "0", "0", "1", "3", "11", "34"]


def test_series_text(runner):
    result = runner.invoke(cli, ["series", "--kind", "brace", "--order", "5"])
    assert result.exit_code == 0
    assert result.output.strip() == "0, 1, 1, 2, 5, 14"


def test_series_graded(runner):
    result = runner.invoke(cli, ["series", "--kind", "alphabet", "--alphabet", "p,q", "--grades", "1,2", "--order", "3"])
    assert result.exit_code == 0
    assert result.output.strip() == "0, 1, 1, 0"


def test_parse_error_is_usage_error(runner):
    result = runner.invoke(cli, ["prod", "--op", "brace", "--args", "a", "--target", "d["])
    assert result.exit_code == 2
    assert "offset 2" in result.stderr
    assert "Tree :=" in result.stderr


def test_unknown_decoration_is_usage_error(runner):
    result = runner.invoke(cli, ["prod", "--op", "brace", "--args", "z", "--target", "d", "--alphabet", "a,d"])
    assert result.exit_code == 2


def test_single_argument_products_check_arity(runner):
    result = runner.invoke(cli, ["prod", "--op", "prelie", "--args", "a,b", "--target", "d"])
    assert result.exit_code == 2


def test_verify_axiom(runner):
    result = runner.invoke(cli, ["verify", "--axiom", "nap", "--max-weight", "5", "--trials", "10", "--seed", "42"])
    assert result.exit_code == 0
    assert "nap-planar: 30 cases passed" in result.output
    assert "nap-rooted: 30 cases passed" in result.output


def test_verify_brace_json(runner):
    result = runner.invoke(cli, ["verify", "--axiom", "brace", "--max-weight", "3", "--trials", "0", "--json"])
    assert result.exit_code == 0
    reports = [AxiomReport.model_validate(r) for r in json.loads(result.output)["axioms"]]
    assert reports[0].passed


def test_verify_freeness(runner):
    result = runner.invoke(cli, ["verify", "--freeness", "--alphabet-size", "1", "--max-degree", "5"])
    assert result.exit_code == 0
    assert "V(4): x1[x1,x1[x1]]" in result.output
    assert "prelie_full_rank" in result.output


def test_verify_freeness_json_is_reproducible(runner, tmp_path):
    output = tmp_path / "report.json"
    args = ["verify", "--freeness", "--alphabet", "a", "--max-degree", "4", "--json", "--output", str(output)]
    assert runner.invoke(cli, args).exit_code == 0
    first = output.read_text()
    assert runner.invoke(cli, args).exit_code == 0
    assert output.read_text() == first

    report = FreenessReport.model_validate(json.loads(first)["freeness"])
    assert [d.complement for d in report.degrees] == [1, 0, 0, 1]
    assert report.passed


def test_verify_needs_a_check(runner):
    result = runner.invoke(cli, ["verify"])
    assert result.exit_code == 2


def test_verify_failure_exit_code(runner, monkeypatch):
    def failing(*args, **kwargs):
        return [AxiomReport(axiom="nap-planar", cases=1, counterexamples=["x=a, y=a, z=a"])]

    monkeypatch.setattr(cli_module, "run_axiom", failing)
    result = runner.invoke(cli, ["verify", "--axiom", "nap"])
    assert result.exit_code == 1
    assert "counterexample: x=a, y=a, z=a" in result.output


def test_invalid_environment_is_usage_error(runner, monkeypatch):
    monkeypatch.setenv("BRACETREE_TRIALS", "many")
    result = runner.invoke(cli, ["series"])
    assert result.exit_code == 2


@pytest.mark.parametrize("command", [["series", "--kind", "brace", "--order", "3"], ["enum", "--weight", "2"]])
def test_zero_alphabet_size_is_usage_error(runner, command):
    result = runner.invoke(cli, command + ["--alphabet-size", "0"])
    assert result.exit_code == 2
    assert "alphabet size must be positive" in result.stderr


def test_resolve_alphabet():
    assert resolve_alphabet(None, None, None).symbols == ("x1",)
    assert resolve_alphabet(None, None, None, texts=("d[c]", "b,a")).symbols == ("a", "b", "c", "d")
    assert resolve_alphabet(None, 2, "1,2").grades == (1, 2)
    with pytest.raises(ConfigurationError):
        resolve_alphabet("a", 2, None)
    with pytest.raises(ConfigurationError):
        resolve_alphabet("a", None, "one")


def test_main_runs_command(monkeypatch, capsys):
    monkeypatch.delenv("LOG_LEVEL", raising=False)
    with pytest.raises(SystemExit) as exc_info:
        main(["series", "--order", "3"])
    assert exc_info.value.code == 0
    assert capsys.readouterr().out.strip() == "0, 1, 1, 2"


def test_main_rejects_bad_log_level(monkeypatch):
    monkeypatch.setenv("LOG_LEVEL", "chatty")
    with pytest.raises(SystemExit) as exc_info:
        main(["series"])
    assert exc_info.value.code == 2
