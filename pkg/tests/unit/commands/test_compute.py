import math
from unittest import mock

import pytest
from click.testing import CliRunner

from leafdist import __version__
from leafdist.cli.commands import leafdist
from tests.unit.commands.conftest import command_runner, read_rows


def test_version(non_interactive_cli_runner: CliRunner):
    result = non_interactive_cli_runner.invoke(leafdist, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_dist_five(run_command: command_runner):
    result, rows = run_command(["dist", "5"])
    assert result.exit_code == 0
    assert [(r["i"], r["c_i"], r["probability"]) for r in rows] == [
        ("1", "0", "0"),
        ("2", "3", "1/5"),
        ("3", "6", "2/5"),
        ("4", "6", "2/5"),
    ]


def test_dist_three(run_command: command_runner):
    _, rows = run_command(["dist", "3"])
    assert [(r["i"], r["c_i"], r["probability"]) for r in rows] == [("1", "0", "0"), ("2", "1", "1")]


def test_dist_rejects_two(run_command: command_runner):
    result, rows = run_command(["dist", "2"])
    assert result.exit_code == 1
    assert "DomainException" in result.output
    assert rows == []


def test_non_integer_n_is_a_domain_error(run_command: command_runner):
    result, rows = run_command(["dist", "five"])
    assert result.exit_code == 1
    assert "'five' is not an integer" in result.output
    assert rows == []
    assert run_command(["asympt", "100", "1e3"])[0].exit_code == 1
    assert run_command(["sample", "10", "--samples", "many"])[0].exit_code == 1


def test_unknown_option_is_a_usage_error(run_command: command_runner):
    result, _ = run_command(["dist", "5", "--bogus"])
    assert result.exit_code == 2


@pytest.mark.parametrize(
    "args", [["dist", "7"], ["stats", "9"], ["median", "40", "--asymptotics"], ["asympt", "50", "60"]]
)
def test_csv_and_json_agree(run_command: command_runner, args):
    _, csv_rows = run_command(args, "csv")
    _, json_rows = run_command(args, "json")
    assert csv_rows == json_rows
    assert csv_rows


def test_format_defaults_to_config(non_interactive_cli_runner: CliRunner, tmp_path):
    target = tmp_path / "dist.out"
    result = non_interactive_cli_runner.invoke(leafdist, ["dist", "4", "--output", str(target)])
    assert result.exit_code == 0
    # the test config asks for json
    assert read_rows(target, "json")[2] == {"i": "3", "c_i": "2", "probability": "2/3"}


def test_output_goes_to_stdout_without_path(non_interactive_cli_runner: CliRunner):
    result = non_interactive_cli_runner.invoke(leafdist, ["dist", "3", "--format", "csv"])
    assert result.exit_code == 0
    assert "i,c_i,probability\n1,0,0\n2,1,1\n" in result.output


@pytest.mark.parametrize("n, expected", [(4, "2"), (5, "2"), (6, "3")])
def test_median(run_command: command_runner, n: int, expected: str):
    result, rows = run_command(["median", str(n)])
    assert result.exit_code == 0
    assert rows == [{"n": str(n), "median": expected}]


def test_median_asymptotics(run_command: command_runner):
    _, rows = run_command(["median", "10000", "--asymptotics"])
    row = rows[0]
    assert row["median"] == "166"
    assert float(row["asymptote"]) == pytest.approx(math.sqrt(4 * math.log(2) * 10000))
    assert float(row["refined"]) == pytest.approx(float(row["asymptote"]) + 0.5 - math.log(2))
    assert float(row["ratio"]) == pytest.approx(166 / float(row["asymptote"]))


@pytest.mark.parametrize("n, p, expected", [(5, "9/10", "3"), (5, "1/2", "2"), (4, "1/4", "1")])
def test_percentile(run_command: command_runner, n: int, p: str, expected: str):
    result, rows = run_command(["percentile", str(n), p])
    assert result.exit_code == 0
    assert rows[0]["percentile"] == expected
    assert rows[0]["p"] == p
    assert float(rows[0]["asymptote"]) == pytest.approx(math.sqrt(-4 * math.log(1 - eval_ratio(p)) * n))


def eval_ratio(text: str) -> float:
    numerator, denominator = text.split("/")
    return int(numerator) / int(denominator)


@pytest.mark.parametrize("p", ["1", "1/1", "0/3", "0.5", "half", "3/2"])
def test_percentile_rejects(run_command: command_runner, p: str):
    result, rows = run_command(["percentile", "5", p])
    assert result.exit_code == 1
    assert rows == []


def test_percentile_asymptotic_only_accepts_decimals(run_command: command_runner):
    result, rows = run_command(["percentile", "100", "0.75", "--asymptotic-only"])
    assert result.exit_code == 0
    assert rows[0]["p"] == "3/4"
    assert float(rows[0]["asymptote"]) == pytest.approx(23.548, abs=1e-3)
    assert "percentile" not in rows[0]


def test_percentile_close_to_one(run_command: command_runner):
    p = f"{10 ** 20 - 1}/{10 ** 20}"
    result, rows = run_command(["percentile", "50", p])
    assert result.exit_code == 0
    assert 1 <= int(rows[0]["percentile"]) <= 49
    assert float(rows[0]["asymptote"]) == pytest.approx(math.sqrt(4 * 20 * math.log(10) * 50))
    result, rows = run_command(["asympt", "50", "--p", p])
    assert result.exit_code == 0
    assert rows[0]["percentile"] != ""


@pytest.mark.parametrize("n, mean, variance", [(3, "2", "0"), (4, "8/3", "2/9"), (5, "16/5", "14/25")])
def test_stats(run_command: command_runner, n: int, mean: str, variance: str):
    result, rows = run_command(["stats", str(n)])
    assert result.exit_code == 0
    assert (rows[0]["mean"], rows[0]["variance"]) == (mean, variance)


def test_stats_compares_with_sqrt_pi_n(run_command: command_runner):
    _, rows = run_command(["stats", "1000"])
    assert 0.99 < float(rows[0]["ratio"]) < 1.01
    assert float(rows[0]["asymptote"]) == pytest.approx(math.sqrt(1000 * math.pi))


def test_asympt_median_columns(run_command: command_runner):
    result, rows = run_command(["asympt", "100", "1000"])
    assert result.exit_code == 0
    assert [row["n"] for row in rows] == ["100", "1000"]
    assert [row["median"] for row in rows] == ["16", "52"]
    assert set(rows[0]) == {"n", "median", "asymptote", "refined", "ratio"}


def test_asympt_single_n(run_command: command_runner):
    _, rows = run_command(["asympt", "12"])
    assert len(rows) == 1


def test_asympt_percentile_columns(run_command: command_runner):
    _, rows = run_command(["asympt", "5", "1000", "--p", "3/4"])
    assert set(rows[0]) == {"n", "p", "percentile", "asymptote", "refined", "ratio"}
    assert all(row["p"] == "3/4" for row in rows)
    assert rows[0]["percentile"] == "3"


def test_asympt_config_percentiles(run_command: command_runner):
    _, rows = run_command(["asympt", "5", "7", "--config-percentiles"])
    assert [(row["n"], row["p"]) for row in rows] == [("5", "1/2"), ("5", "9/10"), ("7", "1/2"), ("7", "9/10")]


def test_asympt_rejects_small_n(run_command: command_runner):
    result, _ = run_command(["asympt", "100", "2"])
    assert result.exit_code == 1


def test_verbose_prints_traceback(non_interactive_cli_runner: CliRunner):
    for args in (["-v", "dist", "2"], ["dist", "2", "--verbose"]):
        result = non_interactive_cli_runner.invoke(leafdist, args)
        assert result.exit_code == 1
        assert "Traceback" in result.output
        assert "DomainException" in result.output


def test_verbose_from_environment(mocker: mock, non_interactive_cli_runner: CliRunner):
    mocker.patch("leafdist.cli.environment.LEAFDIST_VERBOSE", "1")
    result = non_interactive_cli_runner.invoke(leafdist, ["dist", "2"])
    assert result.exit_code == 1
    assert "Traceback" in result.output


def test_record_parameters_are_logged(run_command: command_runner):
    result, rows = run_command(["-v", "median", "40"])
    assert result.exit_code == 0
    assert "<OutputRecord[command:median, parameters:{'n': '40', 'asymptotics': 'false'}, rows:1]>" in result.output
    assert list(rows[0]) == ["n", "median"]
