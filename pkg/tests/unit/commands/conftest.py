import csv
import json
from pathlib import Path
from typing import Dict, List, Sequence, Tuple
from unittest import mock

import pytest
from click.testing import CliRunner, Result

from leafdist.cli.commands import leafdist
from tests.conftest import config_loader

Rows = List[Dict[str, str]]


@pytest.fixture()
def interactive_cli_runner(mocker: mock, load_config: config_loader) -> CliRunner:
    load_config()
    mocker.patch("leafdist.cli.helpers._isatty", return_value=True)
    return CliRunner()


@pytest.fixture()
def non_interactive_cli_runner(mocker: mock, load_config: config_loader) -> CliRunner:
    load_config()
    mocker.patch("leafdist.cli.helpers._isatty", return_value=False)
    return CliRunner()


def read_rows(path: Path, output_format: str) -> Rows:
    text = path.read_text()
    if output_format == "json":
        return json.loads(text)
    return list(csv.DictReader(text.splitlines()))


# use for typing only
def command_runner(args: Sequence[str], output_format: str = "csv") -> Tuple[Result, Rows]:
    ...


@pytest.fixture()
def run_command(non_interactive_cli_runner: CliRunner, tmp_path: Path) -> command_runner:
    """Invokes `leafdist` with the given arguments and returns the result together with the rows it wrote."""
    counter = 0

    def runner(args: Sequence[str], output_format: str = "csv") -> Tuple[Result, Rows]:
        nonlocal counter
        counter += 1
        target = tmp_path / f"output_{counter}.{output_format}"
        result = non_interactive_cli_runner.invoke(
            leafdist, [*args, "--format", output_format, "--output", str(target)]
        )
        rows = read_rows(target, output_format) if target.exists() else []
        return result, rows

    return runner

