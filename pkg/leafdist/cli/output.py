import csv
import io
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

import click
import yaml

from leafdist.helpers import format_float, format_ratio

OUTPUT_FORMATS = ("csv", "json")


class OutputRecord:
    """Result of one command: its name, the parameters it ran with and a table of rows.

    Every cell is already a string, so CSV and JSON renderings carry exactly the same values. Only the rows are
    written out; `command` and `parameters` show up in the debug log through `repr`.
    """

    def __init__(self, command: str, parameters: Mapping[str, Any], rows: List[Mapping[str, Any]]):
        self.command = command
        self.parameters = {key: render_value(value) for key, value in parameters.items()}
        self.rows: List[Dict[str, str]] = [{key: render_value(value) for key, value in row.items()} for row in rows]

    @property
    def columns(self) -> List[str]:
        columns = []
        for row in self.rows:
            columns.extend(key for key in row if key not in columns)
        return columns

    def as_dict(self) -> Dict[str, Any]:
        return {"command": self.command, "parameters": self.parameters, "rows": self.rows}

    def __repr__(self):
        return f"<OutputRecord[command:{self.command}, parameters:{self.parameters}, rows:{len(self.rows)}]>"


def render_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, Fraction)):
        return format_ratio(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, (list, tuple)):
        return " ".join(render_value(v) for v in value)
    return str(value)


def format_output(record: OutputRecord, output_format: str) -> str:
    output_format = output_format.lower()
    if output_format == "json":
        return json.dumps(record.rows, indent=4) + "\n"
    elif output_format == "csv":
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=record.columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(record.rows)
        return buffer.getvalue()
    raise ValueError(f"Unknown output format {output_format!r}, expected one of {OUTPUT_FORMATS}.")


def write_output(record: OutputRecord, output_format: str, output: Optional[Union[str, Path]] = None) -> None:
    text = format_output(record, output_format)
    if output is None:
        click.echo(text, nl=False)
    else:
        Path(output).write_text(text)


def format_config(config: Mapping[str, Any]) -> str:
    return yaml.dump(dict(config), default_flow_style=False, sort_keys=False, Dumper=yaml.SafeDumper)


class ClickEchoHandler(logging.Handler):
    """Writes log records to stderr through click, so stdout only ever carries command output."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            click.echo(self.format(record), err=True)
        except Exception:
            self.handleError(record)


def green_bold(s: str) -> str:
    return click.style(s, fg="green", bold=True)


def red_bold(s: str) -> str:
    return click.style(s, fg="red", bold=True)
