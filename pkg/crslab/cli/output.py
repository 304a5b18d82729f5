"""
Result writers for the json, csv and plain formats

Results go to standard output or to ``--output``; logs never do. JSON is
indented with keys in model order, CSV has a header row and LF line
endings, and plain renders rich tables without color so identical runs
give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, Optional, Sequence

import click
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table
from rich.text import Text

from ..config.constants import CSV_LINE_TERMINATOR, PLAIN_TABLE_WIDTH
from ..config.logger import get_logger
from .schemas import OutputFormat, RunConfig

logger = get_logger(__name__)


def to_json(document: BaseModel) -> str:
    return json.dumps(document.model_dump(mode="json"), indent=2) + "\n"


def to_json_line(document: BaseModel) -> str:
    return json.dumps(document.model_dump(mode="json"), separators=(",", ":")) + "\n"


def to_csv(columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator=CSV_LINE_TERMINATOR)
    writer.writerow(columns)
    for row in rows:
        writer.writerow(["" if value is None else value for value in row])
    return buffer.getvalue()


def to_plain(lines: Sequence[str], columns: Sequence[str] = (), rows: Iterable[Sequence[Any]] = (),
             title: Optional[str] = None) -> str:
    buffer = io.StringIO()
    console = Console(file=buffer, width=PLAIN_TABLE_WIDTH, color_system=None,
                      force_terminal=False, highlight=False)
    for line in lines:
        console.print(line, markup=False, soft_wrap=True)
    rows = list(rows)
    if columns and rows:
        table = Table(title=title)
        for column in columns:
            table.add_column(column)
        for row in rows:
            table.add_row(*(Text("" if value is None else str(value)) for value in row))
        console.print(table)
    return buffer.getvalue()


class ResultWriter:
    """Writes one command's result in the configured format"""

    def __init__(self, run: RunConfig):
        self.run = run
        self._stream = None

    @property
    def format(self) -> OutputFormat:
        return self.run.format

    def write(self, text: str) -> None:
        if self.run.output:
            if self._stream is None:
                self._stream = open(self.run.output, "w", encoding="utf-8", newline="")
                logger.debug(f"Writing results to {self.run.output}")
            self._stream.write(text)
        else:
            click.echo(text, nl=False)

    def close(self) -> None:
        if self._stream is not None:
            self._stream.close()
            self._stream = None

    def emit(
            self,
            document: Optional[BaseModel],
            columns: Sequence[str] = (),
            rows: Sequence[Sequence[Any]] = (),
            lines: Sequence[str] = (),
            title: Optional[str] = None,
    ) -> None:
        """Write ``document`` as JSON, or ``rows`` as CSV, or ``lines`` and a table as plain text"""
        if self.format == OutputFormat.json:
            if document is None:
                raise ValueError("JSON output needs a document")
            self.write(to_json(document))
        elif self.format == OutputFormat.csv:
            self.write(to_csv(columns, rows))
        else:
            self.write(to_plain(lines, columns, rows, title))
        self.close()

