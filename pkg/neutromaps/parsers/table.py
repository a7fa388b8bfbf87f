"""Raw data tables.

A header row of attribute labels, then one row per group::

    # group  interval  counts...
    A1 A2 A3
    21-30  10  22 10 21
    31-35   5  17  4 14
"""
import logging

import regex

from ..exceptions import ParseError
from ..models import RawDataTable
from ..models.RawDataTable import table_from_rows
from ..utils import read_text
from .text import content_lines, split_tokens

logger = logging.getLogger(__name__)

NUMBER = regex.compile(r"^\d+(?:\.\d+)?$")
COUNT = regex.compile(r"^\d+$")


def parse_table(text: str, path=None) -> RawDataTable:
    lines = list(content_lines(text))
    if not lines:
        raise ParseError("empty table", None, path)
    number, line = lines[0]
    tokens = split_tokens(line)
    col_labels = tokens
    if len(set(col_labels)) != len(col_labels):
        raise ParseError("duplicate attribute label", number, path)
    rows = []
    for number, line in lines[1:]:
        tokens = split_tokens(line)
        if len(tokens) != len(col_labels) + 2:
            raise ParseError(f"expected a label, an interval and {len(col_labels)} counts, found {len(tokens)} fields", number, path)
        label, interval, counts = tokens[0], tokens[1], tokens[2:]
        if not NUMBER.match(interval) or float(interval) <= 0:
            raise ParseError(f"interval '{interval}' is not a positive number", number, path)
        for count in counts:
            if not COUNT.match(count):
                raise ParseError(f"count '{count}' is not a non-negative integer", number, path)
        if any(label == existing for existing, _, _ in rows):
            raise ParseError(f"duplicate row label '{label}'", number, path)
        rows.append((label, float(interval), [int(count) for count in counts]))
    if not rows:
        raise ParseError("table has no data rows", number, path)
    logger.debug("parsed %dx%d table from %s", len(rows), len(col_labels), path or "text")
    return table_from_rows(col_labels, rows)


def load_table(path) -> RawDataTable:
    return parse_table(read_text(path), path=str(path))
