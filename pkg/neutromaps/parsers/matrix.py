"""Matrix files.

::

    # comment
    kind: relational
    rows: D1 D2
    cols: R1 R2 R3
    1 0 I
    0 2+I 0

``cols`` is required for relational and bam matrices, ``scale`` is only
accepted for bam matrices.
"""
import logging

from ..algebra import parse_token
from ..concepts import validate
from ..exceptions import ParseError, ValidationFailed
from ..models import ConnectionMatrix, MapKind
from ..utils import read_text
from .text import content_lines, header, split_tokens

logger = logging.getLogger(__name__)

HEADER_KEYS = ("kind", "rows", "cols", "scale")


def _labels(value, number, path):
    labels = split_tokens(value)
    if not labels:
        raise ParseError("no labels given", number, path)
    if len(set(labels)) != len(labels):
        duplicate = next(label for label in labels if labels.count(label) > 1)
        raise ParseError(f"duplicate label '{duplicate}'", number, path)
    return tuple(labels)


def _read_header(lines, path):
    """Consume header lines; return the header dict and the remaining lines."""
    found = {}
    body = []
    for number, line in lines:
        parsed = None if body else header(line)
        if parsed is None:
            body.append((number, line))
            continue
        key, value = parsed
        if key not in HEADER_KEYS:
            raise ParseError(f"unknown header '{key}'", number, path)
        if key in found:
            raise ParseError(f"repeated header '{key}'", number, path)
        found[key] = (number, value.strip())
    return found, body


def parse_matrix(text: str, path=None) -> ConnectionMatrix:
    found, body = _read_header(content_lines(text), path)
    if "kind" not in found:
        raise ParseError("missing 'kind:' header", 1, path)
    number, value = found["kind"]
    try:
        kind = MapKind(value)
    except ValueError:
        raise ParseError(f"unknown kind '{value}'", number, path) from None
    if "rows" not in found:
        raise ParseError("missing 'rows:' header", number, path)
    rows = _labels(found["rows"][1], found["rows"][0], path)
    if kind is MapKind.COGNITIVE:
        cols = rows
        if "cols" in found and _labels(found["cols"][1], found["cols"][0], path) != rows:
            raise ParseError("cognitive matrices have the same rows and cols", found["cols"][0], path)
    elif "cols" in found:
        cols = _labels(found["cols"][1], found["cols"][0], path)
    else:
        raise ParseError(f"missing 'cols:' header for a {kind.value} matrix", number, path)
    scale = None
    if "scale" in found:
        number, value = found["scale"]
        if kind is not MapKind.BAM:
            raise ParseError("only bam matrices declare a scale", number, path)
        try:
            scale = int(value)
        except ValueError:
            raise ParseError(f"scale '{value}' is not an integer", number, path) from None
        if scale < 0:
            raise ParseError(f"scale {scale} is negative", number, path)
    if len(body) != len(rows):
        last = body[-1][0] if body else number
        raise ParseError(f"expected {len(rows)} matrix rows, found {len(body)}", last, path)
    grid = []
    for number, line in body:
        tokens = split_tokens(line)
        if len(tokens) != len(cols):
            raise ParseError(f"expected {len(cols)} entries, found {len(tokens)}", number, path)
        try:
            grid.append([parse_token(token) for token in tokens])
        except ParseError as error:
            raise ParseError(str(error), number, path) from None
    logger.debug("parsed %s matrix %dx%d from %s", kind.value, len(rows), len(cols), path or "text")
    return ConnectionMatrix.from_grid(kind, rows, None if kind is MapKind.COGNITIVE else cols, grid, scale)


def load_matrix(path) -> ConnectionMatrix:
    return parse_matrix(read_text(path), path=str(path))


def load_valid_matrix(path) -> ConnectionMatrix:
    """Load a matrix and raise :class:`ValidationFailed` on any structural violation."""
    matrix = load_matrix(path)
    report = validate(matrix)
    if not report.passed:
        raise ValidationFailed(report, path)
    return matrix
