"""Block-plan files.

::

    kind: cognitive
    rows: A1 A2 A3 A4
    class: A1 A2
    block: blocks/first.mat
    class: A3 A4
    block: blocks/second.mat

Relational plans add a ``cols:`` header and give each class as
``class: <row labels> | <col labels>``. Block paths are relative to the plan
file.
"""
import logging

from ..exceptions import KindMismatchError, ParseError, ShapeMismatchError
from ..models import Block, BlockPlan, ConceptSpace, MapKind
from ..utils import read_text, resolve_path
from .matrix import load_matrix, load_valid_matrix
from .text import content_lines, header, split_tokens

logger = logging.getLogger(__name__)


def _space(value, number, path):
    labels = split_tokens(value)
    try:
        return ConceptSpace(tuple(labels))
    except ValueError as error:
        raise ParseError(str(error), number, path) from None


def parse_plan(text: str, path=None, load=load_matrix) -> BlockPlan:
    found = {}
    classes = []
    pending = None
    for number, line in content_lines(text):
        parsed = header(line)
        if parsed is None:
            raise ParseError("expected a 'key: value' line", number, path)
        key, value = parsed
        if key in ("kind", "rows", "cols"):
            if classes or pending:
                raise ParseError(f"'{key}:' must come before the first class", number, path)
            if key in found:
                raise ParseError(f"repeated header '{key}'", number, path)
            found[key] = (number, value.strip())
        elif key == "class":
            if pending is not None:
                raise ParseError("class without a block", pending[0], path)
            row_part, _, col_part = value.partition("|")
            pending = (number, _space(row_part, number, path), _space(col_part, number, path) if col_part.strip() else None)
        elif key == "block":
            if pending is None:
                raise ParseError("block without a class", number, path)
            classes.append((number, pending, resolve_path(value.strip(), path)))
            pending = None
        else:
            raise ParseError(f"unknown key '{key}'", number, path)
    if pending is not None:
        raise ParseError("class without a block", pending[0], path)
    if "kind" not in found:
        raise ParseError("missing 'kind:' header", None, path)
    try:
        kind = MapKind(found["kind"][1])
    except ValueError:
        raise ParseError(f"unknown kind '{found['kind'][1]}'", found["kind"][0], path) from None
    if "rows" not in found:
        raise ParseError("missing 'rows:' header", None, path)
    rows = _space(found["rows"][1], found["rows"][0], path)
    cols = _space(found["cols"][1], found["cols"][0], path) if "cols" in found else None
    if kind is not MapKind.COGNITIVE and cols is None:
        raise ParseError(f"missing 'cols:' header for a {kind.value} plan", None, path)
    if not classes:
        raise ParseError("plan has no blocks", None, path)
    blocks = []
    for number, (_, class_rows, class_cols), block_path in classes:
        matrix = load(block_path)
        if matrix.kind is not kind:
            raise KindMismatchError(f"block {block_path} is {matrix.kind.value}, plan is {kind.value}")
        try:
            blocks.append(Block(class_rows, matrix, class_cols))
        except ShapeMismatchError as error:
            raise ParseError(str(error), number, path) from None
        logger.debug("block %s on %s", block_path, " ".join(class_rows))
    return BlockPlan(tuple(blocks), False, kind, rows, cols)


def load_plan(path, load=load_matrix) -> BlockPlan:
    return parse_plan(read_text(path), path=str(path), load=load)


def load_valid_plan(path) -> BlockPlan:
    """Load a plan whose every block matrix passes validation."""
    return load_plan(path, load=load_valid_matrix)
