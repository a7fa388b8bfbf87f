"""Building larger maps out of expert pieces."""
import logging
from typing import Optional, Sequence, Union

import numpy as np

from .algebra import INT32_MAX, INT32_MIN, SIMPLE_POLICY, collapse, NeutroValue
from .exceptions import CoefficientOverflowError, KindMismatchError, ShapeMismatchError
from .models import Block, BlockPlan, ConnectionMatrix, LinkRule, MapKind
from .models.ConnectionMatrix import SpaceLike, as_space

logger = logging.getLogger(__name__)

Blocks = Union[BlockPlan, Sequence[Block]]


def combine(ms: Sequence[ConnectionMatrix]) -> ConnectionMatrix:
    """Entrywise sum of matrices over the same kind and spaces."""
    if not ms:
        raise ShapeMismatchError("nothing to combine")
    first = ms[0]
    for number, m in enumerate(ms[1:], start=2):
        if m.kind is not first.kind:
            raise KindMismatchError(f"matrix {number} is {m.kind.value}, matrix 1 is {first.kind.value}")
        if m.row_space != first.row_space or m.col_space != first.col_space:
            raise ShapeMismatchError(f"matrix {number} is not over the concepts of matrix 1")
    real = np.sum([m.real for m in ms], axis=0)
    indet = np.sum([m.indet for m in ms], axis=0)
    logger.debug("combined %d %s matrices of shape %s", len(ms), first.kind.value, first.shape)
    return first.with_entries(real, indet)


def transpose(m: ConnectionMatrix) -> ConnectionMatrix:
    return m.transpose()


def _as_plan(blocks: Blocks, overlap_allowed: bool) -> BlockPlan:
    blocks = blocks.blocks if isinstance(blocks, BlockPlan) else tuple(blocks)
    return BlockPlan(blocks, overlap_allowed)


def _assemble(plan: BlockPlan, rows: SpaceLike, cols: Optional[SpaceLike]) -> ConnectionMatrix:
    rows = as_space(rows)
    cols = rows if cols is None else as_space(cols)
    plan.validate(rows, cols)
    kind = plan.blocks[0].matrix.kind
    real = np.zeros((len(rows), len(cols)), dtype=np.int64)
    indet = np.zeros_like(real)
    for block in plan.blocks:
        at = np.ix_(rows.indices(block.rows), cols.indices(block.col_labels))
        real[at] += block.matrix.real
        indet[at] += block.matrix.indet
    scales = [b.matrix.scale for b in plan.blocks if b.matrix.scale is not None]
    logger.debug("assembled %d blocks into a %dx%d %s matrix", len(plan.blocks), len(rows), len(cols), kind.value)
    return ConnectionMatrix(kind, rows, cols, real, indet, max(scales) if scales else None)


def assemble_disjoint(blocks: Blocks, rows: SpaceLike, cols: Optional[SpaceLike] = None) -> ConnectionMatrix:
    """Place sub-matrices on pairwise disjoint classes, zeros elsewhere."""
    return _assemble(_as_plan(blocks, False), rows, cols)


def assemble_overlap(blocks: Blocks, rows: SpaceLike, cols: Optional[SpaceLike] = None) -> ConnectionMatrix:
    """Place sub-matrices on possibly overlapping classes; shared entries add up."""
    return _assemble(_as_plan(blocks, True), rows, cols)


def _link_plane(real: np.ndarray, indet: np.ndarray, rule: LinkRule):
    if rule is LinkRule.REAL_FIRST:
        on = real >= 1
        unknown = ~on & (indet >= 1)
    elif rule is LinkRule.INDET_FIRST:
        unknown = indet >= 1
        on = ~unknown & (real >= 1)
    else:
        states = [[collapse(NeutroValue(int(a), int(b)), SIMPLE_POLICY) for a, b in zip(ra, rb)]
                  for ra, rb in zip(real, indet)]
        on = np.array([[s.is_on() for s in line] for line in states], dtype=bool)
        unknown = np.array([[s.is_indet() for s in line] for line in states], dtype=bool)
    return on.astype(np.int64), unknown.astype(np.int64)


def link(a: ConnectionMatrix, b: ConnectionMatrix, rule: LinkRule = LinkRule.REAL_FIRST) -> ConnectionMatrix:
    """Relate the domain of ``a`` to the range of ``b`` through their shared middle space.

    The neutro product is collapsed entrywise to 0, 1 or I by ``rule``.
    """
    rule = LinkRule(rule)
    for m in (a, b):
        if m.kind is not MapKind.RELATIONAL:
            raise KindMismatchError(f"link needs relational matrices, got {m.kind.value}")
    if a.col_space != b.row_space:
        raise ShapeMismatchError("the columns of the first matrix are not the rows of the second")
    real = a.real @ b.real
    indet = a.real @ b.indet + a.indet @ b.real + a.indet @ b.indet
    for plane in (real, indet):
        if plane.size and (plane.min() < INT32_MIN or plane.max() > INT32_MAX):
            raise CoefficientOverflowError("linked product outside the signed 32-bit range")
    on, unknown = _link_plane(real, indet, rule)
    logger.debug("linked %s by %s under %s", a.shape, b.shape, rule.value)
    return ConnectionMatrix(MapKind.RELATIONAL, a.row_space, b.col_space, on, unknown)
