import enum
from dataclasses import dataclass
from typing import Optional, Tuple

from ..exceptions import BlockOverlapError, KindMismatchError, ShapeMismatchError, UnknownLabelError
from .ConceptSpace import ConceptSpace
from .ConnectionMatrix import ConnectionMatrix, MapKind, SpaceLike, as_space


class LinkRule(enum.Enum):
    REAL_FIRST = "real-first"
    INDET_FIRST = "indet-first"
    COLLAPSE = "collapse"


class ComposeOp(enum.Enum):
    COMBINE = "combine"
    DISJOINT = "disjoint"
    OVERLAP = "overlap"
    LINK = "link"


@dataclass(frozen=True)
class Block:
    """A sub-matrix placed on one class of the target space.

    Entries are placed positionally: row i of ``matrix`` lands on ``rows[i]``.
    ``cols`` is only given for relational plans; cognitive blocks are square
    over ``rows``.
    """
    rows: ConceptSpace
    matrix: ConnectionMatrix
    cols: Optional[ConceptSpace] = None

    def __post_init__(self):
        object.__setattr__(self, "rows", as_space(self.rows))
        if self.cols is not None:
            object.__setattr__(self, "cols", as_space(self.cols))
        expected = (len(self.rows), len(self.col_labels))
        if self.matrix.shape != expected:
            raise ShapeMismatchError(f"block over {expected[0]}x{expected[1]} class has a {self.matrix.shape[0]}x{self.matrix.shape[1]} matrix")

    @property
    def col_labels(self) -> ConceptSpace:
        return self.rows if self.cols is None else self.cols


@dataclass(frozen=True)
class BlockPlan:
    """Blocks to assemble, with the target spaces when read from a plan file."""
    blocks: Tuple[Block, ...]
    overlap_allowed: bool = False
    kind: Optional[MapKind] = None
    rows: Optional[ConceptSpace] = None
    cols: Optional[ConceptSpace] = None

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if not self.blocks:
            raise ShapeMismatchError("a block plan needs at least one block")

    def validate(self, rows: SpaceLike, cols: Optional[SpaceLike] = None):
        """Raise when a block does not fit the target spaces.

        Disjoint plans also need pairwise disjoint row classes (and column
        classes, for relational plans).
        """
        rows = as_space(rows)
        cols = rows if cols is None else as_space(cols)
        kinds = {block.matrix.kind for block in self.blocks}
        if len(kinds) > 1:
            raise KindMismatchError(f"blocks mix kinds: {', '.join(sorted(k.value for k in kinds))}")
        for block in self.blocks:
            for label in block.rows:
                if label not in rows:
                    raise UnknownLabelError(label, "plan rows")
            for label in block.col_labels:
                if label not in cols:
                    raise UnknownLabelError(label, "plan columns")
        if self.overlap_allowed:
            return
        for what, classes in (("row", [b.rows for b in self.blocks]), ("column", [b.col_labels for b in self.blocks])):
            seen = {}
            for number, labels in enumerate(classes, start=1):
                for label in labels:
                    if label in seen and seen[label] != number:
                        raise BlockOverlapError(f"{what} label '{label}' is in classes {seen[label]} and {number}")
                    seen[label] = number

    def is_equal_sized(self) -> bool:
        return len({block.matrix.shape for block in self.blocks}) == 1
