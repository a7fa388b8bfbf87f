import enum
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..algebra import INT32_MAX, INT32_MIN, NeutroValue, TriState
from ..exceptions import CoefficientOverflowError, ShapeMismatchError
from .ConceptSpace import ConceptSpace


class MapKind(enum.Enum):
    COGNITIVE = "cognitive"
    RELATIONAL = "relational"
    BAM = "bam"


SpaceLike = Union[ConceptSpace, Sequence[str]]


def as_space(space: SpaceLike) -> ConceptSpace:
    return space if isinstance(space, ConceptSpace) else ConceptSpace(tuple(space))


def _frozen_plane(values, shape, what):
    plane = np.array(values, dtype=np.int64)
    if plane.shape != shape:
        raise ShapeMismatchError(f"{what} plane has shape {plane.shape}, spaces need {shape}")
    if plane.size and (plane.min() < INT32_MIN or plane.max() > INT32_MAX):
        raise CoefficientOverflowError(f"{what} coefficients outside the signed 32-bit range")
    plane.setflags(write=False)
    return plane


@dataclass(frozen=True, eq=False)
class ConnectionMatrix:
    """Dense labelled matrix of a + bI entries.

    Entries live in two integer planes: ``real`` holds a and ``indet`` holds b.
    Both planes are read-only.
    """
    kind: MapKind
    row_space: ConceptSpace
    col_space: ConceptSpace
    real: np.ndarray
    indet: Optional[np.ndarray] = None
    scale: Optional[int] = None

    def __post_init__(self):
        kind = MapKind(self.kind)
        rows, cols = as_space(self.row_space), as_space(self.col_space)
        if not len(rows) or not len(cols):
            raise ShapeMismatchError("a connection matrix needs at least one row and one column concept")
        shape = (len(rows), len(cols))
        real = _frozen_plane(self.real, shape, "real")
        indet = _frozen_plane(np.zeros(shape, dtype=np.int64) if self.indet is None else self.indet, shape, "I")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "row_space", rows)
        object.__setattr__(self, "col_space", cols)
        object.__setattr__(self, "real", real)
        object.__setattr__(self, "indet", indet)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.real.shape

    @property
    def is_square(self) -> bool:
        return self.row_space == self.col_space

    def value_at(self, i: int, j: int) -> NeutroValue:
        return NeutroValue(int(self.real[i, j]), int(self.indet[i, j]))

    def entry(self, row: str, col: str) -> NeutroValue:
        return self.value_at(self.row_space.index(row), self.col_space.index(col))

    def grid(self) -> Tuple[Tuple[NeutroValue, ...], ...]:
        n, m = self.shape
        return tuple(tuple(self.value_at(i, j) for j in range(m)) for i in range(n))

    def edges(self) -> List[Tuple[str, str, NeutroValue]]:
        """Nonzero entries in row-major order."""
        nonzero = (self.real != 0) | (self.indet != 0)
        return [
            (self.row_space.labels[i], self.col_space.labels[j], self.value_at(i, j))
            for i, j in zip(*np.nonzero(nonzero))
        ]

    def has_indeterminacy(self) -> bool:
        return bool(self.indet.any())

    def transpose(self) -> 'ConnectionMatrix':
        return ConnectionMatrix(self.kind, self.col_space, self.row_space, self.real.T, self.indet.T, self.scale)

    def propagate(self, states: Sequence[TriState], transpose: bool = False) -> List[NeutroValue]:
        """Accumulate ``states`` through the matrix without collapsing.

        With ``transpose`` the states sit on the column space and the result on
        the row space.
        """
        real, indet = (self.real.T, self.indet.T) if transpose else (self.real, self.indet)
        if len(states) != real.shape[0]:
            raise ShapeMismatchError(f"state of length {len(states)} against {real.shape[0]} concepts")
        on = np.array([s.is_on() for s in states], dtype=np.int64)
        unknown = np.array([s.is_indet() for s in states], dtype=np.int64)
        raw_real = on @ real
        raw_indet = on @ indet + unknown @ real + unknown @ indet
        for plane, what in ((raw_real, "real"), (raw_indet, "I")):
            if plane.size and (plane.min() < INT32_MIN or plane.max() > INT32_MAX):
                raise CoefficientOverflowError(f"accumulated {what} coefficient outside the signed 32-bit range")
        return [NeutroValue(int(a), int(b)) for a, b in zip(raw_real, raw_indet)]

    def with_entries(self, real, indet) -> 'ConnectionMatrix':
        return ConnectionMatrix(self.kind, self.row_space, self.col_space, real, indet, self.scale)

    def __neg__(self):
        return self.with_entries(-self.real, -self.indet)

    def __eq__(self, other):
        if not isinstance(other, ConnectionMatrix):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.row_space == other.row_space
            and self.col_space == other.col_space
            and self.scale == other.scale
            and np.array_equal(self.real, other.real)
            and np.array_equal(self.indet, other.indet)
        )

    __hash__ = None

    def __repr__(self):
        return f"ConnectionMatrix(kind={self.kind.value}, shape={self.shape}, rows={list(self.row_space)}, cols={list(self.col_space)})"

    @staticmethod
    def zeros(kind: MapKind, rows: SpaceLike, cols: Optional[SpaceLike] = None, scale: Optional[int] = None) -> 'ConnectionMatrix':
        rows = as_space(rows)
        cols = rows if cols is None else as_space(cols)
        return ConnectionMatrix(kind, rows, cols, np.zeros((len(rows), len(cols)), dtype=np.int64), None, scale)

    @staticmethod
    def from_grid(kind: MapKind, rows: SpaceLike, cols: Optional[SpaceLike], grid: Sequence[Sequence[NeutroValue]],
                  scale: Optional[int] = None) -> 'ConnectionMatrix':
        rows = as_space(rows)
        cols = rows if cols is None else as_space(cols)
        if len(grid) != len(rows) or any(len(line) != len(cols) for line in grid):
            raise ShapeMismatchError(f"grid does not have {len(rows)} rows of {len(cols)} entries")
        real = [[v.real for v in line] for line in grid]
        indet = [[v.indet for v in line] for line in grid]
        return ConnectionMatrix(kind, rows, cols, real, indet, scale)
