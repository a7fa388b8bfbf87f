"""Building and checking connection matrices and seed states."""
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .algebra import NeutroValue, OFF, ON
from .exceptions import DuplicateEdgeError, SelfLoopError, UnknownLabelError
from .models import ConnectionMatrix, MapKind, Side, StateVector
from .models.ConnectionMatrix import SpaceLike, as_space

logger = logging.getLogger(__name__)

Edge = Tuple[str, str, NeutroValue]


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self):
        return f"violation {self.code}: {self.message}"


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, code: str, message: str):
        self.violations.append(Violation(code, message))

    def codes(self) -> List[str]:
        return [v.code for v in self.violations]


def validate(m: ConnectionMatrix) -> ValidationReport:
    """Structural checks for a matrix of the given kind. Never raises."""
    report = ValidationReport()
    if m.kind is MapKind.COGNITIVE:
        if not m.is_square:
            report.add("non-square", f"cognitive matrix is {m.shape[0]}x{m.shape[1]} or its row and column labels differ")
        else:
            for i, label in enumerate(m.row_space):
                value = m.value_at(i, i)
                if not value.is_zero():
                    report.add("diagonal", f"diagonal entry ({label}, {label}) is {value}, not 0")
    elif m.kind is MapKind.RELATIONAL:
        for label in m.row_space.shared(m.col_space):
            report.add("label-collision", f"label '{label}' is both a domain and a range concept")
    else:
        if m.has_indeterminacy():
            for row, col, value in m.edges():
                if not value.is_real():
                    report.add("indeterminate-entry", f"entry ({row}, {col}) is {value}; synaptic weights are integers")
        if m.scale is None:
            report.add("missing-scale", "bam matrix declares no scale")
        else:
            for row, col, value in m.edges():
                if abs(value.real) > m.scale:
                    report.add("out-of-scale", f"entry ({row}, {col}) = {value.real} outside [-{m.scale}, {m.scale}]")
    return report


def from_edges(kind: MapKind, rows: SpaceLike, cols: Optional[SpaceLike], edges: Iterable[Edge],
               scale: Optional[int] = None) -> ConnectionMatrix:
    """Place labelled edges into a zero matrix.

    Cognitive maps take ``cols=None`` and use ``rows`` for both sides.
    """
    kind = MapKind(kind)
    rows = as_space(rows)
    cols = rows if cols is None else as_space(cols)
    real = np.zeros((len(rows), len(cols)), dtype=np.int64)
    indet = np.zeros_like(real)
    seen = set()
    for source, target, value in edges:
        if source not in rows:
            raise UnknownLabelError(source, "rows")
        if target not in cols:
            raise UnknownLabelError(target, "columns")
        if (source, target) in seen:
            raise DuplicateEdgeError(f"edge {source} -> {target} given twice")
        if kind is MapKind.COGNITIVE and source == target:
            raise SelfLoopError(f"self-loop on {source}")
        seen.add((source, target))
        i, j = rows.index(source), cols.index(target)
        real[i, j] = value.real
        indet[i, j] = value.indet
    logger.debug("built %s matrix %dx%d from %d edges", kind.value, len(rows), len(cols), len(seen))
    return ConnectionMatrix(kind, rows, cols, real, indet, scale)


def zero_state(space: SpaceLike, on_labels: Sequence[str] = ()) -> StateVector:
    """All off except ``on_labels``, which are on and clamped."""
    space = as_space(space)
    clamp = frozenset(space.indices(on_labels))
    states = tuple(ON if i in clamp else OFF for i in range(len(space)))
    return StateVector(space, states, clamp)


def seed_side(m: ConnectionMatrix, labels: Sequence[str], side: Optional[Side] = None) -> Side:
    """Side of a rectangular map that ``labels`` seed.

    Without an explicit side the labels are looked up in the row space first,
    then in the column space.
    """
    if side is None:
        if all(label in m.row_space for label in labels):
            return Side.DOMAIN
        if all(label in m.col_space for label in labels):
            return Side.RANGE
        missing = next(label for label in labels if label not in m.row_space)
        raise UnknownLabelError(missing, "the domain or the range")
    space = m.row_space if side is Side.DOMAIN else m.col_space
    for label in labels:
        if label not in space:
            raise UnknownLabelError(label, f"the {side.value}")
    return side
