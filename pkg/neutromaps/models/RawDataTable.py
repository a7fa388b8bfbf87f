from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..exceptions import ScenarioError, ShapeMismatchError

# averages and statistics are tabulated to two places before banding
TABULATION_DECIMALS = 2


def _readonly(values, dtype):
    array = np.array(values, dtype=dtype)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class RawDataTable:
    """Counts per row group and attribute, each row observed over an interval."""
    row_labels: Tuple[str, ...]
    col_labels: Tuple[str, ...]
    counts: np.ndarray
    intervals: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        counts = _readonly(self.counts, np.float64)
        intervals = _readonly(self.intervals, np.float64)
        shape = (len(self.row_labels), len(self.col_labels))
        if not shape[0]:
            raise ShapeMismatchError("a raw data table needs at least one row")
        if counts.shape != shape:
            raise ShapeMismatchError(f"counts have shape {counts.shape}, labels need {shape}")
        if intervals.shape != (shape[0],):
            raise ShapeMismatchError(f"{intervals.size} intervals for {shape[0]} rows")
        if (counts < 0).any():
            raise ValueError("counts must be non-negative")
        if (intervals <= 0).any():
            raise ValueError("every interval must be positive")
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "intervals", intervals)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.counts.shape

    def scaled(self, factor: float) -> 'RawDataTable':
        return RawDataTable(self.row_labels, self.col_labels, self.counts * factor, self.intervals * factor)

    def with_zero_column(self, label: str) -> 'RawDataTable':
        counts = np.hstack([self.counts, np.zeros((self.shape[0], 1))])
        return RawDataTable(self.row_labels, self.col_labels + (label,), counts, self.intervals)


@dataclass(frozen=True)
class CetdParams:
    """Alpha sweep and tabulation precision; ``decimals=None`` bands unrounded values."""
    alphas: Tuple[float, ...]
    decimals: Optional[int] = TABULATION_DECIMALS

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        if not self.alphas:
            raise ScenarioError("at least one alpha is needed")
        for alpha in self.alphas:
            if not 0.0 <= alpha <= 1.0:
                raise ScenarioError(f"alpha {alpha} outside [0, 1]")
        if self.decimals is not None and self.decimals < 0:
            raise ScenarioError(f"decimals must be non-negative, got {self.decimals}")


@dataclass(frozen=True, eq=False)
class CetdProfile:
    """Everything the profiling chain computes for one table and alpha sweep."""
    row_labels: Tuple[str, ...]
    col_labels: Tuple[str, ...]
    alphas: Tuple[float, ...]
    atd: np.ndarray
    means: np.ndarray
    stds: np.ndarray
    rtds: Tuple[np.ndarray, ...]
    cetd: np.ndarray
    row_sums: Tuple[int, ...]
    peaks: Tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "rows": list(self.row_labels),
            "cols": list(self.col_labels),
            "alphas": list(self.alphas),
            "atd": self.atd.tolist(),
            "means": self.means.tolist(),
            "stds": self.stds.tolist(),
            "rtds": [r.tolist() for r in self.rtds],
            "cetd": self.cetd.tolist(),
            "row_sums": list(self.row_sums),
            "peaks": list(self.peaks),
        }

    @staticmethod
    def from_json(json: dict) -> 'CetdProfile':
        return CetdProfile(
            row_labels=tuple(json["rows"]),
            col_labels=tuple(json["cols"]),
            alphas=tuple(json["alphas"]),
            atd=np.array(json["atd"], dtype=np.float64),
            means=np.array(json["means"], dtype=np.float64),
            stds=np.array(json["stds"], dtype=np.float64),
            rtds=tuple(np.array(r, dtype=np.int64) for r in json["rtds"]),
            cetd=np.array(json["cetd"], dtype=np.int64),
            row_sums=tuple(json["row_sums"]),
            peaks=tuple(json["peaks"]),
        )


def table_from_rows(col_labels: Sequence[str], rows: Sequence[Tuple[str, float, Sequence[float]]]) -> RawDataTable:
    """Build a table from ``(label, interval, counts)`` rows."""
    return RawDataTable(
        row_labels=tuple(label for label, _, _ in rows),
        col_labels=tuple(col_labels),
        counts=[list(counts) for _, _, counts in rows],
        intervals=[interval for _, interval, _ in rows],
    )
