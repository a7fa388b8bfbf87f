"""Average, refined and cumulative time-dependent data profiles.

Counts are turned into per-year averages (ATD), each column is banded around
its mean into -1/0/1 for a given alpha (RTD), and the bands are summed over an
alpha sweep (CETD) whose row sums rank the row groups.
"""
import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from .exceptions import ScenarioError, ShapeMismatchError
from .models import CetdParams, CetdProfile, RawDataTable
from .models.RawDataTable import TABULATION_DECIMALS

logger = logging.getLogger(__name__)


def _rounded(values: np.ndarray, decimals: Optional[int]) -> np.ndarray:
    if decimals is None:
        return values
    # Python's round is correctly rounded on the binary value, as %.Nf printing is
    return np.vectorize(lambda v: round(float(v), decimals), otypes=[np.float64])(values)


def atd(raw: RawDataTable, decimals: Optional[int] = None) -> np.ndarray:
    return _rounded(raw.counts / raw.intervals[:, np.newaxis], decimals)


def column_stats(atd_matrix: np.ndarray, decimals: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    """Column means and population standard deviations."""
    atd_matrix = np.asarray(atd_matrix, dtype=np.float64)
    if atd_matrix.ndim != 2 or atd_matrix.shape[0] == 0:
        raise ShapeMismatchError("column statistics need at least one row")
    m = atd_matrix.shape[0]
    means = atd_matrix.sum(axis=0) / m
    stds = np.sqrt(((atd_matrix - means) ** 2).sum(axis=0) / m)
    return _rounded(means, decimals), _rounded(stds, decimals)


def rtd(atd_matrix: np.ndarray, stats: Tuple[np.ndarray, np.ndarray], alpha: float) -> np.ndarray:
    """Band every entry: -1 at or below mean - alpha*std, 1 above mean + alpha*std, else 0."""
    if not 0.0 <= alpha <= 1.0:
        raise ScenarioError(f"alpha {alpha} outside [0, 1]")
    means, stds = stats
    low = means - alpha * stds
    high = means + alpha * stds
    bands = np.where(atd_matrix <= low, -1, np.where(atd_matrix > high, 1, 0)).astype(np.int64)
    logger.debug("alpha=%s: %d low, %d mid, %d high", alpha,
                 int((bands == -1).sum()), int((bands == 0).sum()), int((bands == 1).sum()))
    return bands


def cetd_profile(raw: RawDataTable, alphas: Sequence[float],
                 decimals: Optional[int] = TABULATION_DECIMALS) -> CetdProfile:
    params = CetdParams(tuple(alphas), decimals)
    averages = atd(raw, params.decimals)
    stats = column_stats(averages, params.decimals)
    rtds = tuple(rtd(averages, stats, alpha) for alpha in params.alphas)
    cetd = np.sum(rtds, axis=0).astype(np.int64)
    row_sums = tuple(int(s) for s in cetd.sum(axis=1))
    best = max(row_sums)
    peaks = tuple(label for label, total in zip(raw.row_labels, row_sums) if total == best)
    logger.info("row sums %s, peak %s", row_sums, ", ".join(peaks))
    return CetdProfile(
        row_labels=raw.row_labels,
        col_labels=raw.col_labels,
        alphas=params.alphas,
        atd=averages,
        means=stats[0],
        stds=stats[1],
        rtds=rtds,
        cetd=cetd,
        row_sums=row_sums,
        peaks=peaks,
    )
