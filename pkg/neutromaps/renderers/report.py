from typing import List, Optional

import numpy as np

from ..models import CetdProfile

DEFAULT_DECIMALS = 4


def _reals(values, decimals: int) -> str:
    return " ".join(f"{v:.{decimals}f}" for v in values)


def _ints(values) -> str:
    return " ".join(str(int(v)) for v in values)


def _labelled(profile: CetdProfile, matrix: np.ndarray, cell) -> List[str]:
    return [f"{label} {cell(row)}" for label, row in zip(profile.row_labels, matrix)]


def format_alpha(alpha: float) -> str:
    return f"{alpha:g}"


def render_report(profile: CetdProfile, decimals: Optional[int] = None) -> str:
    """Every stage of the profile, one section after another, in column order."""
    d = DEFAULT_DECIMALS if decimals is None else decimals
    lines = ["cols " + " ".join(profile.col_labels), "atd"]
    lines += _labelled(profile, profile.atd, lambda row: _reals(row, d))
    lines.append(f"mean {_reals(profile.means, d)}")
    lines.append(f"std {_reals(profile.stds, d)}")
    for alpha, bands in zip(profile.alphas, profile.rtds):
        lines.append(f"rtd alpha={format_alpha(alpha)}")
        lines += _labelled(profile, bands, _ints)
    lines.append("cetd")
    lines += _labelled(profile, profile.cetd, _ints)
    lines.append(f"row_sums {_ints(profile.row_sums)}")
    lines.append("peak " + " ".join(profile.peaks))
    return "\n".join(lines) + "\n"
