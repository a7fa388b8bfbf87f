import json
from typing import Dict, List, Optional, Sequence, Union

from ..models import HiddenPattern, RelationalPattern

Pattern = Union[HiddenPattern, RelationalPattern]


def _sums(values: Optional[Sequence[int]]) -> str:
    return "" if values is None else " sum=" + ",".join(str(v) for v in values)


def _steps(pattern: Pattern) -> List[str]:
    if isinstance(pattern, HiddenPattern):
        return [f"t={t} {state}" for t, state in enumerate(pattern.trace)]
    lines = []
    for t, (x, y) in enumerate(pattern.trace):
        x_sums, y_sums = pattern.activations[t] if pattern.activations else (None, None)
        lines.append(f"t={t} domain {x}{_sums(x_sums)}")
        lines.append(f"t={t} range {y}{_sums(y_sums)}")
    return lines


def _outcome(pattern: Pattern) -> List[str]:
    lines = [f"pattern={pattern.kind.value} len={pattern.length}"]
    if isinstance(pattern, HiddenPattern):
        lines += [f"state {state}" for state in pattern.states]
    else:
        for x, y in pattern.pairs:
            lines += [f"domain {x}", f"range {y}"]
    return lines


def render_trace(pattern: Pattern, steps: bool = True) -> str:
    """Trace lines (when ``steps``), then the pattern line and its terminal states."""
    lines = (_steps(pattern) if steps else []) + _outcome(pattern)
    return "\n".join(lines) + "\n"


def render_summary(pattern: Pattern) -> str:
    return json.dumps(pattern.to_json(), sort_keys=True, ensure_ascii=False) + "\n"


def render_sweep(patterns: Dict[str, Pattern]) -> str:
    lines = []
    for label, pattern in patterns.items():
        lines.append(f"seed {label}")
        lines += _outcome(pattern)
    return "\n".join(lines) + "\n"
