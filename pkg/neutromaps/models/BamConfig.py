import enum
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from ..algebra import TriState
from ..exceptions import ShapeMismatchError
from .ConnectionMatrix import ConnectionMatrix


class SignalMode(enum.Enum):
    BINARY = "binary"
    BIPOLAR = "bipolar"


@dataclass(frozen=True)
class BamConfig:
    """Neuron thresholds and signal mode of a bidirectional associative memory.

    ``thresholds_u`` belong to the row field, ``thresholds_v`` to the column
    field. ``initial_v`` overrides the all-off starting signal of the column
    field.
    """
    thresholds_u: Tuple[int, ...]
    thresholds_v: Tuple[int, ...]
    mode: SignalMode = SignalMode.BINARY
    initial_v: Optional[Tuple[TriState, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "thresholds_u", tuple(int(t) for t in self.thresholds_u))
        object.__setattr__(self, "thresholds_v", tuple(int(t) for t in self.thresholds_v))
        object.__setattr__(self, "mode", SignalMode(self.mode))
        if self.initial_v is not None:
            object.__setattr__(self, "initial_v", tuple(self.initial_v))

    def check(self, m: ConnectionMatrix):
        n, p = m.shape
        if len(self.thresholds_u) != n:
            raise ShapeMismatchError(f"{len(self.thresholds_u)} row-field thresholds for {n} neurons")
        if len(self.thresholds_v) != p:
            raise ShapeMismatchError(f"{len(self.thresholds_v)} column-field thresholds for {p} neurons")
        if self.initial_v is not None and len(self.initial_v) != p:
            raise ShapeMismatchError(f"initial column signal has {len(self.initial_v)} entries for {p} neurons")

    def to_json(self) -> dict:
        return {
            "thresholds_u": list(self.thresholds_u),
            "thresholds_v": list(self.thresholds_v),
            "mode": self.mode.value,
            "initial_v": None if self.initial_v is None else [s.token for s in self.initial_v],
        }

    @staticmethod
    def from_json(json: dict) -> 'BamConfig':
        initial_v = json.get("initial_v")
        return BamConfig(
            thresholds_u=tuple(json["thresholds_u"]),
            thresholds_v=tuple(json["thresholds_v"]),
            mode=SignalMode(json.get("mode", "binary")),
            initial_v=None if initial_v is None else tuple(TriState.from_token(t) for t in initial_v),
        )

    @staticmethod
    def zeros(m: ConnectionMatrix, mode: SignalMode = SignalMode.BINARY,
              initial_v: Optional[Sequence[TriState]] = None) -> 'BamConfig':
        n, p = m.shape
        return BamConfig((0,) * n, (0,) * p, mode, None if initial_v is None else tuple(initial_v))
