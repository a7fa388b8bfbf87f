import enum
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from ..algebra import SIMPLE_POLICY, ThresholdPolicy
from .ConceptSpace import ConceptSpace
from .StateVector import StateVector

Pair = Tuple[StateVector, StateVector]
Sums = Optional[Tuple[int, ...]]


class PatternKind(enum.Enum):
    FIXED = "fixed"
    CYCLE = "cycle"


class Side(enum.Enum):
    DOMAIN = "domain"
    RANGE = "range"


def _cycle_start(length: int, trace_length: int) -> int:
    # the last trace entry repeats the first state of the cycle
    return trace_length - 1 - length


@dataclass(frozen=True)
class HiddenPattern:
    """Equilibrium of a cognitive run.

    ``trace`` starts with the seed state at t=0 and ends with the first
    revisited state, so ``iterations == len(trace) - 1``. ``states`` is the
    fixed point or the repeating cycle in visiting order.
    """
    kind: PatternKind
    states: Tuple[StateVector, ...]
    trace: Tuple[StateVector, ...]
    iterations: int
    policy: ThresholdPolicy = SIMPLE_POLICY

    def __post_init__(self):
        if self.kind is PatternKind.FIXED and len(self.states) != 1:
            raise ValueError("a fixed point has exactly one state")
        if self.kind is PatternKind.CYCLE and len(self.states) < 2:
            raise ValueError("a limit cycle has at least two states")

    @property
    def length(self) -> int:
        return len(self.states)

    @property
    def terminal(self) -> StateVector:
        return self.states[-1]

    def is_fixed_point(self) -> bool:
        return self.kind is PatternKind.FIXED

    def to_json(self) -> dict:
        return {
            "type": "cognitive",
            "pattern": self.kind.value,
            "length": self.length,
            "iterations": self.iterations,
            "labels": list(self.trace[0].space.labels),
            "clamp": list(self.trace[0].clamped_labels()),
            "policy": self.policy.to_json(),
            "states": [list(s.tokens) for s in self.states],
            "trace": [list(s.tokens) for s in self.trace],
        }

    @staticmethod
    def from_json(json: dict) -> 'HiddenPattern':
        space = ConceptSpace(tuple(json["labels"]))
        clamp = space.indices(json.get("clamp", []))
        trace = tuple(StateVector.from_tokens(space, _binary(tokens), clamp) for tokens in json["trace"])
        length = json["length"]
        start = _cycle_start(length, len(trace))
        return HiddenPattern(
            kind=PatternKind(json["pattern"]),
            states=trace[start:start + length],
            trace=trace,
            iterations=json.get("iterations", len(trace) - 1),
            policy=ThresholdPolicy.from_json(json.get("policy", {})),
        )


@dataclass(frozen=True)
class RelationalPattern:
    """Equilibrium of a relational or BAM run, as (domain, range) pairs.

    BAM runs have no policy and no seeded side; instead ``activations`` holds
    the integer sums behind every trace entry, ``None`` where a side was not
    computed from a product (the t=0 range field).
    """
    kind: PatternKind
    pairs: Tuple[Pair, ...]
    trace: Tuple[Pair, ...]
    iterations: int
    policy: Optional[ThresholdPolicy] = None
    seeded_side: Optional[Side] = None
    activations: Tuple[Tuple[Sums, Sums], ...] = ()

    def __post_init__(self):
        if self.kind is PatternKind.FIXED and len(self.pairs) != 1:
            raise ValueError("a fixed pair is exactly one pair")
        if self.kind is PatternKind.CYCLE and len(self.pairs) < 2:
            raise ValueError("a pair cycle has at least two pairs")

    @property
    def length(self) -> int:
        return len(self.pairs)

    @property
    def domain_pattern(self) -> Tuple[StateVector, ...]:
        return tuple(x for x, _ in self.pairs)

    @property
    def range_pattern(self) -> Tuple[StateVector, ...]:
        return tuple(y for _, y in self.pairs)

    @property
    def terminal(self) -> Pair:
        return self.pairs[-1]

    def is_fixed_point(self) -> bool:
        return self.kind is PatternKind.FIXED

    def is_bam(self) -> bool:
        return self.policy is None

    def to_json(self) -> dict:
        x0, y0 = self.trace[0]
        json = {
            "type": "bam" if self.is_bam() else "relational",
            "pattern": self.kind.value,
            "length": self.length,
            "iterations": self.iterations,
            "domain_labels": list(x0.space.labels),
            "range_labels": list(y0.space.labels),
            "pairs": [{"domain": list(x.tokens), "range": list(y.tokens)} for x, y in self.pairs],
            "trace": [{"domain": list(x.tokens), "range": list(y.tokens)} for x, y in self.trace],
        }
        if self.policy is not None:
            json["policy"] = self.policy.to_json()
        if self.seeded_side is not None:
            seeded = x0 if self.seeded_side is Side.DOMAIN else y0
            json["seeded_side"] = self.seeded_side.value
            json["clamp"] = list(seeded.clamped_labels())
        if self.activations:
            json["activations"] = [
                {"domain": None if x is None else list(x), "range": None if y is None else list(y)}
                for x, y in self.activations
            ]
        return json

    @staticmethod
    def from_json(json: dict) -> 'RelationalPattern':
        rows = ConceptSpace(tuple(json["domain_labels"]))
        cols = ConceptSpace(tuple(json["range_labels"]))
        side = Side(json["seeded_side"]) if "seeded_side" in json else None
        x_clamp = rows.indices(json.get("clamp", [])) if side is Side.DOMAIN else ()
        y_clamp = cols.indices(json.get("clamp", [])) if side is Side.RANGE else ()
        trace = tuple(
            (StateVector.from_tokens(rows, _binary(entry["domain"]), x_clamp),
             StateVector.from_tokens(cols, _binary(entry["range"]), y_clamp))
            for entry in json["trace"]
        )
        length = json["length"]
        start = _cycle_start(length, len(trace))
        return RelationalPattern(
            kind=PatternKind(json["pattern"]),
            pairs=trace[start:start + length],
            trace=trace,
            iterations=json.get("iterations", len(trace) - 1),
            policy=ThresholdPolicy.from_json(json["policy"]) if "policy" in json else None,
            seeded_side=side,
            activations=tuple(
                (_sums(entry["domain"]), _sums(entry["range"])) for entry in json.get("activations", [])
            ),
        )


def _binary(tokens: Sequence[str]) -> Sequence[str]:
    # inhibited coordinates are stored as -1 and read back as off
    return ["0" if t == "-1" else t for t in tokens]


def _sums(values) -> Sums:
    return None if values is None else tuple(values)
