from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Sequence, Tuple

from ..algebra import OFF, TriState
from .ConceptSpace import ConceptSpace


@dataclass(frozen=True)
class StateVector:
    """On/off/indeterminate activation of every concept in a space.

    ``clamp`` holds the coordinates switched on at the start of a run; they are
    forced back on after every update. ``inhibited`` only marks coordinates a
    bipolar policy switched off, for display.
    """
    space: ConceptSpace
    states: Tuple[TriState, ...]
    clamp: FrozenSet[int] = frozenset()
    inhibited: FrozenSet[int] = field(default=frozenset(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "clamp", frozenset(self.clamp))
        object.__setattr__(self, "inhibited", frozenset(self.inhibited))
        if len(self.states) != len(self.space):
            raise ValueError(f"state has {len(self.states)} coordinates, space has {len(self.space)} concepts")
        for index in self.clamp:
            if not 0 <= index < len(self.space):
                raise ValueError(f"clamp index {index} out of range")
            if not self.states[index].is_on():
                raise ValueError(f"clamped concept '{self.space.labels[index]}' is not on")

    def __len__(self):
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __getitem__(self, label: str) -> TriState:
        return self.states[self.space.index(label)]

    @property
    def tokens(self) -> Tuple[str, ...]:
        return tuple("-1" if i in self.inhibited else s.token for i, s in enumerate(self.states))

    def __str__(self):
        return " ".join(self.tokens)

    def on_labels(self) -> Tuple[str, ...]:
        return tuple(label for label, s in zip(self.space, self.states) if s.is_on())

    def indet_labels(self) -> Tuple[str, ...]:
        return tuple(label for label, s in zip(self.space, self.states) if s.is_indet())

    def clamped_labels(self) -> Tuple[str, ...]:
        return tuple(self.space.labels[i] for i in sorted(self.clamp))

    def with_states(self, states: Sequence[TriState], inhibited: Iterable[int] = ()) -> 'StateVector':
        return StateVector(self.space, tuple(states), self.clamp, frozenset(inhibited))

    def to_json(self) -> dict:
        return {
            "labels": list(self.space.labels),
            "states": [s.token for s in self.states],
            "clamp": list(self.clamped_labels()),
        }

    @staticmethod
    def from_json(json: dict) -> 'StateVector':
        space = ConceptSpace(tuple(json["labels"]))
        return StateVector(
            space=space,
            states=tuple(TriState.from_token(t) for t in json["states"]),
            clamp=frozenset(space.indices(json.get("clamp", []))),
        )

    @staticmethod
    def from_tokens(space: ConceptSpace, tokens: Sequence[str], clamp: Iterable[int] = ()) -> 'StateVector':
        return StateVector(space, tuple(TriState.from_token(t) for t in tokens), frozenset(clamp))

    @staticmethod
    def off(space: ConceptSpace) -> 'StateVector':
        return StateVector(space, (OFF,) * len(space))
