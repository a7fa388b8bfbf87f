from dataclasses import dataclass
from typing import Iterable, Tuple

import regex

from ..exceptions import UnknownLabelError


@dataclass(frozen=True)
class ConceptSpace:
    """Ordered, uniquely labelled concepts of one side of a map."""
    labels: Tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        seen = set()
        for label in labels:
            if not isinstance(label, str) or not label:
                raise ValueError(f"concept labels must be non-empty strings, got {label!r}")
            if regex.search(r"\s", label):
                raise ValueError(f"concept label '{label}' contains whitespace")
            if label in seen:
                raise ValueError(f"duplicate concept label '{label}'")
            seen.add(label)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self.labels

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabelError(label) from None

    def indices(self, labels: Iterable[str]) -> Tuple[int, ...]:
        return tuple(self.index(label) for label in labels)

    def shared(self, other: 'ConceptSpace') -> Tuple[str, ...]:
        return tuple(label for label in self.labels if label in other.labels)

    @staticmethod
    def of(*labels: str) -> 'ConceptSpace':
        return ConceptSpace(tuple(labels))
