"""Arithmetic over values of the form a + bI, where I is the indeterminate with I * I = I.

The values here are the edge weights and dot-product accumulations of every
map. They are stored exactly as computed; turning an accumulation into an
on/off/indeterminate state is the job of :func:`collapse`.
"""
import enum
from dataclasses import dataclass
from typing import Sequence

import regex

from .exceptions import CoefficientOverflowError, ParseError, ScenarioError

INT32_MIN = -2 ** 31
INT32_MAX = 2 ** 31 - 1

# -1, 0, 3, I, -I, 2I, 2+I, 1-3I, ...
TOKEN_PATTERN = regex.compile(
    r"""^(?:
        (?P<real>[+-]?\d+)(?:(?P<sign>[+-])(?P<coef>\d*)I)?
        |
        (?P<isign>[+-]?)(?P<icoef>\d*)I
    )$""",
    regex.VERBOSE,
)


def _checked(value, what):
    if not INT32_MIN <= value <= INT32_MAX:
        raise CoefficientOverflowError(f"{what} coefficient {value} outside the signed 32-bit range")
    return value


@dataclass(frozen=True)
class NeutroValue:
    """The value real + indet * I."""
    real: int = 0
    indet: int = 0

    def __add__(self, other):
        return neutro_add(self, other)

    def __mul__(self, other):
        return neutro_mul(self, other)

    def __neg__(self):
        return NeutroValue(-self.real, -self.indet)

    def is_zero(self) -> bool:
        return self.real == 0 and self.indet == 0

    def is_real(self) -> bool:
        return self.indet == 0

    def __str__(self):
        return format_token(self)

    @staticmethod
    def from_token(token: str) -> 'NeutroValue':
        return parse_token(token)


ZERO = NeutroValue(0, 0)
ONE = NeutroValue(1, 0)
I = NeutroValue(0, 1)


@dataclass(frozen=True)
class TriState:
    """State of a concept: off (0), on (1) or indeterminate (I)."""
    val: int

    OFF_VALUE = 0
    ON_VALUE = 1
    INDET_VALUE = 2

    def __post_init__(self):
        if self.val not in (self.OFF_VALUE, self.ON_VALUE, self.INDET_VALUE):
            raise ValueError(f"not a tri-state value: {self.val!r}")

    def is_off(self):
        return self.val == TriState.OFF_VALUE

    def is_on(self):
        return self.val == TriState.ON_VALUE

    def is_indet(self):
        return self.val == TriState.INDET_VALUE

    @property
    def token(self) -> str:
        return ("0", "1", "I")[self.val]

    def __str__(self):
        return self.token

    @staticmethod
    def from_token(token: str) -> 'TriState':
        try:
            return {"0": OFF, "1": ON, "I": INDET}[token]
        except KeyError:
            raise ParseError(f"'{token}' is not one of 0, 1, I") from None

    @staticmethod
    def from_bool(b: bool) -> 'TriState':
        return ON if b else OFF


OFF = TriState(TriState.OFF_VALUE)
ON = TriState(TriState.ON_VALUE)
INDET = TriState(TriState.INDET_VALUE)


class NegativeMode(enum.Enum):
    CLIP = "clip"
    BIPOLAR = "bipolar"


class TieRule(enum.Enum):
    OFF = "off"
    INDET = "indet"


@dataclass(frozen=True)
class ThresholdPolicy:
    k_on: int = 1
    k_indet: int = 1
    negative_mode: NegativeMode = NegativeMode.CLIP
    tie: TieRule = TieRule.OFF

    def __post_init__(self):
        if self.k_on < 1 or self.k_indet < 1:
            raise ScenarioError(f"thresholds must be at least 1, got k_on={self.k_on}, k_indet={self.k_indet}")

    def to_json(self) -> dict:
        return {
            "k_on": self.k_on,
            "k_indet": self.k_indet,
            "negative_mode": self.negative_mode.value,
            "tie": self.tie.value,
        }

    @staticmethod
    def from_json(json: dict) -> 'ThresholdPolicy':
        return ThresholdPolicy(
            k_on=json.get("k_on", 1),
            k_indet=json.get("k_indet", 1),
            negative_mode=NegativeMode(json.get("negative_mode", "clip")),
            tie=TieRule(json.get("tie", "off")),
        )


SIMPLE_POLICY = ThresholdPolicy(k_on=1, k_indet=1)
COMBINED_POLICY = ThresholdPolicy(k_on=2, k_indet=2)


def neutro_add(x: NeutroValue, y: NeutroValue) -> NeutroValue:
    return NeutroValue(_checked(x.real + y.real, "real"), _checked(x.indet + y.indet, "I"))


def neutro_mul(x: NeutroValue, y: NeutroValue) -> NeutroValue:
    # (a1 + b1 I)(a2 + b2 I) with I * I = I
    real = x.real * y.real
    indet = x.real * y.indet + x.indet * y.real + x.indet * y.indet
    return NeutroValue(_checked(real, "real"), _checked(indet, "I"))


def collapse(v: NeutroValue, p: ThresholdPolicy = SIMPLE_POLICY) -> TriState:
    """Collapse an accumulation to a state.

    Whichever coefficient is larger decides: the real part switches the
    concept on at ``k_on``, the I part makes it indeterminate at ``k_indet``.
    Equal nonzero coefficients follow the policy's tie rule.
    """
    a, b = v.real, v.indet
    if a == 0 and b == 0:
        return OFF
    if a > b:
        return ON if a >= p.k_on else OFF
    if b > a:
        return INDET if b >= p.k_indet else OFF
    if p.tie is TieRule.INDET and b >= p.k_indet:
        return INDET
    return OFF


def inhibits(v: NeutroValue, p: ThresholdPolicy) -> bool:
    """True when a bipolar policy marks ``v`` as actively switched off."""
    return p.negative_mode is NegativeMode.BIPOLAR and v.real <= -p.k_on and v.indet <= 0


def lift(s: TriState) -> NeutroValue:
    if s.is_on():
        return ONE
    if s.is_indet():
        return I
    return ZERO


def neutro_dot(row: Sequence[NeutroValue], state: Sequence[TriState]) -> NeutroValue:
    if len(row) != len(state):
        raise ValueError(f"length mismatch: row has {len(row)} entries, state has {len(state)}")
    total = ZERO
    for weight, s in zip(row, state):
        total = neutro_add(total, neutro_mul(weight, lift(s)))
    return total


def parse_token(token: str) -> NeutroValue:
    match = TOKEN_PATTERN.match(token.strip())
    if match is None:
        raise ParseError(f"'{token}' is not a value token")
    if match.group("real") is not None:
        real = int(match.group("real"))
        if match.group("sign") is None:
            return NeutroValue(real, 0)
        indet = int(match.group("coef") or 1)
        return NeutroValue(real, -indet if match.group("sign") == "-" else indet)
    indet = int(match.group("icoef") or 1)
    return NeutroValue(0, -indet if match.group("isign") == "-" else indet)


def _coefficient(b):
    return "I" if b == 1 else f"{b}I"


def format_token(v: NeutroValue) -> str:
    a, b = v.real, v.indet
    if b == 0:
        return str(a)
    if a == 0:
        return _coefficient(b) if b > 0 else "-" + _coefficient(-b)
    if b > 0:
        return f"{a}+{_coefficient(b)}"
    return f"{a}-{_coefficient(-b)}"
