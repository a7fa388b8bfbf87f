"""Scenario files: one ``key=value`` per line, ``#`` comments.

::

    kind=fcm
    matrix=../matrices/expert2.mat
    seed=A'1
    emit=trace,summary

Every referenced file is loaded, relative to the scenario file, and checked
before a :class:`Scenario` is returned.
"""
import logging
import sys
from dataclasses import replace

import regex

from ..algebra import COMBINED_POLICY, SIMPLE_POLICY, NegativeMode, ThresholdPolicy, TieRule, TriState
from ..concepts import seed_side, validate
from ..exceptions import KindMismatchError, ParseError, ScenarioError, UnknownLabelError, ValidationFailed
from ..models import BamConfig, ComposeOp, Emit, LinkRule, MapKind, RunKind, Scenario, Side, SignalMode
from ..models.RawDataTable import TABULATION_DECIMALS, CetdParams
from ..utils import read_text, resolve_path
from .matrix import load_matrix, load_valid_matrix
from .plan import load_valid_plan
from .table import load_table
from .text import content_lines, split_list

logger = logging.getLogger(__name__)

KEYS = (
    "kind", "matrix", "matrices", "compose", "plan", "rule", "transpose_b",
    "seed", "side", "input", "thresholds_u", "thresholds_v", "initial_v", "signal",
    "k_on", "k_indet", "negative_mode", "tie",
    "table", "alphas", "decimals",
    "max_iters", "emit",
)

_POLICY_KEYS = {"k_on", "k_indet", "negative_mode", "tie"}
_COMMON_KEYS = {"kind", "max_iters", "emit"}
RELEVANT_KEYS = {
    RunKind.FCM: {"matrix", "seed"} | _POLICY_KEYS,
    RunKind.NCM: {"matrix", "seed"} | _POLICY_KEYS,
    RunKind.FRM: {"matrix", "seed", "side"} | _POLICY_KEYS,
    RunKind.NRM: {"matrix", "seed", "side"} | _POLICY_KEYS,
    RunKind.BAM: {"matrix", "input", "thresholds_u", "thresholds_v", "initial_v", "signal"},
    RunKind.CETD: {"table", "alphas", "decimals"},
    RunKind.COMPOSE: {"compose", "matrices", "plan", "rule", "transpose_b", "seed", "side"} | _POLICY_KEYS,
}

KEY_VALUE = regex.compile(r"^(?P<key>[A-Za-z_]+)\s*=\s*(?P<value>.*)$")
INTEGER = regex.compile(r"^[+-]?\d+$")
REAL = regex.compile(r"^[+-]?(?:\d+(?:\.\d*)?|\.\d+)$")


class _Fields:
    """Raw key/value pairs with their line numbers, converted on demand."""

    def __init__(self, fields, path):
        self.fields = fields
        self.path = path

    def __contains__(self, key):
        return key in self.fields

    def line(self, key):
        return self.fields[key][0] if key in self.fields else None

    def raw(self, key, default=None):
        return self.fields[key][1] if key in self.fields else default

    def error(self, key, message):
        return ParseError(message, self.line(key), self.path)

    def require(self, key, kind):
        if key not in self.fields:
            raise ScenarioError(f"'{key}' is required for {kind.value} scenarios")
        return self.raw(key)

    def choice(self, key, enum_type, default=None):
        if key not in self.fields:
            return default
        try:
            return enum_type(self.raw(key))
        except ValueError:
            allowed = ", ".join(e.value for e in enum_type)
            raise self.error(key, f"{key} '{self.raw(key)}' is not one of {allowed}") from None

    def integer(self, key, default=None, minimum=None):
        if key not in self.fields:
            return default
        value = self.raw(key)
        if not INTEGER.match(value):
            raise self.error(key, f"{key} '{value}' is not an integer")
        number = int(value)
        if minimum is not None and number < minimum:
            raise self.error(key, f"{key} must be at least {minimum}, got {number}")
        return number

    def integers(self, key):
        values = split_list(self.raw(key, ""))
        for value in values:
            if not INTEGER.match(value):
                raise self.error(key, f"'{value}' in {key} is not an integer")
        return tuple(int(value) for value in values)

    def reals(self, key):
        values = split_list(self.raw(key, ""))
        for value in values:
            if not REAL.match(value):
                raise self.error(key, f"'{value}' in {key} is not a number")
        return tuple(float(value) for value in values)

    def boolean(self, key, default=False):
        if key not in self.fields:
            return default
        value = self.raw(key).lower()
        if value not in ("true", "false"):
            raise self.error(key, f"{key} must be true or false")
        return value == "true"

    def path_of(self, value):
        return resolve_path(value, self.path)


def _read_fields(text, path):
    fields = {}
    for number, line in content_lines(text):
        match = KEY_VALUE.match(line)
        if match is None:
            raise ParseError("expected 'key=value'", number, path)
        key, value = match.group("key").lower(), match.group("value").strip()
        if key not in KEYS:
            raise ParseError(f"unknown key '{key}'", number, path)
        if key in fields:
            raise ParseError(f"repeated key '{key}'", number, path)
        fields[key] = (number, value)
    return _Fields(fields, path)


def _policy(fields, base):
    return ThresholdPolicy(
        k_on=fields.integer("k_on", base.k_on, minimum=1),
        k_indet=fields.integer("k_indet", base.k_indet, minimum=1),
        negative_mode=fields.choice("negative_mode", NegativeMode, base.negative_mode),
        tie=fields.choice("tie", TieRule, base.tie),
    )


def _emit(fields):
    emit = set()
    for value in split_list(fields.raw("emit", "")):
        try:
            emit.add(Emit(value))
        except ValueError:
            raise fields.error("emit", f"cannot emit '{value}'") from None
    return frozenset(emit)


def _checked_matrix(path, kind: RunKind):
    matrix = load_matrix(path)
    if matrix.kind is not kind.map_kind:
        raise KindMismatchError(f"{kind.value} scenarios need a {kind.map_kind.value} matrix, {path} is {matrix.kind.value}")
    if not kind.allows_indeterminacy and matrix.kind is not MapKind.BAM and matrix.has_indeterminacy():
        raise KindMismatchError(f"{kind.value} scenarios take no indeterminate entries, {path} has some")
    report = validate(matrix)
    if not report.passed:
        raise ValidationFailed(report, path)
    return matrix


def _check_seed(fields, scenario: Scenario) -> Scenario:
    m = scenario.matrix
    if m.kind is MapKind.COGNITIVE:
        for label in scenario.seed:
            if label not in m.row_space:
                raise UnknownLabelError(label, f"seed of {fields.path or 'scenario'}")
        return scenario
    return replace(scenario, side=seed_side(m, scenario.seed, scenario.side))


def _bam(fields, scenario: Scenario) -> Scenario:
    m = scenario.matrix
    n, p = m.shape
    bam_input = fields.integers("input")
    if len(bam_input) != n:
        raise fields.error("input", f"input has {len(bam_input)} activations for {n} neurons")
    thresholds_u = fields.integers("thresholds_u") if "thresholds_u" in fields else (0,) * n
    thresholds_v = fields.integers("thresholds_v") if "thresholds_v" in fields else (0,) * p
    if len(thresholds_u) != n:
        raise fields.error("thresholds_u", f"{len(thresholds_u)} thresholds for {n} neurons")
    if len(thresholds_v) != p:
        raise fields.error("thresholds_v", f"{len(thresholds_v)} thresholds for {p} neurons")
    initial_v = None
    if "initial_v" in fields:
        tokens = split_list(fields.raw("initial_v"))
        if len(tokens) != p:
            raise fields.error("initial_v", f"initial_v has {len(tokens)} signals for {p} neurons")
        try:
            initial_v = tuple(TriState.from_token(t) for t in tokens)
        except ParseError as error:
            raise fields.error("initial_v", str(error)) from None
        if any(s.is_indet() for s in initial_v):
            raise fields.error("initial_v", "bam signals are 0 or 1")
    cfg = BamConfig(thresholds_u, thresholds_v, fields.choice("signal", SignalMode, SignalMode.BINARY), initial_v)
    return replace(scenario, bam_input=bam_input, bam=cfg)


def parse_scenario(text: str, path=None) -> Scenario:
    fields = _read_fields(text, path)
    if "kind" not in fields:
        raise ParseError("missing 'kind'", None, path)
    kind = fields.choice("kind", RunKind)
    for key in sorted(set(fields.fields) - RELEVANT_KEYS[kind] - _COMMON_KEYS, key=fields.line):
        print(f"Warning: line {fields.line(key)}: '{key}' is ignored by {kind.value} scenarios", file=sys.stderr)
    scenario = Scenario(
        kind=kind,
        path=path,
        seed=tuple(split_list(fields.raw("seed", ""))),
        side=fields.choice("side", Side) if fields.raw("side", "auto") != "auto" else None,
        max_iters=fields.integer("max_iters", minimum=1),
        emit=_emit(fields),
    )
    if kind is RunKind.CETD:
        alphas = fields.reals("alphas")
        if not alphas:
            raise ScenarioError("a cetd scenario needs at least one alpha")
        table = load_table(fields.path_of(fields.require("table", kind)))
        return replace(scenario, table=table, cetd=CetdParams(alphas, fields.integer("decimals", TABULATION_DECIMALS, minimum=0)))

    if kind is RunKind.COMPOSE:
        op = fields.choice("compose", ComposeOp)
        if op is None:
            raise ScenarioError("'compose' is required for compose scenarios")
        scenario = replace(
            scenario,
            compose=op,
            rule=fields.choice("rule", LinkRule, LinkRule.REAL_FIRST),
            transpose_b=fields.boolean("transpose_b"),
            policy=_policy(fields, COMBINED_POLICY if op is ComposeOp.COMBINE else SIMPLE_POLICY),
        )
        if op in (ComposeOp.DISJOINT, ComposeOp.OVERLAP):
            return replace(scenario, plan=load_valid_plan(fields.path_of(fields.require("plan", kind))))
        paths = [fields.path_of(value) for value in split_list(fields.require("matrices", kind))]
        if op is ComposeOp.LINK and len(paths) != 2:
            raise fields.error("matrices", f"link takes exactly two matrices, got {len(paths)}")
        if not paths:
            raise fields.error("matrices", "no matrices given")
        return replace(scenario, matrices=tuple(load_valid_matrix(p) for p in paths))

    matrix = _checked_matrix(fields.path_of(fields.require("matrix", kind)), kind)
    scenario = replace(scenario, matrix=matrix, policy=_policy(fields, SIMPLE_POLICY))
    if kind is RunKind.BAM:
        return _bam(fields, scenario)
    scenario = _check_seed(fields, scenario)
    logger.debug("scenario %s: %s run seeded on %s", path or "text", kind.value, ", ".join(scenario.seed) or "nothing")
    return scenario


def load_scenario(path) -> Scenario:
    return parse_scenario(read_text(path), path=str(path))
