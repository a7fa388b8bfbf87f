"""Iterating state vectors to their hidden pattern.

Every run keeps the full history of visited states and stops at the first
revisit. Revisiting the immediately previous state is a fixed point, anything
earlier closes a limit cycle over the states in between.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .algebra import (OFF, ON, SIMPLE_POLICY, NeutroValue, ThresholdPolicy, TriState, collapse,
                      inhibits)
from .concepts import zero_state
from .exceptions import KindMismatchError, NonConvergenceError, ScenarioError, ShapeMismatchError
from .models import (BamConfig, ConnectionMatrix, HiddenPattern, MapKind, PatternKind, RelationalPattern, Side,
                     SignalMode, StateVector)

logger = logging.getLogger(__name__)

DEFAULT_MAX_ITERS = 10_000

Pair = Tuple[StateVector, StateVector]


def threshold_update(raw: Sequence[NeutroValue], prev: StateVector, p: ThresholdPolicy = SIMPLE_POLICY) -> StateVector:
    """Collapse every coordinate, then force the clamped coordinates back on."""
    if len(raw) != len(prev):
        raise ShapeMismatchError(f"{len(raw)} accumulations for a state of length {len(prev)}")
    states = [ON if i in prev.clamp else collapse(v, p) for i, v in enumerate(raw)]
    inhibited = [i for i, v in enumerate(raw) if i not in prev.clamp and inhibits(v, p)]
    return prev.with_states(states, inhibited)


def _require(m: ConnectionMatrix, kind: MapKind):
    if m.kind is not kind:
        raise KindMismatchError(f"expected a {kind.value} matrix, got {m.kind.value}")


def _check_iters(max_iters: int):
    if max_iters < 1:
        raise ScenarioError(f"max_iters must be at least 1, got {max_iters}")


def step_cognitive(m: ConnectionMatrix, x: StateVector, p: ThresholdPolicy = SIMPLE_POLICY) -> StateVector:
    if x.space != m.row_space:
        raise ShapeMismatchError("state is not over the matrix concepts")
    return threshold_update(m.propagate(x.states), x, p)


def run_cognitive(m: ConnectionMatrix, x0: StateVector, p: ThresholdPolicy = SIMPLE_POLICY,
                  max_iters: int = DEFAULT_MAX_ITERS) -> HiddenPattern:
    """Iterate ``x -> threshold_update(x . m)`` until a state repeats."""
    _require(m, MapKind.COGNITIVE)
    _check_iters(max_iters)
    if not m.is_square:
        raise ShapeMismatchError("cognitive dynamics need a square matrix")
    trace = [x0]
    seen = {x0.states: 0}
    x = x0
    logger.debug("t=0 %s", x)
    for t in range(1, max_iters + 1):
        x = step_cognitive(m, x, p)
        trace.append(x)
        logger.debug("t=%d %s", t, x)
        if x.states in seen:
            start = seen[x.states]
            kind = PatternKind.FIXED if start == t - 1 else PatternKind.CYCLE
            logger.info("%s of length %d after %d iterations", kind.value, t - start, t)
            return HiddenPattern(kind, tuple(trace[start:t]), tuple(trace), t, p)
        seen[x.states] = t
    raise NonConvergenceError(max_iters)


def step_relational(m: ConnectionMatrix, pair: Pair, p: ThresholdPolicy = SIMPLE_POLICY,
                    side: Side = Side.DOMAIN) -> Pair:
    """One round trip through the matrix, starting from the seeded side."""
    x, y = pair
    if x.space != m.row_space or y.space != m.col_space:
        raise ShapeMismatchError("pair is not over the matrix domain and range")
    if side is Side.DOMAIN:
        y = threshold_update(m.propagate(x.states), y, p)
        x = threshold_update(m.propagate(y.states, transpose=True), x, p)
    else:
        x = threshold_update(m.propagate(y.states, transpose=True), x, p)
        y = threshold_update(m.propagate(x.states), y, p)
    return x, y


def _seeded_side(m: ConnectionMatrix, seed: StateVector, side: Optional[Side]) -> Side:
    if side is Side.DOMAIN or (side is None and seed.space == m.row_space):
        if seed.space != m.row_space:
            raise ShapeMismatchError("seed is not over the domain concepts")
        return Side.DOMAIN
    if seed.space != m.col_space:
        raise ShapeMismatchError("seed is over neither the domain nor the range concepts")
    return Side.RANGE


def _pair_loop(step, pair: Pair, max_iters: int):
    trace = [pair]
    seen = {(pair[0].states, pair[1].states): 0}
    logger.debug("t=0 domain %s range %s", pair[0], pair[1])
    for t in range(1, max_iters + 1):
        pair = step(pair)
        trace.append(pair)
        logger.debug("t=%d domain %s range %s", t, pair[0], pair[1])
        key = (pair[0].states, pair[1].states)
        if key in seen:
            start = seen[key]
            kind = PatternKind.FIXED if start == t - 1 else PatternKind.CYCLE
            logger.info("%s of length %d after %d iterations", kind.value, t - start, t)
            return kind, tuple(trace[start:t]), tuple(trace), t
        seen[key] = t
    raise NonConvergenceError(max_iters)


def run_relational(m: ConnectionMatrix, seed: StateVector, p: ThresholdPolicy = SIMPLE_POLICY,
                   max_iters: int = DEFAULT_MAX_ITERS, side: Optional[Side] = None) -> RelationalPattern:
    """Alternate through the matrix and its transpose until the pair repeats.

    Only the seeded side is clamped; the other side starts all off.
    """
    _require(m, MapKind.RELATIONAL)
    _check_iters(max_iters)
    side = _seeded_side(m, seed, side)
    if side is Side.DOMAIN:
        pair = (seed, StateVector.off(m.col_space))
    else:
        pair = (StateVector.off(m.row_space), seed)
    kind, pairs, trace, iterations = _pair_loop(lambda q: step_relational(m, q, p, side), pair, max_iters)
    return RelationalPattern(kind, pairs, trace, iterations, p, side)


def bam_signal(x: int, threshold: int, prev: TriState) -> TriState:
    """Threshold signal of one neuron. Below threshold is off; bipolar
    inhibition is marked on the vector by the caller."""
    if x > threshold:
        return ON
    if x == threshold:
        return prev
    return OFF


def _signals(sums, thresholds, prev: StateVector, mode: SignalMode) -> StateVector:
    states = [bam_signal(int(s), t, q) for s, t, q in zip(sums, thresholds, prev.states)]
    inhibited = [i for i, (s, t) in enumerate(zip(sums, thresholds)) if mode is SignalMode.BIPOLAR and s < t]
    return prev.with_states(states, inhibited)


def run_bam(m: ConnectionMatrix, x_input: Sequence[int], cfg: Optional[BamConfig] = None,
            max_iters: int = DEFAULT_MAX_ITERS) -> RelationalPattern:
    """Discrete additive BAM run from an activation vector on the row field.

    S_X is the signal of ``x_input``; S_Y starts all off unless the config
    overrides it. Each step updates S_Y from S_X . m, then S_X from
    S_Y . m^T, keeping the previous signal wherever a sum equals its threshold.
    """
    _require(m, MapKind.BAM)
    _check_iters(max_iters)
    if m.has_indeterminacy():
        raise KindMismatchError("bam matrices hold integer weights only")
    cfg = BamConfig.zeros(m) if cfg is None else cfg
    cfg.check(m)
    if len(x_input) != m.shape[0]:
        raise ShapeMismatchError(f"input has {len(x_input)} activations for {m.shape[0]} neurons")
    weights = m.real
    x_sums = tuple(int(v) for v in x_input)
    x = _signals(x_sums, cfg.thresholds_u, StateVector.off(m.row_space), cfg.mode)
    if cfg.initial_v is None:
        y = StateVector.off(m.col_space)
    else:
        y = StateVector(m.col_space, cfg.initial_v)
    activations: List[Tuple[Optional[Tuple[int, ...]], Optional[Tuple[int, ...]]]] = [(x_sums, None)]

    def step(pair: Pair) -> Pair:
        sx, sy = pair
        y_sums = np.array([s.is_on() for s in sx.states], dtype=np.int64) @ weights
        sy = _signals(y_sums, cfg.thresholds_v, sy, cfg.mode)
        x_sums = weights @ np.array([s.is_on() for s in sy.states], dtype=np.int64)
        sx = _signals(x_sums, cfg.thresholds_u, sx, cfg.mode)
        activations.append((tuple(int(v) for v in x_sums), tuple(int(v) for v in y_sums)))
        return sx, sy

    kind, pairs, trace, iterations = _pair_loop(step, (x, y), max_iters)
    return RelationalPattern(kind, pairs, trace, iterations, activations=tuple(activations))


def sweep(m: ConnectionMatrix, p: ThresholdPolicy = SIMPLE_POLICY,
          max_iters: int = DEFAULT_MAX_ITERS) -> Dict[str, Union[HiddenPattern, RelationalPattern]]:
    """Run every single-concept seed: each concept of a cognitive map, or each
    domain concept then each range concept of a relational map."""
    if m.kind is MapKind.COGNITIVE:
        return {label: run_cognitive(m, zero_state(m.row_space, [label]), p, max_iters) for label in m.row_space}
    _require(m, MapKind.RELATIONAL)
    patterns = {}
    for label in m.row_space:
        patterns[label] = run_relational(m, zero_state(m.row_space, [label]), p, max_iters, Side.DOMAIN)
    for label in m.col_space:
        patterns[label] = run_relational(m, zero_state(m.col_space, [label]), p, max_iters, Side.RANGE)
    return patterns
