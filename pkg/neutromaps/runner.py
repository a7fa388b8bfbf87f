"""Running scenarios and checking files, as the command line does."""
import logging
from dataclasses import replace
from typing import List, Optional

import regex

from .cetd import cetd_profile
from .composition import assemble_disjoint, assemble_overlap, combine, link, transpose
from .concepts import ValidationReport, seed_side, validate, zero_state
from .dynamics import DEFAULT_MAX_ITERS, run_bam, run_cognitive, run_relational, sweep
from .exceptions import ScenarioError
from .models import CetdParams, ComposeOp, ConnectionMatrix, Emit, MapKind, RunKind, Scenario, Side
from .parsers import load_matrix, load_plan, load_scenario, load_table
from .parsers.text import content_lines, header
from .renderers import export_dot, render_report, render_summary, render_sweep, render_trace, serialize_matrix
from .utils import read_text

logger = logging.getLogger(__name__)


def compose_matrix(scenario: Scenario) -> ConnectionMatrix:
    op = scenario.compose
    if op is ComposeOp.COMBINE:
        return combine(scenario.matrices)
    if op is ComposeOp.DISJOINT:
        return assemble_disjoint(scenario.plan, scenario.plan.rows, scenario.plan.cols)
    if op is ComposeOp.OVERLAP:
        return assemble_overlap(scenario.plan, scenario.plan.rows, scenario.plan.cols)
    a, b = scenario.matrices
    return link(a, transpose(b) if scenario.transpose_b else b, scenario.rule)


def _max_iters(scenario: Scenario) -> int:
    return DEFAULT_MAX_ITERS if scenario.max_iters is None else scenario.max_iters


def _run_map(m: ConnectionMatrix, scenario: Scenario, do_sweep: bool) -> List[str]:
    max_iters = _max_iters(scenario)
    if do_sweep:
        return [render_sweep(sweep(m, scenario.policy, max_iters))]
    if m.kind is MapKind.COGNITIVE:
        pattern = run_cognitive(m, zero_state(m.row_space, scenario.seed), scenario.policy, max_iters)
    else:
        side = seed_side(m, scenario.seed, scenario.side)
        space = m.row_space if side is Side.DOMAIN else m.col_space
        pattern = run_relational(m, zero_state(space, scenario.seed), scenario.policy, max_iters, side)
    return _pattern_output(pattern, scenario)


def _pattern_output(pattern, scenario: Scenario) -> List[str]:
    out = [render_trace(pattern, steps=scenario.emits(Emit.TRACE))]
    if scenario.emits(Emit.SUMMARY):
        out.append(render_summary(pattern))
    return out


def run_scenario(scenario: Scenario, do_sweep: bool = False) -> str:
    """Everything a scenario asks for, as the text printed on standard out."""
    out = []
    if scenario.kind is RunKind.CETD:
        profile = cetd_profile(scenario.table, scenario.cetd.alphas, scenario.cetd.decimals)
        out.append(render_report(profile, scenario.cetd.decimals))
        if scenario.emits(Emit.SUMMARY):
            out.append(render_summary(profile))
        return "".join(out)

    if scenario.kind is RunKind.COMPOSE:
        m = compose_matrix(scenario)
        out.append(serialize_matrix(m))
        if scenario.emits(Emit.DOT):
            out.append(export_dot(m))
        if scenario.seed or do_sweep:
            out += _run_map(m, scenario, do_sweep)
        return "".join(out)

    m = scenario.matrix
    if scenario.emits(Emit.MATRIX):
        out.append(serialize_matrix(m))
    if scenario.emits(Emit.DOT):
        out.append(export_dot(m))
    if scenario.kind is RunKind.BAM:
        if do_sweep:
            raise ScenarioError("bam scenarios cannot be swept")
        pattern = run_bam(m, scenario.bam_input, scenario.bam, _max_iters(scenario))
        out += _pattern_output(pattern, scenario)
    else:
        out += _run_map(m, scenario, do_sweep)
    return "".join(out)


def sniff_file_type(text: str) -> str:
    """Guess ``matrix``, ``plan``, ``scenario`` or ``table`` from file content."""
    lines = [line for _, line in content_lines(text)]
    if not lines:
        return "table"
    if regex.match(r"^[A-Za-z_]+\s*=", lines[0]):
        return "scenario"
    keys = {parsed[0] for parsed in map(header, lines) if parsed is not None}
    if "class" in keys or "block" in keys:
        return "plan"
    if "kind" in keys:
        return "matrix"
    return "table"


def validate_file(path) -> ValidationReport:
    """Load a file of any input type; structural problems come back as a report,
    everything else raises."""
    what = sniff_file_type(read_text(path))
    logger.debug("validating %s as a %s", path, what)
    report = ValidationReport()
    if what == "matrix":
        return validate(load_matrix(path))
    if what == "plan":
        plan = load_plan(path)
        # the file does not say how it will be assembled; check labels and kinds only
        replace(plan, overlap_allowed=True).validate(plan.rows, plan.cols)
        for number, block in enumerate(plan.blocks, start=1):
            for violation in validate(block.matrix).violations:
                report.add(violation.code, f"block {number}: {violation.message}")
    elif what == "scenario":
        load_scenario(path)
    else:
        load_table(path)
    return report


def with_overrides(scenario: Scenario, max_iters: Optional[int] = None, decimals: Optional[int] = None,
                   emit=(), **policy) -> Scenario:
    """Command-line values win over scenario keys."""
    changes = {key: value for key, value in policy.items() if value is not None}
    if changes:
        scenario = replace(scenario, policy=replace(scenario.policy, **changes))
    if max_iters is not None:
        if max_iters < 1:
            raise ScenarioError(f"max_iters must be at least 1, got {max_iters}")
        scenario = replace(scenario, max_iters=max_iters)
    if decimals is not None and scenario.cetd is not None:
        scenario = replace(scenario, cetd=CetdParams(scenario.cetd.alphas, decimals))
    if emit:
        scenario = replace(scenario, emit=scenario.emit | frozenset(emit))
    return scenario
