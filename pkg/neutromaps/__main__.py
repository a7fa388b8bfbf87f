# -*- coding: utf-8 -*-

"""Command line interface

"""

import argparse
import logging
import sys

from .__version__ import __version__
from .algebra import TieRule
from .cetd import cetd_profile
from .composition import assemble_disjoint, assemble_overlap, combine, link, transpose
from .exceptions import NeutromapsError, ValidationFailed
from .models import Emit, LinkRule
from .models.RawDataTable import TABULATION_DECIMALS
from .parsers import load_scenario, load_table, load_valid_matrix, load_valid_plan
from .renderers import export_dot, render_report, render_summary, serialize_matrix
from .runner import run_scenario, validate_file, with_overrides

PROG = "neutromaps"
LOG_FORMAT = "%(name)s: %(levelname)s: %(message)s"


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors as a single diagnostic line and exit status 2."""

    def error(self, message):
        print(f"{PROG}: error[usage]: {message}", file=sys.stderr)
        sys.exit(2)


def alpha_list(value):
    try:
        alphas = [float(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{value}' is not a comma-separated list of numbers") from None
    if not alphas:
        raise argparse.ArgumentTypeError("at least one alpha is needed")
    return alphas


def positive_int(value):
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{value}' is not an integer") from None
    if number < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {number}")
    return number


def build_parser():
    parser = ArgumentParser(
        prog=PROG,
        description="Fixed points and limit cycles of fuzzy and neutrosophic cognitive and relational maps, "
                    "bidirectional associative memories, map composition and CETD data profiles.",
    )
    parser.add_argument(
        "-V",
        "--version",
        help="Show version and exit",
        action="version",
        version=__version__,
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress to standard error; repeat for every iteration.",
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    run = commands.add_parser("run", help="Run a scenario file.")
    run.add_argument("scenario", help="Path to the scenario file.")
    run.add_argument("--trace", action="store_true", help="Print every iteration.")
    run.add_argument("--dot", action="store_true", help="Print the map as a Graphviz digraph first.")
    run.add_argument("--summary", action="store_true", help="Print the hidden pattern as JSON after the text output.")
    run.add_argument("--sweep", action="store_true", help="Run every single-concept seed instead of the scenario seed.")
    run.add_argument("--max-iters", type=positive_int, help="Override the scenario iteration limit.")
    run.add_argument("--k-on", type=int, help="Override the on-threshold of the real part.")
    run.add_argument("--k-indet", type=int, help="Override the threshold of the I part.")
    run.add_argument("--tie", choices=[t.value for t in TieRule], help="Override the rule for equal real and I parts.")
    run.add_argument("--decimals", type=int, help="Override the tabulation precision of a cetd scenario.")

    cetd = commands.add_parser("cetd", help="Profile a raw data table.")
    cetd.add_argument("table", help="Path to the raw data table.")
    cetd.add_argument("--alpha", required=True, type=alpha_list, help="Comma-separated alphas in [0, 1].")
    precision = cetd.add_mutually_exclusive_group()
    precision.add_argument("--decimals", type=int, default=TABULATION_DECIMALS,
                           help=f"Round averages and statistics to this many decimals (default {TABULATION_DECIMALS}).")
    precision.add_argument("--full-precision", action="store_const", dest="decimals", const=None,
                           help="Band the unrounded averages and statistics.")
    cetd.add_argument("--summary", action="store_true", help="Print the profile as JSON after the report.")

    compose = commands.add_parser("compose", help="Build a map from expert matrices and print it.")
    ops = compose.add_subparsers(dest="op", metavar="op")
    ops.required = True
    combine_op = ops.add_parser("combine", help="Sum matrices over the same concepts.")
    combine_op.add_argument("matrices", nargs="+", help="Paths to matrix files.")
    for name, text in (("disjoint", "Assemble blocks on disjoint classes."),
                       ("overlap", "Assemble blocks on overlapping classes.")):
        op = ops.add_parser(name, help=text)
        op.add_argument("plan", help="Path to the block-plan file.")
    link_op = ops.add_parser("link", help="Link two relational maps through their shared space.")
    link_op.add_argument("a", help="Path to the first matrix file.")
    link_op.add_argument("b", help="Path to the second matrix file.")
    link_op.add_argument("--rule", choices=[r.value for r in LinkRule], default=LinkRule.REAL_FIRST.value,
                         help="How a product entry becomes 0, 1 or I.")
    link_op.add_argument("--transpose-b", action="store_true", help="Use the transpose of the second matrix.")

    export = commands.add_parser("export", help="Export a matrix.")
    formats = export.add_subparsers(dest="format", metavar="format")
    formats.required = True
    dot = formats.add_parser("dot", help="Graphviz digraph.")
    dot.add_argument("matrix", help="Path to the matrix file.")

    check = commands.add_parser("validate", help="Check a matrix, table, scenario or block-plan file.")
    check.add_argument("file", help="Path to the file.")
    return parser


def _run(args):
    emit = [e for e, flag in ((Emit.TRACE, args.trace), (Emit.DOT, args.dot), (Emit.SUMMARY, args.summary)) if flag]
    scenario = with_overrides(
        load_scenario(args.scenario),
        max_iters=args.max_iters,
        decimals=args.decimals,
        emit=emit,
        k_on=args.k_on,
        k_indet=args.k_indet,
        tie=None if args.tie is None else TieRule(args.tie),
    )
    return run_scenario(scenario, do_sweep=args.sweep)


def _cetd(args):
    profile = cetd_profile(load_table(args.table), args.alpha, args.decimals)
    out = render_report(profile, args.decimals)
    if args.summary:
        out += render_summary(profile)
    return out


def _compose(args):
    if args.op == "combine":
        m = combine([load_valid_matrix(path) for path in args.matrices])
    elif args.op == "link":
        b = load_valid_matrix(args.b)
        m = link(load_valid_matrix(args.a), transpose(b) if args.transpose_b else b, LinkRule(args.rule))
    else:
        plan = load_valid_plan(args.plan)
        assemble = assemble_disjoint if args.op == "disjoint" else assemble_overlap
        m = assemble(plan, plan.rows, plan.cols)
    return serialize_matrix(m)


def _validate(args):
    report = validate_file(args.file)
    if not report.passed:
        for violation in report.violations:
            print(violation)
        raise ValidationFailed(report, args.file)
    return f"ok {args.file}\n"


COMMANDS = {
    "run": _run,
    "cetd": _cetd,
    "compose": _compose,
    "export": lambda args: export_dot(load_valid_matrix(args.matrix)),
    "validate": _validate,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT, level=level)
    logging.getLogger(PROG).setLevel(level)
    try:
        sys.stdout.write(COMMANDS[args.command](args))
    except NeutromapsError as error:
        print(f"{PROG}: error[{error.code}]: {error}", file=sys.stderr)
        return 1
    except OSError as error:
        print(f"{PROG}: error[io]: {error}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
