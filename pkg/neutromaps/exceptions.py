"""Errors raised by neutromaps.

Every error carries a short ``code`` which the command line interface prints
as ``neutromaps: error[<code>]: <message>``.
"""


class NeutromapsError(Exception):
    code = "error"


class ParseError(NeutromapsError, ValueError):
    code = "parse"

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        if path is not None and line is not None:
            prefix = f"{path}:{line}: "
        elif path is not None:
            prefix = f"{path}: "
        elif line is not None:
            prefix = f"line {line}: "
        else:
            prefix = ""
        super().__init__(f"{prefix}{message}")


class UnknownLabelError(NeutromapsError, ValueError):
    code = "unknown-label"

    def __init__(self, label, where=None):
        self.label = label
        message = f"unknown label '{label}'"
        if where:
            message += f" in {where}"
        super().__init__(message)


class DuplicateEdgeError(NeutromapsError, ValueError):
    code = "duplicate-edge"


class SelfLoopError(NeutromapsError, ValueError):
    code = "self-loop"


class KindMismatchError(NeutromapsError, ValueError):
    code = "kind-mismatch"


class ShapeMismatchError(NeutromapsError, ValueError):
    code = "shape-mismatch"


class BlockOverlapError(NeutromapsError, ValueError):
    code = "block-overlap"


class CoefficientOverflowError(NeutromapsError, OverflowError):
    code = "overflow"


class NonConvergenceError(NeutromapsError, RuntimeError):
    code = "non-convergence"

    def __init__(self, iterations):
        self.iterations = iterations
        super().__init__(f"no fixed point or limit cycle within {iterations} iterations")


class ScenarioError(NeutromapsError, ValueError):
    code = "scenario"


class ValidationFailed(NeutromapsError):
    code = "validation"

    def __init__(self, report, source=None):
        self.report = report
        count = len(report.violations)
        message = f"{count} violation(s)"
        if source:
            message += f" in {source}"
        super().__init__(message)
