from .dot import export_dot
from .matrix import serialize_matrix
from .report import render_report
from .trace import render_summary, render_sweep, render_trace

__all__ = [
    'export_dot',
    'render_report',
    'render_summary',
    'render_sweep',
    'render_trace',
    'serialize_matrix',
]
