from .algebra import (COMBINED_POLICY, INDET, OFF, ON, SIMPLE_POLICY, NegativeMode, NeutroValue, ThresholdPolicy,
                      TieRule, TriState, collapse, neutro_add, neutro_dot, neutro_mul)
from .cetd import atd, cetd_profile, column_stats, rtd
from .composition import assemble_disjoint, assemble_overlap, combine, link, transpose
from .concepts import from_edges, validate, zero_state
from .dynamics import bam_signal, run_bam, run_cognitive, run_relational, sweep, threshold_update
from .renderers import export_dot
from .runner import run_scenario

__all__ = [
    'COMBINED_POLICY',
    'INDET',
    'NegativeMode',
    'NeutroValue',
    'OFF',
    'ON',
    'SIMPLE_POLICY',
    'ThresholdPolicy',
    'TieRule',
    'TriState',
    'assemble_disjoint',
    'assemble_overlap',
    'atd',
    'bam_signal',
    'cetd_profile',
    'collapse',
    'column_stats',
    'combine',
    'export_dot',
    'from_edges',
    'link',
    'neutro_add',
    'neutro_dot',
    'neutro_mul',
    'rtd',
    'run_bam',
    'run_cognitive',
    'run_relational',
    'run_scenario',
    'sweep',
    'threshold_update',
    'transpose',
    'validate',
    'zero_state',
]
