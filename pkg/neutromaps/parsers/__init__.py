from .matrix import load_matrix, load_valid_matrix, parse_matrix
from .plan import load_plan, load_valid_plan, parse_plan
from .scenario import load_scenario, parse_scenario
from .table import load_table, parse_table
from .text import normalise_text

__all__ = [
    'load_matrix',
    'load_plan',
    'load_scenario',
    'load_table',
    'load_valid_matrix',
    'load_valid_plan',
    'normalise_text',
    'parse_matrix',
    'parse_plan',
    'parse_scenario',
    'parse_table',
]
