from .ConceptSpace import ConceptSpace
from .ConnectionMatrix import ConnectionMatrix, MapKind
from .StateVector import StateVector
from .HiddenPattern import HiddenPattern, PatternKind, RelationalPattern, Side
from .BamConfig import BamConfig, SignalMode
from .BlockPlan import Block, BlockPlan, ComposeOp, LinkRule
from .RawDataTable import CetdParams, CetdProfile, RawDataTable
from .Scenario import Emit, RunKind, Scenario

__all__ = [
    'BamConfig',
    'Block',
    'BlockPlan',
    'CetdParams',
    'CetdProfile',
    'ComposeOp',
    'ConceptSpace',
    'ConnectionMatrix',
    'Emit',
    'HiddenPattern',
    'LinkRule',
    'MapKind',
    'PatternKind',
    'RawDataTable',
    'RelationalPattern',
    'RunKind',
    'Scenario',
    'Side',
    'SignalMode',
    'StateVector',
]
