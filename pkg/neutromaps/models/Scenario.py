import enum
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from ..algebra import SIMPLE_POLICY, ThresholdPolicy
from .BamConfig import BamConfig
from .BlockPlan import BlockPlan, ComposeOp, LinkRule
from .ConnectionMatrix import ConnectionMatrix, MapKind
from .HiddenPattern import Side
from .RawDataTable import CetdParams, RawDataTable


class RunKind(enum.Enum):
    FCM = "fcm"
    NCM = "ncm"
    FRM = "frm"
    NRM = "nrm"
    BAM = "bam"
    CETD = "cetd"
    COMPOSE = "compose"

    @property
    def map_kind(self) -> Optional[MapKind]:
        return {
            RunKind.FCM: MapKind.COGNITIVE,
            RunKind.NCM: MapKind.COGNITIVE,
            RunKind.FRM: MapKind.RELATIONAL,
            RunKind.NRM: MapKind.RELATIONAL,
            RunKind.BAM: MapKind.BAM,
        }.get(self)

    @property
    def allows_indeterminacy(self) -> bool:
        return self in (RunKind.NCM, RunKind.NRM, RunKind.COMPOSE)


class Emit(enum.Enum):
    TRACE = "trace"
    DOT = "dot"
    SUMMARY = "summary"
    MATRIX = "matrix"


@dataclass(frozen=True)
class Scenario:
    """One fully resolved run: every referenced file is already loaded.

    ``side`` of ``None`` resolves seed labels against the row space first.
    ``max_iters`` of ``None`` uses the engine default.
    """
    kind: RunKind
    path: Optional[str] = None
    matrix: Optional[ConnectionMatrix] = None
    matrices: Tuple[ConnectionMatrix, ...] = ()
    compose: Optional[ComposeOp] = None
    plan: Optional[BlockPlan] = None
    rule: LinkRule = LinkRule.REAL_FIRST
    transpose_b: bool = False
    seed: Tuple[str, ...] = ()
    side: Optional[Side] = None
    bam_input: Tuple[int, ...] = ()
    bam: Optional[BamConfig] = None
    policy: ThresholdPolicy = SIMPLE_POLICY
    table: Optional[RawDataTable] = None
    cetd: Optional[CetdParams] = None
    max_iters: Optional[int] = None
    emit: FrozenSet[Emit] = frozenset()

    def emits(self, what: Emit) -> bool:
        return what in self.emit
