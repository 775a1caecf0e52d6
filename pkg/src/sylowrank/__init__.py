"""Sylow 2-subgroups of classical groups in odd characteristic, and their 2-ranks."""

from .catalog import FamilySpec, TableEntry, construct_sylow, table_entry, verify
from .errors import (
    BadParameter,
    CapExceeded,
    ContextMismatch,
    GroupError,
    InvalidAction,
    MalformedInput,
    PreconditionFailed,
    UnsupportedCase,
)
from .groups import Group, closure
from .rank import RankReport, normal_rank, rank, rank_report

__version__ = "0.1.0"

__all__ = [
    "BadParameter", "CapExceeded", "ContextMismatch", "FamilySpec", "Group", "GroupError",
    "InvalidAction", "MalformedInput", "PreconditionFailed", "RankReport", "TableEntry",
    "UnsupportedCase", "closure", "construct_sylow", "normal_rank", "rank", "rank_report",
    "table_entry", "verify",
]
