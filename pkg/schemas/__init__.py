"""
Schemas for structure files and verification reports.
"""

from .structure_file import (
    BracketEntry,
    DualSpec,
    MultivectorEntry,
    RingSpec,
    StructureFile,
    StructureKind,
)
from .report import CheckRecord, CheckStatus, Report, WitnessEntry

__all__ = [
    'StructureFile',
    'StructureKind',
    'RingSpec',
    'BracketEntry',
    'MultivectorEntry',
    'DualSpec',
    'Report',
    'CheckRecord',
    'CheckStatus',
    'WitnessEntry',
]
