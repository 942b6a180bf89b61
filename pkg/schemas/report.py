"""
Machine-readable verification reports.
"""

from enum import Enum
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class WitnessEntry(BaseModel):
    """One term of a defect: coeff * e_indices (indices empty for a scalar)."""
    model_config = ConfigDict(extra='forbid')

    indices: List[int]
    coeff: str


class CheckRecord(BaseModel):
    model_config = ConfigDict(extra='forbid', use_enum_values=True)

    check_id: str
    description: str = ""
    status: CheckStatus
    # Error text when the check raised instead of producing a defect
    witness: Optional[Union[List[WitnessEntry], str]] = None
    detail: Optional[str] = None
    elapsed_ms: Optional[float] = None
    # Reported, but a failure does not fail the run
    informational: Optional[bool] = None


class Report(BaseModel):
    """All check records of one suite run, in declaration order."""
    model_config = ConfigDict(extra='forbid', use_enum_values=True)

    suite: str
    structure: str
    kind: str
    seed: int
    checks: List[CheckRecord] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures()

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def failures(self) -> List[CheckRecord]:
        return [record for record in self.checks if record.status == CheckStatus.FAIL.value
                and not record.informational]

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True)
