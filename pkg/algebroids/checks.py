"""
Check results produced by the verification operations.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Union

from algebra.errors import UnverifiedStructureError
from algebra.exterior import ExteriorElement
from algebra.product_bundle import ProductElement
from algebra.scalar_ring import Scalar

Defect = Union[ExteriorElement, ProductElement, Scalar, None]


def witness_entries(defect: Defect) -> Optional[List[Dict[str, Any]]]:
    """First nonzero term of a defect, as {indices, coeff} records (None when zero)."""
    if defect is None:
        return None
    if isinstance(defect, Scalar):
        if defect.is_zero():
            return None
        return [{'indices': [], 'coeff': defect.format()}]
    if isinstance(defect, ProductElement):
        defect = defect.embed()
    term = defect.first_term()
    if term is None:
        return None
    indices, coeff = term
    return [{'indices': list(indices), 'coeff': coeff.format()}]


def is_zero_defect(defect: Defect) -> bool:
    if defect is None:
        return True
    return defect.is_zero()


@dataclass
class CheckResult:
    """Outcome of a single identity or axiom check."""
    check_id: str
    passed: bool
    witness: Optional[List[Dict[str, Any]]] = None
    detail: Optional[str] = None
    skipped: bool = False

    @classmethod
    def from_defect(cls, check_id: str, defect: Defect, detail: Optional[str] = None) -> 'CheckResult':
        """Pass when the defect vanishes; otherwise carry its first nonzero term."""
        if is_zero_defect(defect):
            return cls(check_id=check_id, passed=True, detail=None)
        return cls(check_id=check_id, passed=False, witness=witness_entries(defect), detail=detail)

    @classmethod
    def skip(cls, check_id: str, reason: str) -> 'CheckResult':
        return cls(check_id=check_id, passed=True, detail=reason, skipped=True)

    @property
    def status(self) -> str:
        if self.skipped:
            return 'skipped'
        return 'pass' if self.passed else 'fail'

    def witness_text(self) -> str:
        if not self.witness:
            return self.detail or 'no witness'
        entry = self.witness[0]
        return f"({entry['coeff']}) at {entry['indices']}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'check_id': self.check_id,
            'status': self.status,
            'witness': self.witness,
            'detail': self.detail,
        }


@dataclass
class CheckReport:
    """Ordered collection of check results."""
    subject: str
    results: List[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> CheckResult:
        self.results.append(result)
        return result

    def extend(self, other: 'CheckReport') -> None:
        self.results.extend(other.results)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]

    def first_failure(self) -> Optional[CheckResult]:
        return next(iter(self.failures()), None)

    def get(self, check_id: str) -> Optional[CheckResult]:
        return next((r for r in self.results if r.check_id == check_id), None)

    def summary(self, check_id: str) -> CheckResult:
        """The whole report folded into one result that carries the first failure."""
        failure = self.first_failure()
        if failure is None:
            return CheckResult(check_id=check_id, passed=True)
        detail = f"{failure.check_id} fails"
        if failure.detail:
            detail = f"{detail}: {failure.detail}"
        return CheckResult(check_id=check_id, passed=False, witness=failure.witness, detail=detail)

    def require(self, message: Optional[str] = None) -> 'CheckReport':
        """Raise ``UnverifiedStructureError`` unless every check passed."""
        if not self.passed:
            raise UnverifiedStructureError(message or f"{self.subject} failed verification", self)
        return self

    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self.results)

    def __len__(self) -> int:
        return len(self.results)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'subject': self.subject,
            'passed': self.passed,
            'results': [result.to_dict() for result in self.results],
        }


def first_nonzero(defects) -> Defect:
    """The first nonzero defect of an iterable of (defect) values, or None."""
    for defect in defects:
        if not is_zero_defect(defect):
            return defect
    return None
