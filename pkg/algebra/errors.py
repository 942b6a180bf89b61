"""
Exception hierarchy shared by the algebra, algebroid and bialgebroid packages.
"""
from typing import Optional


class AlgebroidError(Exception):
    """Base class for every error raised by the library."""


class ParseError(AlgebroidError, ValueError):
    """A polynomial string could not be parsed."""

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
            if text:
                message = f"{message}: {text!r}"
        super().__init__(message)


class UnknownVariableError(ParseError):
    """A variable name not declared in the ring."""


class RingMismatchError(AlgebroidError, ValueError):
    """Operands live in different coefficient rings."""


class RankMismatchError(AlgebroidError, ValueError):
    """Exterior elements over modules of different rank."""


class DegreeError(AlgebroidError, ValueError):
    """An operand has the wrong exterior degree or kind."""


class CocycleError(AlgebroidError, ValueError):
    """A twisted operation was given a section that is not a 1-cocycle."""


class ConsistencyError(AlgebroidError):
    """Two independent computation routes disagree."""


class UnverifiedStructureError(AlgebroidError):
    """A structure failed the verification required by an operation.

    Attributes:
        report: The failing ``CheckReport``; its first failure names the witness
    """

    def __init__(self, message: str, report=None):
        self.report = report
        if report is not None:
            failure = report.first_failure()
            if failure is not None:
                message = f"{message} ({failure.check_id}: {failure.witness_text()})"
        super().__init__(message)


class StructureFileError(AlgebroidError, ValueError):
    """A schema-valid structure file whose content is not usable."""
