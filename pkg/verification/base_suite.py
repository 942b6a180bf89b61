"""
Base class for verification suites.
All suites run by the command line inherit from this class.
"""

from abc import ABC, abstractmethod
from dataclasses import replace
from typing import List, Optional

import config
from algebra.scalar_ring import RingContext
from algebroids.checks import CheckResult
from schemas.structure_file import StructureFile
from verification.sampling import Sampler


class BaseSuite(ABC):
    """Abstract base class for verification suites.

    A suite is built from one structure file. Each check it declares in
    suites.yaml is a ``check_<id>`` method returning a ``CheckResult``.
    """

    def __init__(self, structure: StructureFile, seed: int = config.DEFAULT_SEED,
                 samples: int = config.PROPERTY_SAMPLES):
        self.structure = structure
        self.seed = seed
        self.samples = samples
        self.notes: List[str] = []
        self.prepare()

    @property
    def label(self) -> str:
        return self.structure.name or self.structure.kind.value

    @abstractmethod
    def prepare(self) -> None:
        """Build the library objects from the structure file.

        Raises:
            StructureFileError: The file content does not fit this suite
            UnverifiedStructureError: A construction precondition failed
        """
        pass

    def run_check(self, check_id: str) -> CheckResult:
        method = getattr(self, f"check_{check_id}", None)
        if method is None:
            raise AttributeError(f"{type(self).__name__} has no check '{check_id}'")
        result = method()
        if result.check_id != check_id:
            result = replace(result, check_id=check_id)
        return result

    def output_structure(self) -> Optional[StructureFile]:
        """A structure file produced by the suite, written under --output."""
        return None

    def sampler(self, ctx: RingContext, offset: int = 0) -> Sampler:
        """A fresh sampler, so each check draws the same elements whatever ran before it."""
        return Sampler(ctx, seed=self.seed + offset)

    @staticmethod
    def skip(check_id: str, reason: str) -> CheckResult:
        return CheckResult.skip(check_id, reason)
