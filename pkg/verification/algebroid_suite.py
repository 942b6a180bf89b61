"""
Lie algebroid axioms, the CE differential and the phi0-twisted calculus.
"""

import logging
from functools import cached_property
from typing import Optional

from algebra.exterior import MultiForm
from algebroids.checks import CheckReport, CheckResult, first_nonzero
from algebroids.twisted import (
    check_morphism_pair,
    check_twisted_schouten_identities,
    twisted_differential,
)
from structure_loader import build_algebroid, build_cocycle_form
from verification.base_suite import BaseSuite

logger = logging.getLogger(__name__)


class AlgebroidSuite(BaseSuite):
    """Checks for lie_algebra and algebroid files; cocycle_form is optional."""

    def prepare(self) -> None:
        self.algebroid = build_algebroid(self.structure)
        self.phi0: Optional[MultiForm] = None
        if self.structure.cocycle_form is not None:
            self.phi0 = build_cocycle_form(self.structure, self.algebroid)

    @cached_property
    def axioms(self) -> CheckReport:
        return self.algebroid.check_axioms(seed=self.seed, samples=self.samples)

    @cached_property
    def cocycle_ok(self) -> bool:
        return self.phi0 is not None and self.algebroid.is_cocycle(self.phi0)

    def _sample_forms(self):
        a = self.algebroid
        degrees = range(0, min(a.rank, 2) + 1)
        return self.sampler(a.ctx).forms(a.rank, degrees, self.samples)

    def _twisted_skip(self, check_id: str) -> Optional[CheckResult]:
        if self.phi0 is None:
            return self.skip(check_id, 'no cocycle_form given')
        if not self.cocycle_ok:
            return self.skip(check_id, 'cocycle_form is not a cocycle')
        return None

    def check_jacobi_identity(self) -> CheckResult:
        return self.axioms.get('jacobi_identity')

    def check_anchor_homomorphism(self) -> CheckResult:
        return self.axioms.get('anchor_homomorphism')

    def check_jacobi_function_multiples(self) -> CheckResult:
        return self.axioms.get('jacobi_function_multiples')

    def check_d_squared(self) -> CheckResult:
        d = self.algebroid.differential
        return CheckResult.from_defect('d_squared', first_nonzero(
            d(d(form)) for form in self._sample_forms()
        ))

    def check_cocycle(self) -> CheckResult:
        if self.phi0 is None:
            return self.skip('cocycle', 'no cocycle_form given')
        return CheckResult.from_defect('cocycle', self.algebroid.differential(self.phi0),
                                       detail='d(phi0)')

    def check_twisted_d_squared(self) -> CheckResult:
        skipped = self._twisted_skip('twisted_d_squared')
        if skipped:
            return skipped

        def d(form):
            return twisted_differential(self.algebroid, self.phi0, form, check_cocycle=False)

        return CheckResult.from_defect('twisted_d_squared', first_nonzero(
            d(d(form)) for form in self._sample_forms()
        ))

    def check_twisted_schouten_identities(self) -> CheckResult:
        skipped = self._twisted_skip('twisted_schouten_identities')
        if skipped:
            return skipped
        a = self.algebroid
        count = min(self.samples, 4)
        vectors = self.sampler(a.ctx, offset=1).vectors(a.rank, range(1, min(a.rank, 2) + 1), count)
        report = check_twisted_schouten_identities(a, self.phi0, vectors)
        return report.summary('twisted_schouten_identities')

    def check_morphism_pair(self) -> CheckResult:
        skipped = self._twisted_skip('morphism_pair')
        if skipped:
            return skipped
        return check_morphism_pair(self.algebroid, self.phi0).summary('morphism_pair')
