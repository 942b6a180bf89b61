"""
Lie bialgebroids over M x R built from generalized Lie bialgebroids.
"""

import logging
from functools import cached_property

from algebroids.checks import CheckReport, CheckResult, first_nonzero
from bialgebroids.glb import check_glb
from bialgebroids.time_extension import (
    BialgebroidizationResult,
    bar_bivector_identity_defect,
    bar_differential_closed_form,
    bar_extension,
    bialgebroidize,
    check_extension_equivalence,
    check_psi_isomorphism,
    check_psi_transport,
    check_time_derivative_rules,
    hat_differential_closed_form,
    hat_extension,
    time_lift,
)
from verification.base_suite import BaseSuite
from verification.glb_suite import pair_from_structure

logger = logging.getLogger(__name__)


class BialgebroidizeSuite(BaseSuite):
    """Checks for glb_pair files, and for jacobi files through their canonical pair."""

    def prepare(self) -> None:
        self.pair, self.jacobi = pair_from_structure(self)
        self.algebroid = self.pair.algebroid
        self.phi0 = self.pair.phi0
        self.lifted = time_lift(self.algebroid)

    @cached_property
    def conditions(self) -> CheckReport:
        return check_glb(self.pair)

    @cached_property
    def result(self) -> BialgebroidizationResult:
        return bialgebroidize(self.pair, verify=False)

    def _count(self) -> int:
        return max(1, min(self.samples, 5))

    def _forms(self, offset: int):
        rank = self.algebroid.rank
        degrees = range(0, min(rank, 2) + 1)
        return self.sampler(self.lifted.ctx, offset=offset).forms(rank, degrees, self._count())

    def _sections(self, offset: int, degrees=(1,)):
        rank = self.algebroid.rank
        return self.sampler(self.lifted.ctx, offset=offset).vectors(rank, degrees, self._count())

    def check_glb(self) -> CheckResult:
        return self.conditions.summary('glb')

    def check_bialgebroid_compatibility(self) -> CheckResult:
        return self.result.report.get('bialgebroid_compatibility')

    def check_poissonization_match(self) -> CheckResult:
        return self.result.report.get('poissonization_match')

    def check_verdicts_agree(self) -> CheckResult:
        bialgebroid = self.result.report.get('bialgebroid_compatibility').passed
        generalized = self.conditions.passed
        if bialgebroid == generalized:
            return CheckResult(check_id='verdicts_agree', passed=True)
        return CheckResult(check_id='verdicts_agree', passed=False,
                           detail=f"bialgebroid={bialgebroid}, glb={generalized}")

    def check_psi_transport(self) -> CheckResult:
        return check_psi_transport(self.pair)

    def check_psi_isomorphism(self) -> CheckResult:
        report = check_psi_isomorphism(self.algebroid, self.phi0, self._sections(1))
        return report.summary('psi_isomorphism')

    def check_bar_differential_closed_form(self) -> CheckResult:
        bar = bar_extension(self.algebroid, self.phi0, require_cocycle_form=False)
        return CheckResult.from_defect('bar_differential_closed_form', first_nonzero(
            bar_differential_closed_form(self.algebroid, self.phi0, form) - bar.differential(form)
            for form in self._forms(2)
        ))

    def check_hat_differential_closed_form(self) -> CheckResult:
        hat = hat_extension(self.algebroid, self.phi0, require_cocycle_form=False)
        return CheckResult.from_defect('hat_differential_closed_form', first_nonzero(
            hat_differential_closed_form(self.algebroid, self.phi0, form) - hat.differential(form)
            for form in self._forms(3)
        ))

    def check_bar_bivector_identity(self) -> CheckResult:
        sections = self._sections(4)
        bivectors = self._sections(5, degrees=(2,))
        return CheckResult.from_defect('bar_bivector_identity', first_nonzero(
            bar_bivector_identity_defect(self.algebroid, self.phi0, x, bivector)
            for x in sections for bivector in bivectors
        ))

    def check_time_derivative_rules(self) -> CheckResult:
        vectors = self._sections(6, degrees=(0, 1, 2))
        report = check_time_derivative_rules(self.lifted, vectors, self._forms(7))
        return report.summary('time_derivative_rules')

    def check_extension_equivalence(self) -> CheckResult:
        report = check_extension_equivalence(self.algebroid, self.phi0,
                                             seed=self.seed, samples=self.samples)
        return report.get('verdicts_agree')
