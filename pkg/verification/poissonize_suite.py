"""
Poissonization of a Jacobi structure: u (Lambda + d/dt ^ E) on M x R.
"""

import logging
from functools import cached_property

from algebra.exterior import Multivector
from algebroids.algebroid import Algebroid
from algebroids.checks import CheckResult
from algebroids.jacobi_pair import poissonize, verify_jacobi
from structure_loader import build_jacobi
from verification.base_suite import BaseSuite

logger = logging.getLogger(__name__)


class PoissonizeSuite(BaseSuite):

    def prepare(self) -> None:
        self.jacobi = build_jacobi(self.structure)

    @cached_property
    def bivector(self) -> Multivector:
        value = poissonize(self.jacobi)
        self.notes.append(f"Poissonization: {value}")
        return value

    def check_jacobi(self) -> CheckResult:
        return verify_jacobi(self.jacobi.bivector, self.jacobi.vector).summary('jacobi')

    def check_poisson(self) -> CheckResult:
        tangent = Algebroid.tangent(self.bivector.ctx)
        return CheckResult.from_defect('poisson', tangent.schouten(self.bivector, self.bivector),
                                       detail='[Pi, Pi]')
