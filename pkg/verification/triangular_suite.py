"""
Triangular structures: a bivector P of (A, phi0) with [[P, P]]_phi0 = 0.
"""

import logging
from functools import cached_property
from typing import Optional

from algebra.errors import StructureFileError
from algebra.product_bundle import ProductElement
from algebroids.checks import CheckReport, CheckResult
from algebroids.jacobi_pair import build_tm_r, build_tstar_m_r
from bialgebroids.triangular import check_triangular, triangular
from schemas.structure_file import StructureFile, StructureKind
from structure_loader import (
    build_algebroid,
    build_bivector,
    build_cocycle_form,
    build_jacobi,
    glb_pair_to_file,
)
from verification.base_suite import BaseSuite

logger = logging.getLogger(__name__)


class TriangularSuite(BaseSuite):
    """Checks for algebroid or lie_algebra files with a bivector, and for jacobi
    files, read as P = (Lambda, E) on TM x R with phi0 = (0, 1)."""

    def prepare(self) -> None:
        self.jacobi = None
        if self.structure.kind == StructureKind.JACOBI:
            self.jacobi = build_jacobi(self.structure)
            self.algebroid, self.phi0 = build_tm_r(self.jacobi.ctx)
            self.bivector = ProductElement(self.jacobi.bivector, self.jacobi.vector).embed()
        else:
            if self.structure.bivector is None:
                raise StructureFileError("triangular needs a bivector")
            self.algebroid = build_algebroid(self.structure)
            self.phi0 = build_cocycle_form(self.structure, self.algebroid)
            self.bivector = build_bivector(self.structure, self.algebroid)

    @cached_property
    def steps(self) -> CheckReport:
        return check_triangular(self.algebroid, self.phi0, self.bivector)

    def check_cocycle(self) -> CheckResult:
        return self.steps.get('cocycle')

    def check_schouten_vanishes(self) -> CheckResult:
        return self.steps.get('schouten_vanishes')

    def check_dual_bracket_forms_agree(self) -> CheckResult:
        return self.steps.get('dual_bracket_forms_agree')

    def check_anchor_composition(self) -> CheckResult:
        return self.steps.get('anchor_composition')

    def check_glb(self) -> CheckResult:
        return self.steps.get('glb')

    def check_canonical_dual(self) -> CheckResult:
        """For a Jacobi input the triangular dual is T*M x R and X0 = (-E, 0)."""
        if self.jacobi is None:
            return self.skip('canonical_dual', 'input is not a jacobi file')
        if not self.steps.passed:
            return self.skip('canonical_dual', 'the triangular construction failed')
        p = triangular(self.algebroid, self.phi0, self.bivector)
        tstar, x0 = build_tstar_m_r(self.jacobi, verify=False)
        if p.x0 != x0:
            return CheckResult.from_defect('canonical_dual', p.x0 - x0, detail='X0 vs (-E, 0)')
        if p.dual.same_structure(tstar):
            return CheckResult(check_id='canonical_dual', passed=True)
        return CheckResult(check_id='canonical_dual', passed=False,
                           detail='structure functions or anchor differ from T*M x R')

    def output_structure(self) -> Optional[StructureFile]:
        if not self.steps.passed:
            return None
        return glb_pair_to_file(triangular(self.algebroid, self.phi0, self.bivector,
                                           name=f"triangular pair of {self.label}"))
