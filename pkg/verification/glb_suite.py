"""
Generalized Lie bialgebroid conditions, duality and the induced Jacobi structure.
"""

import logging
from functools import cached_property
from typing import Optional

from algebroids.checks import CheckReport, CheckResult
from algebroids.jacobi_pair import JacobiStructure, jacobi_bracket
from bialgebroids.glb import (
    GLBPair,
    canonical_pair,
    check_bracket_of_differentials,
    check_duality,
    check_glb,
    check_induced_jacobi,
    check_induced_roundtrip,
    check_lie_derivative_along_differential,
    induced_jacobi,
    induced_jacobi_bracket,
)
from schemas.structure_file import StructureKind
from structure_loader import build_glb_pair, build_jacobi
from verification.base_suite import BaseSuite

logger = logging.getLogger(__name__)


def pair_from_structure(suite: BaseSuite):
    """The pair a glb-style suite works on: the file's own pair, or the canonical
    pair of a Jacobi structure.

    Returns:
        (GLBPair, JacobiStructure or None)
    """
    if suite.structure.kind == StructureKind.JACOBI:
        jacobi = build_jacobi(suite.structure)
        return canonical_pair(jacobi), jacobi
    return build_glb_pair(suite.structure), None


class GLBSuite(BaseSuite):
    """Checks for glb_pair files, and for jacobi files through their canonical pair."""

    def prepare(self) -> None:
        self.jacobi: Optional[JacobiStructure]
        self.pair, self.jacobi = pair_from_structure(self)
        self.pair: GLBPair

    @cached_property
    def conditions(self) -> CheckReport:
        return check_glb(self.pair)

    def check_cocycle_phi0(self) -> CheckResult:
        return self.conditions.get('cocycle_phi0')

    def check_cocycle_x0(self) -> CheckResult:
        return self.conditions.get('cocycle_x0')

    def check_cond_4_1(self) -> CheckResult:
        return self.conditions.get('cond_4_1')

    def check_cond_4_3(self) -> CheckResult:
        return self.conditions.get('cond_4_3')

    def check_cond_4_4(self) -> CheckResult:
        return self.conditions.get('cond_4_4')

    def check_cond_4_2_spot(self) -> CheckResult:
        return self.conditions.get('cond_4_2_spot')

    def check_duality(self) -> CheckResult:
        return check_duality(self.pair).summary('duality')

    def check_induced_jacobi_roundtrip(self) -> CheckResult:
        if self.jacobi is None:
            return self.skip('induced_jacobi_roundtrip', 'input is a glb_pair, not a jacobi file')
        return check_induced_roundtrip(self.jacobi, self.pair)

    def check_induced_jacobi(self) -> CheckResult:
        return check_induced_jacobi(self.pair)

    def check_induced_bracket(self) -> CheckResult:
        """-d_phi0 f . d_*X0 g against the bracket of the induced (Lambda, E)."""
        structure = induced_jacobi(self.pair, verify=False)
        ctx = self.pair.ctx
        functions = [ctx.one()] + [ctx.var(name) for name in ctx.directions]
        functions += [f * g for f in functions[1:] for g in functions[1:]]
        for f in functions:
            for g in functions:
                value = induced_jacobi_bracket(self.pair, f, g) - jacobi_bracket(structure, f, g)
                if value:
                    return CheckResult.from_defect('induced_bracket', value,
                                                   detail=f"f = {f}, g = {g}")
        return CheckResult(check_id='induced_bracket', passed=True)

    def check_lie_derivative_along_differential(self) -> CheckResult:
        return check_lie_derivative_along_differential(self.pair)

    def check_bracket_of_differentials(self) -> CheckResult:
        return check_bracket_of_differentials(self.pair)
