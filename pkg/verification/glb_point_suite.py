"""
Generalized Lie bialgebras: the bialgebroid conditions over a point.
"""

import logging
from functools import cached_property

from algebra.errors import StructureFileError
from algebroids.checks import CheckReport, CheckResult
from bialgebroids.lie_bialgebras import check_glb_point, yb_construct
from schemas.structure_file import StructureKind
from structure_loader import build_glb_pair, build_yb_data
from verification.base_suite import BaseSuite

logger = logging.getLogger(__name__)


class GLBPointSuite(BaseSuite):
    """Checks for point-base glb_pair files, and for yb_data files through the
    pair built on h x R."""

    def prepare(self) -> None:
        if self.structure.kind == StructureKind.YB_DATA:
            self.pair = yb_construct(build_yb_data(self.structure))
        else:
            self.pair = build_glb_pair(self.structure)
        if not self.pair.algebroid.is_point_base():
            raise StructureFileError(
                f"glb-point needs a point base, got variables {list(self.pair.ctx.directions)}"
            )

    @cached_property
    def conditions(self) -> CheckReport:
        return check_glb_point(self.pair)

    def check_cocycle_phi0(self) -> CheckResult:
        return self.conditions.get('cocycle_phi0')

    def check_cocycle_x0(self) -> CheckResult:
        return self.conditions.get('cocycle_x0')

    def check_point_bracket_compatibility(self) -> CheckResult:
        return self.conditions.get('point_bracket_compatibility')

    def check_cocycles_annihilate(self) -> CheckResult:
        return self.conditions.get('cocycles_annihilate')

    def check_cocycle_action(self) -> CheckResult:
        return self.conditions.get('cocycle_action')

    def check_duality(self) -> CheckResult:
        return check_glb_point(self.pair.swapped()).summary('duality')
