"""
Generalized Lie bialgebras: generalized Lie bialgebroids over a point.

Solutions (r, X0bar) of

    [r, r] - 2 X0bar ^ r = 0,    [X0bar, r] = 0

on a Lie algebra h give a generalized Lie bialgebra on g = h x R (the
triangular pair of P = (r, X0bar) with phi0 = (0, 1)), and, when X0bar is
central, one on (h, h*) directly.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from algebra.errors import DegreeError, RingMismatchError
from algebra.exterior import (
    MultiForm,
    Multivector,
    contract_form,
    evaluate,
    interior,
    pair,
    sharp,
    wedge,
)
from algebra.product_bundle import ProductElement
from algebra.scalar_ring import RingContext
from algebroids.algebroid import Algebroid
from algebroids.checks import CheckReport, CheckResult
from bialgebroids.glb import (
    GLBPair,
    check_bracket_compatibility,
    dual_differential,
)
from bialgebroids.triangular import triangular

logger = logging.getLogger(__name__)

POINT = RingContext(())


@dataclass(frozen=True)
class YangBaxterData:
    """A Lie algebra h with r in ^2 h and X0bar in h."""
    algebra: Algebroid
    r: Multivector
    xbar0: Multivector
    name: Optional[str] = None

    def __post_init__(self):
        if not self.algebra.is_point_base():
            raise RingMismatchError("Yang-Baxter data lives on a Lie algebra (no base variables)")
        if self.r.degree != 2 and self.r.coeffs:
            raise DegreeError(f"r must be a bivector, got degree {self.r.degree}")
        if self.xbar0.degree != 1 and self.xbar0.coeffs:
            raise DegreeError(f"X0bar must be a vector, got degree {self.xbar0.degree}")

    @property
    def rank(self) -> int:
        return self.algebra.rank


def _basis(rank: int, *indices: int) -> Multivector:
    return Multivector.basis(POINT, rank, *indices)


def heisenberg() -> YangBaxterData:
    """Heisenberg algebra [e1, e2] = e3 with r = e1^e2, X0bar = -e3."""
    h = Algebroid.lie_algebra(3, {(1, 2): [0, 0, 1]}, name='heisenberg')
    return YangBaxterData(h, _basis(3, 1, 2), -_basis(3, 3), name='heisenberg')


def su2_u2() -> YangBaxterData:
    """su(2) in the basis (i/2) sigma_k with r = e1^e2, X0bar = e3."""
    h = Algebroid.lie_algebra(3, {
        (1, 2): [0, 0, -1],
        (1, 3): [0, 1, 0],
        (2, 3): [-1, 0, 0],
    }, name='su2')
    return YangBaxterData(h, _basis(3, 1, 2), _basis(3, 3), name='su2_u2')


def gl2() -> YangBaxterData:
    """gl(2, R) with r = e1^e3 + (e1 - 1/2 e3)^e4 and X0bar = -e4 (e4 central)."""
    h = Algebroid.lie_algebra(4, {
        (1, 2): [0, 0, 1, 0],
        (1, 3): [-2, 0, 0, 0],
        (2, 3): [0, 2, 0, 0],
    }, name='gl2')
    shifted = _basis(4, 1) - _basis(4, 3) * Fraction(1, 2)
    r = _basis(4, 1, 3) + wedge(shifted, _basis(4, 4))
    return YangBaxterData(h, r, -_basis(4, 4), name='gl2')


BUILTIN_EXAMPLES = {
    'heisenberg': heisenberg,
    'su2_u2': su2_u2,
    'gl2': gl2,
}


def coad(h: Algebroid, x: Multivector, alpha: MultiForm) -> MultiForm:
    """(coad_X a)(Y) = -a([X, Y])."""
    components = [-pair(alpha, h.bracket(x, h.generator(k))) for k in range(1, h.rank + 1)]
    return MultiForm.from_components(h.ctx, components)


def yb_check(data: YangBaxterData) -> CheckReport:
    """[r, r] - 2 X0bar ^ r = 0 and [X0bar, r] = 0."""
    h = data.algebra
    report = CheckReport(subject=f"Yang-Baxter equations for {data.name}")
    equation = h.schouten(data.r, data.r) - wedge(data.xbar0, data.r) * 2
    report.add(CheckResult.from_defect('yb_equation', equation, detail='[r,r] - 2 X0bar^r'))
    report.add(CheckResult.from_defect('yb_invariance', h.schouten(data.xbar0, data.r),
                                       detail='[X0bar, r]'))
    return report


def extend_by_line(h: Algebroid) -> Algebroid:
    """g = h x R with [(X, a), (Y, b)] = ([X, Y], 0)."""
    rank = h.rank + 1
    structure = {key: value.with_rank(rank) for key, value in h.structure_functions().items()}
    return Algebroid.lie_algebra(rank, structure, name=f"{h.name} x R")


def yb_construct(data: YangBaxterData) -> GLBPair:
    """((h x R, (0,1)), ((h x R)*, (-X0bar, 0))) as the triangular pair of P = (r, X0bar).

    Raises:
        UnverifiedStructureError: (r, X0bar) fails yb_check
    """
    yb_check(data).require(f"{data.name}: (r, X0bar) does not solve the Yang-Baxter equations")
    g = extend_by_line(data.algebra)
    unit = MultiForm.basis(POINT, g.rank, g.rank)
    bivector = ProductElement(data.r, data.xbar0).embed()
    return triangular(g, unit, bivector, name=f"{data.name} on h x R")


def yb_dual_bracket_closed_form(data: YangBaxterData, a: ProductElement,
                                b: ProductElement) -> ProductElement:
    """[(a, l), (b, m)]_* = (coad_{#a} b - coad_{#b} a - i_X0bar(a^b)
    - m coad_X0bar a + l coad_X0bar b, -r(a, b))."""
    h, r, xbar0 = data.algebra, data.r, data.xbar0
    alpha, lam = a.first, a.second.scalar()
    beta, mu = b.first, b.second.scalar()
    first = (coad(h, sharp(r, alpha), beta)
             - coad(h, sharp(r, beta), alpha)
             - interior(xbar0, wedge(alpha, beta))
             - coad(h, xbar0, alpha) * mu
             + coad(h, xbar0, beta) * lam)
    second = MultiForm.from_scalar(-evaluate(r, alpha, beta), h.rank)
    return ProductElement(first, second)


def yb_center_dual_bracket(data: YangBaxterData, alpha: MultiForm, beta: MultiForm) -> MultiForm:
    """[a, b]_h* = coad_{#a} b - coad_{#b} a - i_X0bar(a^b)."""
    h = data.algebra
    return (coad(h, sharp(data.r, alpha), beta)
            - coad(h, sharp(data.r, beta), alpha)
            - interior(data.xbar0, wedge(alpha, beta)))


def check_central(data: YangBaxterData) -> CheckResult:
    h = data.algebra
    for i in range(1, h.rank + 1):
        value = h.bracket(data.xbar0, h.generator(i))
        if value:
            return CheckResult.from_defect('x0_central', value, detail=f"[X0bar, e{i}] = {value}")
    return CheckResult(check_id='x0_central', passed=True)


def yb_center_reduce(data: YangBaxterData) -> GLBPair:
    """((h, 0), (h*, -X0bar)) for central X0bar.

    Raises:
        UnverifiedStructureError: X0bar is not central (witness names the generator),
            or [r, r] - 2 X0bar ^ r != 0
    """
    h = data.algebra
    report = CheckReport(subject=f"central reduction of {data.name}")
    report.add(check_central(data))
    report.require(f"{data.name}: X0bar is not in the center")
    report.add(yb_check(data).get('yb_equation'))
    report.require(f"{data.name}: [r,r] - 2 X0bar^r != 0")

    structure = {}
    for i, j in combinations(range(1, h.rank + 1), 2):
        value = yb_center_dual_bracket(data, h.dual_generator(i), h.dual_generator(j))
        if value:
            structure[(i, j)] = value.transposed()
    dual = Algebroid.lie_algebra(h.rank, structure, name=f"{h.name}*")
    return GLBPair(h, dual, h.zero_form(), -data.xbar0, name=f"{data.name} central reduction")


def check_glb_point(p: GLBPair) -> CheckReport:
    """Generalized Lie bialgebra conditions on all basis elements.

    Raises:
        RingMismatchError: the base has variables
    """
    if not p.algebroid.is_point_base():
        raise RingMismatchError(f"{p.label} is not over a point: directions {p.ctx.directions}")
    report = CheckReport(subject=p.label)
    for check_id, algebra, form in (('cocycle_phi0', p.algebroid, p.phi0),
                                    ('cocycle_x0', p.dual, p.x0.transposed())):
        report.add(CheckResult.from_defect(check_id, algebra.differential(form)))
    report.add(check_bracket_compatibility(p, check_id='point_bracket_compatibility'))
    report.add(CheckResult.from_defect('cocycles_annihilate', pair(p.phi0, p.x0),
                                       detail='phi0(X0)'))

    defect, where = None, None
    for i in range(1, p.rank + 1):
        x = p.algebroid.generator(i)
        value = contract_form(p.phi0, dual_differential(p, x)) + p.algebroid.bracket(p.x0, x)
        if value:
            defect, where = value, i
            break
    report.add(CheckResult.from_defect('cocycle_action', defect,
                                       detail=f"on e{where}" if where else None))
    return report


def check_dual_closed_form(data: YangBaxterData, p: Optional[GLBPair] = None) -> CheckResult:
    """The constructed dual bracket of h x R against its closed form on dual generator pairs."""
    p = p or yb_construct(data)
    g = p.algebroid
    n = data.rank
    for i, j in combinations(range(1, g.rank + 1), 2):
        built = ProductElement.split(p.dual.generator_bracket(i, j).transposed())
        expected = yb_dual_bracket_closed_form(data,
                                               ProductElement.split(g.dual_generator(i)),
                                               ProductElement.split(g.dual_generator(j)))
        if built != expected:
            return CheckResult.from_defect('dual_bracket_closed_form', built - expected,
                                           detail=f"dual generators ({i}, {j}) of rank {n + 1}")
    return CheckResult(check_id='dual_bracket_closed_form', passed=True)


__all__ = [
    'YangBaxterData',
    'heisenberg',
    'su2_u2',
    'gl2',
    'BUILTIN_EXAMPLES',
    'coad',
    'yb_check',
    'extend_by_line',
    'yb_construct',
    'yb_dual_bracket_closed_form',
    'yb_center_dual_bracket',
    'check_central',
    'yb_center_reduce',
    'check_glb_point',
    'check_dual_closed_form',
]
