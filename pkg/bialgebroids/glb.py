"""
Generalized Lie bialgebroids ((A, phi0), (A*, X0)).

Sections of A double as forms of A* and the other way round: the generator
frame of A* is dual to that of A, so ``P.transposed()`` reads a multivector of A
as a cochain of A*. X0 is stored as a section of A and phi0 as a form of A.

The compatibility conditions checked here:

    d_*X0 [[X, Y]] = [[X, d_*X0 Y]]_phi0 - [[Y, d_*X0 X]]_phi0
    phi0(X0) = 0,  rho(X0) = -rho_*(phi0)
    (L_*)_phi0 X + [[X0, X]] = 0
    (L_*X0)_phi0 P + (L_phi0)_X0 P = 0        (spot-checked on low degrees)
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from algebra.errors import DegreeError, RankMismatchError, RingMismatchError
from algebra.exterior import MultiForm, Multivector, pair, wedge
from algebra.scalar_ring import Scalar
from algebroids.algebroid import Algebroid
from algebroids.checks import CheckReport, CheckResult, first_nonzero
from algebroids.jacobi_pair import (
    JacobiStructure,
    build_tm_r,
    build_tstar_m_r,
    verify_jacobi,
)
from algebroids.twisted import (
    twisted_differential,
    twisted_lie_derivative_form,
    twisted_schouten,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GLBPair:
    """A dual pair of algebroids with cocycles phi0 of A and X0 of A*.

    Attributes:
        algebroid: A
        dual: A*, same rank and ring, generators dual to those of A
        phi0: 1-form of A
        x0: section of A, read as a 1-form of A*
    """
    algebroid: Algebroid
    dual: Algebroid
    phi0: MultiForm
    x0: Multivector
    name: Optional[str] = None

    def __post_init__(self):
        a, astar = self.algebroid, self.dual
        if a.rank != astar.rank:
            raise RankMismatchError(f"Dual ranks differ: {a.rank} vs {astar.rank}")
        if a.ctx != astar.ctx:
            raise RingMismatchError("A and A* must live over the same base ring")
        if not isinstance(self.phi0, MultiForm) or (self.phi0.degree != 1 and self.phi0.coeffs):
            raise DegreeError("phi0 must be a 1-form of A")
        if not isinstance(self.x0, Multivector) or (self.x0.degree != 1 and self.x0.coeffs):
            raise DegreeError("X0 must be a section of A")
        for label, element in (('phi0', self.phi0), ('X0', self.x0)):
            if element.rank != a.rank or element.ctx != a.ctx:
                raise RankMismatchError(f"{label} does not live on the frame of {a.name}")

    @property
    def rank(self) -> int:
        return self.algebroid.rank

    @property
    def ctx(self):
        return self.algebroid.ctx

    @property
    def label(self) -> str:
        return self.name or f"({self.algebroid.name}, {self.dual.name})"

    def swapped(self) -> 'GLBPair':
        """((A*, X0), (A, phi0))."""
        return GLBPair(self.dual, self.algebroid, self.x0.transposed(), self.phi0.transposed(),
                       name=f"dual of {self.label}")


# Operators of A* acting on multivectors of A


def dual_differential(p: GLBPair, vector: Multivector) -> Multivector:
    """d_* on Gamma(^k A)."""
    return p.dual.differential(vector.transposed()).transposed()


def dual_twisted_differential(p: GLBPair, vector: Multivector) -> Multivector:
    """d_*X0 P = d_* P + X0 ^ P."""
    return dual_differential(p, vector) + wedge(p.x0, vector)


def dual_lie_derivative(p: GLBPair, form: MultiForm, vector: Multivector) -> Multivector:
    """(L_*)_a P for a section a of A* (a 1-form of A)."""
    return p.dual.lie_derivative(form.transposed(), vector.transposed()).transposed()


def dual_twisted_lie_derivative(p: GLBPair, form: MultiForm, vector: Multivector) -> Multivector:
    """(L_*X0)_a P."""
    return twisted_lie_derivative_form(p.dual, p.x0.transposed(), form.transposed(),
                                       vector.transposed(), check_cocycle=False).transposed()


def twisted_differential_of(p: GLBPair, f: Scalar) -> MultiForm:
    """d_phi0 f = df + f phi0."""
    return twisted_differential(p.algebroid, p.phi0, p.algebroid.scalar_form(f),
                                check_cocycle=False)


def _bracket(p: GLBPair, left: Multivector, right: Multivector) -> Multivector:
    return twisted_schouten(p.algebroid, p.phi0, left, right, check_cocycle=False)


def _coordinates(p: GLBPair) -> List[Scalar]:
    return [p.ctx.var(name) for name in p.ctx.directions]


def _section_pairs(p: GLBPair) -> Iterable[Tuple[str, Multivector, Multivector]]:
    """Generator pairs, then (e_i, x_a e_j) for every coordinate x_a."""
    a = p.algebroid
    for i, j in combinations(range(1, p.rank + 1), 2):
        yield f"(e{i}, e{j})", a.generator(i), a.generator(j)
    for name in p.ctx.directions:
        coordinate = p.ctx.var(name)
        for i in range(1, p.rank + 1):
            for j in range(1, p.rank + 1):
                yield f"(e{i}, {name}*e{j})", a.generator(i), a.generator(j) * coordinate


def _low_degree_multivectors(p: GLBPair) -> Iterable[Tuple[str, Multivector]]:
    a = p.algebroid
    yield '1', a.scalar_vector(1)
    for name in p.ctx.directions:
        yield name, a.scalar_vector(p.ctx.var(name))
    for i in range(1, p.rank + 1):
        yield f"e{i}", a.generator(i)
    for i, j in combinations(range(1, p.rank + 1), 2):
        yield f"e{i}^e{j}", Multivector.basis(p.ctx, p.rank, i, j)


# Individual conditions


def bracket_compatibility_defect(p: GLBPair, x: Multivector, y: Multivector) -> Multivector:
    """d_*X0 [[X, Y]] - [[X, d_*X0 Y]]_phi0 + [[Y, d_*X0 X]]_phi0."""
    lhs = dual_twisted_differential(p, p.algebroid.bracket(x, y))
    rhs = (_bracket(p, x, dual_twisted_differential(p, y))
           - _bracket(p, y, dual_twisted_differential(p, x)))
    return lhs - rhs


def lie_compatibility_defect(p: GLBPair, vector: Multivector) -> Multivector:
    """(L_*X0)_phi0 P + (L_phi0)_X0 P."""
    return (dual_twisted_lie_derivative(p, p.phi0, vector)
            + _bracket(p, p.x0, vector))


def _first_defect(cases, compute):
    for label, *arguments in cases:
        defect = compute(*arguments)
        if defect:
            return defect, label
    return None, None


def check_bracket_compatibility(p: GLBPair, check_id: str = 'cond_4_1') -> CheckResult:
    defect, where = _first_defect(_section_pairs(p),
                                  lambda x, y: bracket_compatibility_defect(p, x, y))
    return CheckResult.from_defect(check_id, defect, detail=f"on {where}" if where else None)


def check_cocycle_anchor(p: GLBPair) -> CheckResult:
    """phi0(X0) = 0 and rho(X0) + rho_*(phi0) = 0."""
    value = pair(p.phi0, p.x0)
    if value:
        return CheckResult.from_defect('cond_4_3', value, detail='phi0(X0) != 0')
    defect = p.algebroid.anchor_vector(p.x0) + p.dual.anchor_vector(p.phi0.transposed())
    return CheckResult.from_defect('cond_4_3', defect, detail='rho(X0) + rho_*(phi0) != 0')


def check_cocycle_action(p: GLBPair) -> CheckResult:
    """(L_*)_phi0 X + [[X0, X]] = 0 on generators."""
    a = p.algebroid
    cases = ((f"e{i}", a.generator(i)) for i in range(1, p.rank + 1))
    defect, where = _first_defect(
        cases, lambda x: dual_lie_derivative(p, p.phi0, x) + a.schouten(p.x0, x)
    )
    return CheckResult.from_defect('cond_4_4', defect, detail=f"on {where}" if where else None)


def check_lie_compatibility(p: GLBPair, check_id: str = 'cond_4_2_spot') -> CheckResult:
    defect, where = _first_defect(_low_degree_multivectors(p),
                                  lambda vector: lie_compatibility_defect(p, vector))
    return CheckResult.from_defect(check_id, defect, detail=f"on {where}" if where else None)


def check_glb(p: GLBPair) -> CheckReport:
    """Run every generalized Lie bialgebroid condition on ``p``."""
    report = CheckReport(subject=p.label)
    for check_id, algebroid, form in (('cocycle_phi0', p.algebroid, p.phi0),
                                      ('cocycle_x0', p.dual, p.x0.transposed())):
        if algebroid.is_cocycle(form):
            report.add(CheckResult(check_id=check_id, passed=True))
        else:
            report.add(CheckResult.from_defect(check_id, algebroid.differential(form),
                                               detail='d of the cocycle'))
    report.add(check_bracket_compatibility(p))
    report.add(check_cocycle_anchor(p))
    report.add(check_cocycle_action(p))
    report.add(check_lie_compatibility(p))
    logger.debug(f"check_glb {p.label}: {[r.status for r in report]}")
    return report


def check_duality(p: GLBPair) -> CheckReport:
    """check_glb on the swapped pair ((A*, X0), (A, phi0))."""
    return check_glb(p.swapped())


# Induced Jacobi structure


def induced_bivector(algebroid: Algebroid, dual: Algebroid) -> Multivector:
    """Lambda(dx_a, dx_b) = -dx_a . d_* x_b on the tangent frame of the base."""
    ctx = algebroid.ctx
    directions = ctx.directions
    rank = len(directions)
    coeffs = {}
    differentials = {}
    for b, name in enumerate(directions, start=1):
        scalar = Multivector.from_scalar(ctx.var(name), algebroid.rank)
        differentials[b] = dual.differential(scalar.transposed()).transposed()
    for a, b in combinations(range(1, rank + 1), 2):
        df = algebroid.function_differential(ctx.var(directions[a - 1]))
        value = -pair(df, differentials[b])
        if value:
            coeffs[(a, b)] = value
    return Multivector(ctx, rank, 2, coeffs)


def induced_jacobi(p: GLBPair, verify: bool = True) -> JacobiStructure:
    """The Jacobi structure (Lambda, E) induced on the base.

    Lambda(df, dg) = -df . d_* g, E = rho(X0).
    On the canonical pair of a Jacobi structure this gives back the negated
    structure (-Lambda, -E), which has the opposite bracket.

    Raises:
        UnverifiedStructureError: ``p`` fails check_glb
    """
    if verify:
        check_glb(p).require(f"{p.label} is not a generalized Lie bialgebroid")
    bivector = induced_bivector(p.algebroid, p.dual)
    vector = p.algebroid.anchor_vector(p.x0)
    return JacobiStructure(p.ctx, bivector, vector, name=f"induced by {p.label}")


def induced_jacobi_bracket(p: GLBPair, f: Scalar, g: Scalar) -> Scalar:
    """{f, g} = -d_phi0 f . d_*X0 g."""
    return -pair(twisted_differential_of(p, f),
                 dual_twisted_differential(p, p.algebroid.scalar_vector(g)))


def canonical_pair(structure: JacobiStructure) -> GLBPair:
    """((TM x R, (0,1)), (T*M x R, (-E,0))) of a Jacobi structure."""
    algebroid, unit = build_tm_r(structure.ctx)
    dual, x0 = build_tstar_m_r(structure)
    return GLBPair(algebroid, dual, unit, x0, name=f"canonical pair of {structure.name or 'J'}")


def check_induced_roundtrip(structure: JacobiStructure, p: Optional[GLBPair] = None) -> CheckResult:
    """The canonical pair induces (-Lambda, -E): the input with the bracket's global sign flipped."""
    p = p or canonical_pair(structure)
    induced = induced_jacobi(p, verify=False)
    defect = first_nonzero([induced.bivector + structure.bivector,
                            induced.vector + structure.vector])
    return CheckResult.from_defect('induced_jacobi_roundtrip', defect,
                                   detail='compared with (-Lambda, -E)')


def check_induced_jacobi(p: GLBPair) -> CheckResult:
    induced = induced_jacobi(p, verify=False)
    report = verify_jacobi(induced.bivector, induced.vector)
    failure = report.first_failure()
    if failure is None:
        return CheckResult(check_id='induced_jacobi', passed=True)
    return CheckResult(check_id='induced_jacobi', passed=False, witness=failure.witness,
                       detail=f"induced structure fails {failure.check_id}")


# Consequences of the compatibility conditions


def check_lie_derivative_along_differential(p: GLBPair) -> CheckResult:
    """(L_*X0)_{d_phi0 f} X = [[X, d_*X0 f]] for coordinates f and generators X."""
    a = p.algebroid
    defect, where = None, None
    for f in [p.ctx.one()] + _coordinates(p):
        df = twisted_differential_of(p, f)
        d_star_f = dual_twisted_differential(p, a.scalar_vector(f))
        for i in range(1, p.rank + 1):
            x = a.generator(i)
            value = dual_twisted_lie_derivative(p, df, x) - a.bracket(x, d_star_f)
            if value:
                defect, where = value, (f.format(), i)
                break
        if defect is not None:
            break
    return CheckResult.from_defect(
        'lie_derivative_along_differential', defect,
        detail=f"f = {where[0]}, X = e{where[1]}" if where else None,
    )


def check_bracket_of_differentials(p: GLBPair) -> CheckResult:
    """[[d_*X0 g, d_*X0 f]] = d_*X0 (d_phi0 f . d_*X0 g) for coordinate pairs."""
    a = p.algebroid
    functions = [p.ctx.one()] + _coordinates(p)
    defect, where = None, None
    for f in functions:
        for g in functions:
            d_star_f = dual_twisted_differential(p, a.scalar_vector(f))
            d_star_g = dual_twisted_differential(p, a.scalar_vector(g))
            inner = pair(twisted_differential_of(p, f), d_star_g)
            value = (a.bracket(d_star_g, d_star_f)
                     - dual_twisted_differential(p, a.scalar_vector(inner)))
            if value:
                defect, where = value, (f.format(), g.format())
                break
        if defect is not None:
            break
    return CheckResult.from_defect(
        'bracket_of_differentials', defect,
        detail=f"f = {where[0]}, g = {where[1]}" if where else None,
    )


def check_canonical_pair_identities(structure: JacobiStructure) -> CheckReport:
    """Compatibility of d_*(-E,0) with the (0,1)-Schouten bracket of TM x R on
    generator pairs, and the vanishing of (L_*(-E,0))_(0,1) + (L_(0,1))_(-E,0) on
    low-degree multivectors."""
    p = canonical_pair(structure)
    report = CheckReport(subject=p.label)
    report.add(check_bracket_compatibility(p, check_id='differential_bracket_compatibility'))
    report.add(check_lie_compatibility(p, check_id='lie_derivatives_cancel'))
    return report


__all__ = [
    'GLBPair',
    'dual_differential',
    'dual_twisted_differential',
    'dual_lie_derivative',
    'dual_twisted_lie_derivative',
    'twisted_differential_of',
    'bracket_compatibility_defect',
    'lie_compatibility_defect',
    'check_bracket_compatibility',
    'check_cocycle_anchor',
    'check_cocycle_action',
    'check_lie_compatibility',
    'check_glb',
    'check_duality',
    'induced_bivector',
    'induced_jacobi',
    'induced_jacobi_bracket',
    'canonical_pair',
    'check_induced_roundtrip',
    'check_induced_jacobi',
    'check_lie_derivative_along_differential',
    'check_bracket_of_differentials',
    'check_canonical_pair_identities',
]
