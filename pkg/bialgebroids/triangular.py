"""
Triangular generalized Lie bialgebroids.

A bivector P of (A, phi0) with [[P, P]]_phi0 = 0 defines a bracket on A*:

    [phi, psi]_P = i_{#phi} d_phi0 psi - i_{#psi} d_phi0 phi + d_phi0(P(phi, psi))

with anchor rho o #_P, and ((A, phi0), (A*, -#_P(phi0))) is a generalized Lie
bialgebroid.
"""
import logging
from itertools import combinations
from typing import Optional, Tuple

from algebra.errors import ConsistencyError, DegreeError
from algebra.exterior import MultiForm, Multivector, evaluate, interior, sharp
from algebroids.algebroid import Algebroid
from algebroids.checks import CheckReport, CheckResult
from algebroids.twisted import (
    require_cocycle,
    twisted_differential,
    twisted_lie_derivative_form,
    twisted_schouten,
)
from bialgebroids.glb import GLBPair, check_glb

logger = logging.getLogger(__name__)


def triangular_dual_bracket_forms(algebroid: Algebroid, phi0: MultiForm, bivector: Multivector,
                                  phi: MultiForm, psi: MultiForm) -> Tuple[MultiForm, MultiForm]:
    """The dual bracket [phi, psi]_P computed twice.

    Returns:
        (interior-product form, Lie-derivative form)
    """
    sharp_phi = sharp(bivector, phi)
    sharp_psi = sharp(bivector, psi)

    def d(form: MultiForm) -> MultiForm:
        return twisted_differential(algebroid, phi0, form, check_cocycle=False)

    def lie(section: Multivector, form: MultiForm) -> MultiForm:
        return twisted_lie_derivative_form(algebroid, phi0, section, form, check_cocycle=False)

    value = d(algebroid.scalar_form(evaluate(bivector, phi, psi)))
    by_interior = interior(sharp_phi, d(psi)) - interior(sharp_psi, d(phi)) + value
    by_lie = lie(sharp_phi, psi) - lie(sharp_psi, phi) - value
    return by_interior, by_lie


def triangular_dual_bracket(algebroid: Algebroid, phi0: MultiForm, bivector: Multivector,
                            phi: MultiForm, psi: MultiForm) -> MultiForm:
    """[phi, psi]_P.

    Raises:
        ConsistencyError: The interior-product and Lie-derivative forms disagree
    """
    by_interior, by_lie = triangular_dual_bracket_forms(algebroid, phi0, bivector, phi, psi)
    if by_interior != by_lie:
        raise ConsistencyError(
            f"Dual bracket forms disagree on ({phi}, {psi}): {by_interior} vs {by_lie}"
        )
    return by_interior


def _schouten_report(algebroid: Algebroid, phi0: MultiForm, bivector: Multivector) -> CheckReport:
    report = CheckReport(subject=f"[[P, P]]_phi0 on {algebroid.name}")
    defect = twisted_schouten(algebroid, phi0, bivector, bivector, check_cocycle=False)
    report.add(CheckResult.from_defect('schouten_vanishes', defect, detail='[[P,P]]_phi0'))
    return report


def triangular(algebroid: Algebroid, phi0: MultiForm, bivector: Multivector,
               name: Optional[str] = None) -> GLBPair:
    """The triangular pair ((A, phi0), (A*_P, -#_P(phi0))).

    Raises:
        CocycleError: phi0 is not a cocycle of A
        UnverifiedStructureError: [[P, P]]_phi0 != 0, carrying the defect trivector
    """
    if bivector.degree != 2 and bivector.coeffs:
        raise DegreeError(f"P must be a bivector, got degree {bivector.degree}")
    require_cocycle(algebroid, phi0)
    _schouten_report(algebroid, phi0, bivector).require(
        f"P does not satisfy [[P, P]]_phi0 = 0 on {algebroid.name}"
    )

    rank = algebroid.rank
    structure = {}
    for i, j in combinations(range(1, rank + 1), 2):
        value = triangular_dual_bracket(algebroid, phi0, bivector,
                                        algebroid.dual_generator(i), algebroid.dual_generator(j))
        if value:
            structure[(i, j)] = value.transposed()
    anchor = [algebroid.anchor_of(sharp(bivector, algebroid.dual_generator(i)))
              for i in range(1, rank + 1)]
    logger.debug(f"Triangular dual of {algebroid.name}: {len(structure)} nonzero brackets")

    dual = Algebroid(algebroid.ctx, rank, anchor, structure, name=f"{algebroid.name}*_P")
    x0 = -sharp(bivector, phi0)
    return GLBPair(algebroid, dual, phi0, x0, name=name or f"triangular pair on {algebroid.name}")


def check_triangular(algebroid: Algebroid, phi0: MultiForm, bivector: Multivector) -> CheckReport:
    """Every step of the triangular construction as a report.

    Later items are skipped when a precondition fails.
    """
    report = CheckReport(subject=f"triangular structure on {algebroid.name}")
    if algebroid.is_cocycle(phi0):
        report.add(CheckResult(check_id='cocycle', passed=True))
    else:
        report.add(CheckResult.from_defect('cocycle', algebroid.differential(phi0)))
        for check_id in ('schouten_vanishes', 'dual_bracket_forms_agree',
                         'anchor_composition', 'glb'):
            report.add(CheckResult.skip(check_id, 'phi0 is not a cocycle'))
        return report

    schouten = _schouten_report(algebroid, phi0, bivector)
    report.extend(schouten)
    if not schouten.passed:
        for check_id in ('dual_bracket_forms_agree', 'anchor_composition', 'glb'):
            report.add(CheckResult.skip(check_id, '[[P, P]]_phi0 != 0'))
        return report

    mismatch, where = None, None
    for i, j in combinations(range(1, algebroid.rank + 1), 2):
        by_interior, by_lie = triangular_dual_bracket_forms(
            algebroid, phi0, bivector, algebroid.dual_generator(i), algebroid.dual_generator(j)
        )
        if by_interior != by_lie:
            mismatch, where = by_interior - by_lie, (i, j)
            break
    report.add(CheckResult.from_defect(
        'dual_bracket_forms_agree', mismatch,
        detail=f"dual generators ({where[0]}, {where[1]})" if where else None,
    ))
    if mismatch is not None:
        for check_id in ('anchor_composition', 'glb'):
            report.add(CheckResult.skip(check_id, 'dual bracket is ill-defined'))
        return report

    p = triangular(algebroid, phi0, bivector)
    defect, where = None, None
    for i in range(1, algebroid.rank + 1):
        for factor in [algebroid.ctx.one()] + [algebroid.ctx.var(n) for n in algebroid.directions]:
            form = algebroid.dual_generator(i) * factor
            value = (p.dual.anchor_vector(form.transposed())
                     - algebroid.anchor_vector(sharp(bivector, form)))
            if value:
                defect, where = value, (i, factor.format())
                break
        if defect is not None:
            break
    report.add(CheckResult.from_defect(
        'anchor_composition', defect,
        detail=f"on {where[1]}*e*{where[0]}" if where else None,
    ))

    report.add(check_glb(p).summary('glb'))
    return report


__all__ = [
    'triangular_dual_bracket_forms',
    'triangular_dual_bracket',
    'triangular',
    'check_triangular',
]
