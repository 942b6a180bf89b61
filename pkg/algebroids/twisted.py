"""
Calculus twisted by a 1-cocycle phi0 of a Lie algebroid.

    d_phi0 w        = d w + phi0 ^ w
    (L_phi0)_X w    = d_phi0 i_X w + i_X d_phi0 w = L_X w + phi0(X) w
    [[P, P']]_phi0  = [[P, P']] + (-1)^(k+1) (k-1) P ^ i_phi0 P' - (k'-1) (i_phi0 P) ^ P'

Every operation checks once per (algebroid, phi0) that phi0 is a cocycle;
callers that already hold the verdict may pass ``check_cocycle=False``.
"""
import logging
from itertools import combinations
from typing import List, Optional

from algebra.errors import CocycleError, ConsistencyError, DegreeError
from algebra.exterior import MultiForm, Multivector, contract_form, interior, pair, wedge
from algebra.product_bundle import ProductElement
from algebra.scalar_ring import Scalar
from algebroids.algebroid import Algebroid
from algebroids.checks import CheckReport, CheckResult

logger = logging.getLogger(__name__)


def require_cocycle(algebroid: Algebroid, phi0: MultiForm) -> None:
    """Raise ``CocycleError`` unless phi0 is a 1-cocycle of ``algebroid``."""
    if not algebroid.is_cocycle(phi0):
        defect = algebroid.differential(phi0)
        raise CocycleError(f"{phi0} is not a 1-cocycle of {algebroid.name}: d(phi0) = {defect}")


def twisted_differential(algebroid: Algebroid, phi0: MultiForm, form: MultiForm,
                         check_cocycle: bool = True) -> MultiForm:
    """d_phi0 w = d w + phi0 ^ w."""
    if check_cocycle:
        require_cocycle(algebroid, phi0)
    return algebroid.differential(form) + wedge(phi0, form)


def twisted_lie_derivative_form(algebroid: Algebroid, phi0: MultiForm, section: Multivector,
                                form: MultiForm, check_cocycle: bool = True) -> MultiForm:
    """(L_phi0)_X w, computed by the Cartan formula and by L_X w + phi0(X) w.

    Raises:
        ConsistencyError: The two routes disagree
    """
    if check_cocycle:
        require_cocycle(algebroid, phi0)
    cartan = (twisted_differential(algebroid, phi0, interior(section, form), check_cocycle=False)
              + interior(section, twisted_differential(algebroid, phi0, form, check_cocycle=False)))
    direct = algebroid.lie_derivative(section, form) + form * pair(phi0, section)
    if cartan != direct:
        raise ConsistencyError(
            f"Twisted Lie derivative routes disagree: Cartan {cartan} vs direct {direct}"
        )
    return cartan


def twisted_schouten(algebroid: Algebroid, phi0: MultiForm, p: Multivector, q: Multivector,
                     check_cocycle: bool = True) -> Multivector:
    """The phi0-Schouten bracket [[P, Q]]_phi0."""
    if check_cocycle:
        require_cocycle(algebroid, phi0)
    k, l = p.degree, q.degree
    result = algebroid.schouten(p, q)
    if k != 1 and p.coeffs and q.coeffs:
        correction = wedge(p, contract_form(phi0, q)) * ((k - 1) * (1 if (k + 1) % 2 == 0 else -1))
        result = result + correction
    if l != 1 and p.coeffs and q.coeffs:
        result = result - wedge(contract_form(phi0, p), q) * (l - 1)
    return result


def twisted_lie_derivative_mv(algebroid: Algebroid, phi0: MultiForm, section: Multivector,
                              vector: Multivector, check_cocycle: bool = True) -> Multivector:
    """(L_phi0)_X P = [[X, P]]_phi0."""
    return twisted_schouten(algebroid, phi0, section, vector, check_cocycle=check_cocycle)


def twisted_anchor_apply(algebroid: Algebroid, phi0: MultiForm, section: Multivector,
                         f: Scalar) -> Scalar:
    """rho_phi0(X)(f) = rho(X)(f) + phi0(X) f."""
    return algebroid.anchor_apply(section, f) + pair(phi0, section) * f


# Morphism to TM x R


def morphism_pair(algebroid: Algebroid, phi0: MultiForm, section: Multivector,
                  check_cocycle: bool = True) -> ProductElement:
    """(rho, phi0)(X) = (rho(X), phi0(X)) as a section of TM x R over the base."""
    if check_cocycle:
        require_cocycle(algebroid, phi0)
    field = algebroid.anchor_vector(section)
    return ProductElement(field, Multivector.from_scalar(pair(phi0, section), field.rank))


def morphism_pullback(algebroid: Algebroid, phi0: MultiForm, forms: ProductElement) -> MultiForm:
    """(rho, phi0)*(a, f) = rho*(a) + f phi0, for a 1-form a on the base and a function f."""
    if forms.is_vector or forms.degree != 1:
        raise DegreeError("morphism_pullback expects a degree-1 form pair (a, f)")
    return algebroid.anchor_transpose(forms.first) + phi0 * forms.second.scalar()


def tm_r_pair_bracket(algebroid: Algebroid, a: ProductElement, b: ProductElement) -> ProductElement:
    """([X, Y], X(g) - Y(f)) on sections (X, f), (Y, g) of TM x R."""
    tangent = Algebroid.tangent(algebroid.ctx)
    x, f = a.first, a.second.scalar()
    y, g = b.first, b.second.scalar()
    bracket = tangent.bracket(x, y)
    value = tangent.anchor_apply(x, g) - tangent.anchor_apply(y, f)
    return ProductElement(bracket, Multivector.from_scalar(value, bracket.rank))


def check_morphism_pair(algebroid: Algebroid, phi0: MultiForm) -> CheckReport:
    """(rho, phi0)[[e_i, e_j]] = [(rho, phi0) e_i, (rho, phi0) e_j] on all generator pairs."""
    report = CheckReport(subject=f"(rho, phi0) for {algebroid.name}")
    require_cocycle(algebroid, phi0)
    defect, where = None, None
    for i, j in combinations(range(1, algebroid.rank + 1), 2):
        x, y = algebroid.generator(i), algebroid.generator(j)
        lhs = morphism_pair(algebroid, phi0, algebroid.bracket(x, y), check_cocycle=False)
        rhs = tm_r_pair_bracket(algebroid,
                                morphism_pair(algebroid, phi0, x, check_cocycle=False),
                                morphism_pair(algebroid, phi0, y, check_cocycle=False))
        if lhs != rhs:
            defect, where = lhs - rhs, (i, j)
            break
    report.add(CheckResult.from_defect(
        'morphism_homomorphism', defect, detail=f"generators {where}" if where else None
    ))
    return report


def check_twisted_schouten_identities(algebroid: Algebroid, phi0: MultiForm,
                                      vectors: List[Multivector],
                                      functions: Optional[List[Scalar]] = None) -> CheckReport:
    """Graded symmetry, the twisted function bracket and the twisted derivation rule
    evaluated on the supplied multivectors."""
    require_cocycle(algebroid, phi0)
    report = CheckReport(subject=f"phi0-Schouten identities on {algebroid.name}")
    functions = functions or [algebroid.ctx.var(name) for name in algebroid.directions]

    def bracket(p, q):
        return twisted_schouten(algebroid, phi0, p, q, check_cocycle=False)

    symmetry = None
    for p in vectors:
        for q in vectors:
            sign = -1 if (p.degree * q.degree) % 2 else 1
            defect = bracket(p, q) - bracket(q, p) * sign
            if defect:
                symmetry = defect
                break
        if symmetry is not None:
            break
    report.add(CheckResult.from_defect('graded_symmetry', symmetry))

    function_defect = None
    for p in vectors:
        if p.degree < 1:
            continue
        for f in functions:
            lhs = bracket(p, algebroid.scalar_vector(f))
            rhs = contract_form(twisted_differential(algebroid, phi0, algebroid.scalar_form(f),
                                                     check_cocycle=False), p)
            if lhs != rhs:
                function_defect = lhs - rhs
                break
        if function_defect is not None:
            break
    report.add(CheckResult.from_defect('function_bracket', function_defect))

    derivation = None
    for p in vectors:
        for q in vectors:
            for r in vectors:
                if q.degree + r.degree > algebroid.rank:
                    continue
                k, kq = p.degree, q.degree
                lhs = bracket(p, wedge(q, r))
                sign = -1 if (kq * (k + 1)) % 2 else 1
                rhs = (wedge(bracket(p, q), r) + wedge(q, bracket(p, r)) * sign
                       - wedge(wedge(contract_form(phi0, p), q), r))
                if lhs != rhs:
                    derivation = lhs - rhs
                    break
            if derivation is not None:
                break
        if derivation is not None:
            break
    report.add(CheckResult.from_defect('derivation_rule', derivation))
    return report


__all__ = [
    'require_cocycle',
    'twisted_differential',
    'twisted_lie_derivative_form',
    'twisted_schouten',
    'twisted_lie_derivative_mv',
    'twisted_anchor_apply',
    'morphism_pair',
    'morphism_pullback',
    'tm_r_pair_bracket',
    'check_morphism_pair',
    'check_twisted_schouten_identities',
]
