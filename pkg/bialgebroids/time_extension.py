"""
Algebroids over M x R built from (A, phi0).

Both extensions keep the generators of A and work over the time-extended ring
(base variables, t, and u = e^(-t)). On generators:

    bar:  [e_i, e_j] = c_ij,                                  rho(e_i) = rho_i + phi0_i d/dt
    hat:  [e_i, e_j] = u (c_ij - phi0_i e_j + phi0_j e_i),    rho(e_i) = u (rho_i + phi0_i d/dt)

Psi multiplies k-vectors by u^(-k) (e^(kt)) and k-forms by u^k; it carries the
bar extension onto the hat extension.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Union

from algebra.errors import RingMismatchError
from algebra.exterior import ExteriorElement, MultiForm, Multivector, contract_form, pair, wedge
from algebra.scalar_ring import LAURENT_VARIABLE, TIME_VARIABLE, Scalar
from algebroids.algebroid import Algebroid
from algebroids.checks import CheckReport, CheckResult, first_nonzero
from algebroids.jacobi_pair import poissonize
from algebroids.twisted import require_cocycle, twisted_schouten
from bialgebroids.glb import (
    GLBPair,
    check_bracket_compatibility,
    check_glb,
    induced_bivector,
    induced_jacobi,
)

logger = logging.getLogger(__name__)

Element = Union[Multivector, MultiForm]


def _time_ring(algebroid: Algebroid):
    if algebroid.ctx.time_extended:
        raise RingMismatchError(f"{algebroid.name} already lives over a time-extended ring")
    return algebroid.ctx.time_extended_copy()


def _laurent(ctx) -> Scalar:
    return ctx.var(LAURENT_VARIABLE)


def time_partial_sections(element: Element) -> Element:
    """Coefficient-wise d/dt."""
    if not element.ctx.time_extended:
        raise RingMismatchError("d/dt needs a time-extended ring")
    return element.map_coefficients(lambda value: value.partial(TIME_VARIABLE))


def _extension(algebroid: Algebroid, phi0: MultiForm, scale: Optional[Scalar],
               label: str) -> Algebroid:
    ctx = _time_ring(algebroid)
    rank = algebroid.rank
    lifted_phi0 = phi0.lift(ctx)
    factor = scale if scale is not None else ctx.one()

    anchor = []
    for i, row in enumerate(algebroid.anchor_rows, start=1):
        entries = [value.lift(ctx) for value in row] + [lifted_phi0.coefficient(i)]
        anchor.append([factor * value for value in entries])

    structure = {}
    for i, j in combinations(range(1, rank + 1), 2):
        value = algebroid.generator_bracket(i, j).lift(ctx)
        if scale is not None:
            value = (value
                     - Multivector.basis(ctx, rank, j) * lifted_phi0.coefficient(i)
                     + Multivector.basis(ctx, rank, i) * lifted_phi0.coefficient(j)) * scale
        if value:
            structure[(i, j)] = value
    return Algebroid(ctx, rank, anchor, structure, name=f"{label}({algebroid.name})")


def time_lift(algebroid: Algebroid) -> Algebroid:
    """A over M x R with t-independent structure and no d/dt component in the anchor."""
    return _extension(algebroid, algebroid.zero_form(), None, 'lift')


def bar_extension(algebroid: Algebroid, phi0: MultiForm, require_cocycle_form: bool = True) -> Algebroid:
    """A x R with [X, Y] + phi0(X) dY/dt - phi0(Y) dX/dt and anchor rho + phi0 d/dt.

    Raises:
        CocycleError: phi0 is not a cocycle (unless ``require_cocycle_form`` is off)
    """
    if require_cocycle_form:
        require_cocycle(algebroid, phi0)
    return _extension(algebroid, phi0, None, 'bar')


def hat_extension(algebroid: Algebroid, phi0: MultiForm, require_cocycle_form: bool = True) -> Algebroid:
    """A x R with u([X,Y] + phi0(X)(dY/dt - Y) - phi0(Y)(dX/dt - X)) and anchor
    u(rho + phi0 d/dt).

    Raises:
        CocycleError: phi0 is not a cocycle (unless ``require_cocycle_form`` is off)
    """
    if require_cocycle_form:
        require_cocycle(algebroid, phi0)
    ctx = _time_ring(algebroid)
    return _extension(algebroid, phi0, _laurent(ctx), 'hat')


# Closed forms


def bracket_bar_closed_form(algebroid: Algebroid, phi0: MultiForm, x: Multivector,
                            y: Multivector) -> Multivector:
    """[[X, Y]] + phi0(X) dY/dt - phi0(Y) dX/dt for time-dependent sections."""
    lifted = time_lift(algebroid)
    phi = phi0.lift(lifted.ctx)
    return (lifted.bracket(x, y)
            + time_partial_sections(y) * pair(phi, x)
            - time_partial_sections(x) * pair(phi, y))


def bracket_hat_closed_form(algebroid: Algebroid, phi0: MultiForm, x: Multivector,
                            y: Multivector) -> Multivector:
    """u([[X, Y]] + phi0(X)(dY/dt - Y) - phi0(Y)(dX/dt - X))."""
    lifted = time_lift(algebroid)
    phi = phi0.lift(lifted.ctx)
    value = (lifted.bracket(x, y)
             + (time_partial_sections(y) - y) * pair(phi, x)
             - (time_partial_sections(x) - x) * pair(phi, y))
    return value * _laurent(lifted.ctx)


def bar_differential_closed_form(algebroid: Algebroid, phi0: MultiForm,
                                 form: MultiForm) -> MultiForm:
    """d w + phi0 ^ dw/dt."""
    lifted = time_lift(algebroid)
    phi = phi0.lift(lifted.ctx)
    return lifted.differential(form) + wedge(phi, time_partial_sections(form))


def hat_differential_closed_form(algebroid: Algebroid, phi0: MultiForm,
                                 form: MultiForm) -> MultiForm:
    """u(d w + k phi0 ^ w + phi0 ^ dw/dt) on k-forms."""
    lifted = time_lift(algebroid)
    phi = phi0.lift(lifted.ctx)
    value = (lifted.differential(form)
             + wedge(phi, form) * form.degree
             + wedge(phi, time_partial_sections(form)))
    return value * _laurent(lifted.ctx)


def bar_bivector_identity_defect(algebroid: Algebroid, phi0: MultiForm, x: Multivector,
                                 bivector: Multivector) -> Multivector:
    """[[X, P]]bar - [[X, P]]_phi0 - phi0(X)(P + dP/dt) + dX/dt ^ i_phi0 P."""
    bar = bar_extension(algebroid, phi0)
    lifted = time_lift(algebroid)
    phi = phi0.lift(lifted.ctx)
    expected = (twisted_schouten(lifted, phi, x, bivector, check_cocycle=False)
                + (bivector + time_partial_sections(bivector)) * pair(phi, x)
                - wedge(time_partial_sections(x), contract_form(phi, bivector)))
    return bar.schouten(x, bivector) - expected


# Psi


def psi_transport(element: ExteriorElement) -> ExteriorElement:
    """u^(-k) on k-vectors and u^k on k-forms."""
    ctx = element.ctx
    if not ctx.time_extended:
        raise RingMismatchError("Psi needs a time-extended ring")
    power = -element.degree if isinstance(element, Multivector) else element.degree
    if power == 0 or not element.coeffs:
        return element
    return element * (_laurent(ctx) ** power)


def transport_algebroid(algebroid: Algebroid, scale: Scalar, name: Optional[str] = None) -> Algebroid:
    """The algebroid structure carried along X -> scale^(-1) X with a unit ``scale``:
    brackets scale^(-1) [scale e_i, scale e_j] and anchor scale rho."""
    inverse = scale ** -1
    anchor = [[scale * value for value in row] for row in algebroid.anchor_rows]
    structure = {}
    for i, j in combinations(range(1, algebroid.rank + 1), 2):
        value = algebroid.bracket(algebroid.generator(i) * scale,
                                  algebroid.generator(j) * scale) * inverse
        if value:
            structure[(i, j)] = value
    return Algebroid(algebroid.ctx, algebroid.rank, anchor, structure,
                     name=name or f"transport({algebroid.name})")


def check_psi_isomorphism(algebroid: Algebroid, phi0: MultiForm,
                          sections: Sequence[Multivector]) -> CheckReport:
    """rho_hat(Psi X) = rho_bar(X) and Psi [X, Y]bar = [Psi X, Psi Y]hat."""
    bar = bar_extension(algebroid, phi0)
    hat = hat_extension(algebroid, phi0)
    report = CheckReport(subject=f"Psi for {algebroid.name}")
    report.add(CheckResult.from_defect('psi_anchor', first_nonzero(
        hat.anchor_vector(psi_transport(x)) - bar.anchor_vector(x) for x in sections
    )))
    report.add(CheckResult.from_defect('psi_bracket', first_nonzero(
        psi_transport(bar.bracket(x, y)) - hat.bracket(psi_transport(x), psi_transport(y))
        for x in sections for y in sections
    )))
    report.add(CheckResult(check_id='psi_structure',
                           passed=transport_algebroid(bar, _laurent(bar.ctx)).same_structure(hat),
                           detail='bar carried along Psi vs hat'))
    return report


def check_time_derivative_rules(algebroid: Algebroid, vectors: Sequence[Multivector],
                                forms: Sequence[MultiForm]) -> CheckReport:
    """d/dt is a derivation of the wedge product and of the bracket, and commutes
    with d, for an algebroid whose structure does not depend on t."""
    report = CheckReport(subject=f"d/dt on {algebroid.name}")
    dt = time_partial_sections
    report.add(CheckResult.from_defect('product_rule', first_nonzero(
        dt(wedge(p, q)) - wedge(dt(p), q) - wedge(p, dt(q))
        for p in vectors for q in vectors if p.degree + q.degree <= algebroid.rank
    )))
    report.add(CheckResult.from_defect('bracket_rule', first_nonzero(
        dt(algebroid.schouten(p, q)) - algebroid.schouten(dt(p), q) - algebroid.schouten(p, dt(q))
        for p in vectors for q in vectors
    )))
    report.add(CheckResult.from_defect('commutes_with_d', first_nonzero(
        algebroid.differential(dt(w)) - dt(algebroid.differential(w)) for w in forms
    )))
    return report


# Bialgebroidization


@dataclass
class BialgebroidizationResult:
    """The Lie bialgebroid over M x R built from a generalized Lie bialgebroid."""
    report: CheckReport
    algebroid: Algebroid
    dual: Algebroid
    induced: Multivector
    poissonization: Multivector

    @property
    def passed(self) -> bool:
        return self.report.passed


def lie_bialgebroid_pair(algebroid: Algebroid, dual: Algebroid, name: str) -> GLBPair:
    zero_form = algebroid.zero_form()
    return GLBPair(algebroid, dual, zero_form, algebroid.zero_vector(), name=name)


def _compatibility(extended: GLBPair, check_id: str) -> CheckResult:
    return check_bracket_compatibility(extended, check_id=check_id)


def bialgebroidize(p: GLBPair, verify: bool = True) -> BialgebroidizationResult:
    """(bar(A, phi0), hat(A*, X0)) and its induced Poisson bivector on M x R.

    Raises:
        UnverifiedStructureError: ``p`` fails check_glb (when ``verify`` is on)
    """
    if verify:
        check_glb(p).require(f"{p.label} is not a generalized Lie bialgebroid")
    bar = bar_extension(p.algebroid, p.phi0, require_cocycle_form=verify)
    hat_dual = hat_extension(p.dual, p.x0.transposed(), require_cocycle_form=verify)
    extended = lie_bialgebroid_pair(bar, hat_dual, name=f"bialgebroidization of {p.label}")

    report = CheckReport(subject=extended.label)
    report.add(_compatibility(extended, 'bialgebroid_compatibility'))

    induced = induced_bivector(bar, hat_dual)
    poissonization = poissonize(induced_jacobi(p, verify=False))
    report.add(CheckResult.from_defect('poissonization_match', induced - poissonization,
                                       detail='induced bivector on M x R vs Poissonization'))
    logger.debug(f"Bialgebroidization of {p.label}: {[r.status for r in report]}")
    return BialgebroidizationResult(report, bar, hat_dual, induced, poissonization)


def check_psi_transport(p: GLBPair) -> CheckResult:
    """(hat(A, phi0), bar(A*, X0)), obtained by carrying both sides along Psi, is
    again a Lie bialgebroid."""
    hat = hat_extension(p.algebroid, p.phi0, require_cocycle_form=False)
    bar_dual = bar_extension(p.dual, p.x0.transposed(), require_cocycle_form=False)
    transported = lie_bialgebroid_pair(hat, bar_dual, name=f"Psi-transport of {p.label}")
    return _compatibility(transported, 'psi_transport')


def glb_from_bialgebroid(p: GLBPair) -> CheckReport:
    """The bialgebroid verdict over M x R first, then check_glb; both must agree."""
    report = CheckReport(subject=f"bialgebroid vs generalized conditions for {p.label}")
    bialgebroid = bialgebroidize(p, verify=False).report.get('bialgebroid_compatibility')
    report.add(bialgebroid)
    glb_report = check_glb(p)
    report.add(glb_report.summary('glb_conditions'))
    agree = bialgebroid.passed == glb_report.passed
    report.add(CheckResult(check_id='verdicts_agree', passed=agree,
                           detail=None if agree else
                           f"bialgebroid={bialgebroid.passed}, glb={glb_report.passed}"))
    return report


def check_extension_equivalence(algebroid: Algebroid, phi0: MultiForm,
                                seed: int = 0, samples: int = 20) -> CheckReport:
    """A is a Lie algebroid with cocycle phi0  <=>  hat(A, phi0) is a Lie algebroid
    <=>  bar(A, phi0) is a Lie algebroid."""
    report = CheckReport(subject=f"time extensions of {algebroid.name}")
    base = algebroid.check_axioms(seed=seed, samples=samples).passed and algebroid.is_cocycle(phi0)
    hat = hat_extension(algebroid, phi0, require_cocycle_form=False)
    bar = bar_extension(algebroid, phi0, require_cocycle_form=False)
    verdicts = {
        'base_axioms': base,
        'hat_axioms': hat.check_axioms(seed=seed, samples=samples).passed,
        'bar_axioms': bar.check_axioms(seed=seed, samples=samples).passed,
    }
    for check_id, verdict in verdicts.items():
        report.add(CheckResult(check_id=check_id, passed=verdict))
    agree = len(set(verdicts.values())) == 1
    report.add(CheckResult(check_id='verdicts_agree', passed=agree,
                           detail=None if agree else str(verdicts)))
    return report


__all__ = [
    'time_partial_sections',
    'time_lift',
    'bar_extension',
    'hat_extension',
    'bracket_bar_closed_form',
    'bracket_hat_closed_form',
    'bar_differential_closed_form',
    'hat_differential_closed_form',
    'bar_bivector_identity_defect',
    'psi_transport',
    'transport_algebroid',
    'check_psi_isomorphism',
    'check_time_derivative_rules',
    'BialgebroidizationResult',
    'lie_bialgebroid_pair',
    'bialgebroidize',
    'check_psi_transport',
    'glb_from_bialgebroid',
    'check_extension_equivalence',
]
