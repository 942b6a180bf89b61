"""
Jacobi structures (Lambda, E) on coordinate charts and their algebroids.

A Jacobi structure satisfies [Lambda, Lambda] = 2 E ^ Lambda and [E, Lambda] = 0
for the Schouten bracket of the tangent algebroid. It gives rise to two Lie
algebroids of rank m+1 over the chart:

    TM x R   generators d/dx_1..d/dx_m and the unit section, cocycle (0, 1)
    T*M x R  generators (dx_1,0)..(dx_m,0) and (0, 1),  cocycle X0 = (-E, 0)

Product elements (P, Q) are embedded as P + e_0 ^ Q with e_0 the generator m+1.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Optional, Tuple

from algebra.errors import ConsistencyError, DegreeError, RankMismatchError
from algebra.exterior import MultiForm, Multivector, evaluate, interior, sharp, wedge
from algebra.product_bundle import ProductElement
from algebra.scalar_ring import RingContext, Scalar
from algebroids.algebroid import Algebroid
from algebroids.checks import CheckReport, CheckResult
from algebroids.twisted import (
    twisted_differential,
    twisted_lie_derivative_form,
    twisted_schouten,
)

logger = logging.getLogger(__name__)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


@dataclass(frozen=True)
class JacobiStructure:
    """A bivector Lambda and a vector field E on the tangent frame of ``ctx``."""
    ctx: RingContext
    bivector: Multivector
    vector: Multivector
    name: Optional[str] = None

    def __post_init__(self):
        rank = len(self.ctx.directions)
        for label, element, degree in (('Lambda', self.bivector, 2), ('E', self.vector, 1)):
            if not isinstance(element, Multivector):
                raise DegreeError(f"{label} must be a Multivector")
            if element.degree != degree and element.coeffs:
                raise DegreeError(f"{label} must have degree {degree}, got {element.degree}")
            if element.rank != rank or element.ctx != self.ctx:
                raise RankMismatchError(f"{label} does not live on the tangent frame of {self.ctx!r}")

    @classmethod
    def from_vectors(cls, ctx: RingContext, bivector: Multivector,
                     vector: Optional[Multivector] = None, name: Optional[str] = None):
        if vector is None:
            vector = Multivector.zero(ctx, len(ctx.directions), 1)
        return cls(ctx, bivector, vector, name)

    @classmethod
    def contact_r3(cls) -> 'JacobiStructure':
        """The contact structure of R^3: Lambda = (d/dx + y d/dz) ^ d/dy, E = d/dz."""
        ctx = RingContext(('x', 'y', 'z'))
        y = ctx.var('y')
        horizontal = Multivector.from_components(ctx, [1, 0, y])
        bivector = wedge(horizontal, Multivector.basis(ctx, 3, 2))
        return cls(ctx, bivector, Multivector.basis(ctx, 3, 3), name='contact_r3')

    @property
    def rank(self) -> int:
        return len(self.ctx.directions)

    @cached_property
    def tangent(self) -> Algebroid:
        return Algebroid.tangent(self.ctx)

    def is_poisson(self) -> bool:
        return self.vector.is_zero()


def verify_jacobi(bivector: Multivector, vector: Multivector) -> CheckReport:
    """[Lambda, Lambda] - 2 E ^ Lambda = 0 and [E, Lambda] = 0, cross-checked against
    [[(Lambda, E), (Lambda, E)]]_(0,1) = 0 on TM x R."""
    if bivector.degree != 2 and bivector.coeffs:
        raise DegreeError(f"Lambda must be a bivector, got degree {bivector.degree}")
    if vector.degree != 1 and vector.coeffs:
        raise DegreeError(f"E must be a vector field, got degree {vector.degree}")
    ctx = bivector.ctx
    tangent = Algebroid.tangent(ctx)
    report = CheckReport(subject='Jacobi structure')

    lambda_defect = tangent.schouten(bivector, bivector) - wedge(vector, bivector) * 2
    vector_defect = tangent.schouten(vector, bivector)
    report.add(CheckResult.from_defect('lambda_lambda', lambda_defect,
                                       detail='[Lambda,Lambda] - 2 E^Lambda'))
    report.add(CheckResult.from_defect('e_lambda', vector_defect, detail='[E,Lambda]'))

    product_algebroid, unit = build_tm_r(ctx)
    embedded = ProductElement(bivector, vector).embed()
    product_defect = twisted_schouten(product_algebroid, unit, embedded, embedded,
                                      check_cocycle=False)
    direct = lambda_defect.is_zero() and vector_defect.is_zero()
    if direct != product_defect.is_zero():
        raise ConsistencyError(
            f"Jacobi routes disagree: direct={direct}, product={product_defect.is_zero()}"
        )
    report.add(CheckResult.from_defect('product_route', ProductElement.split(product_defect),
                                       detail='[[(Lambda,E),(Lambda,E)]]_(0,1)'))
    return report


def jacobi_bracket(structure: JacobiStructure, f: Scalar, g: Scalar) -> Scalar:
    """{f, g} = Lambda(df, dg) + f E(g) - g E(f)."""
    tangent = structure.tangent
    df = tangent.function_differential(f)
    dg = tangent.function_differential(g)
    return (evaluate(structure.bivector, df, dg)
            + f * tangent.anchor_apply(structure.vector, g)
            - g * tangent.anchor_apply(structure.vector, f))


def hamiltonian_vector_field(structure: JacobiStructure, f: Scalar) -> Multivector:
    """#_Lambda(df) + f E, the anchor image of (df, f) in T*M x R."""
    df = structure.tangent.function_differential(f)
    return sharp(structure.bivector, df) + structure.vector * f


def poissonize(structure: JacobiStructure) -> Multivector:
    """u (Lambda + d/dt ^ E) on the tangent frame of the time-extended chart.

    The t direction is the last frame index, so d/dt ^ E = -E ^ e_(m+1).
    """
    if structure.ctx.time_extended:
        raise RankMismatchError("Poissonization needs a chart without t")
    ctx = structure.ctx.time_extended_copy()
    rank = structure.rank + 1
    bivector = structure.bivector.lift(ctx).with_rank(rank)
    vector = structure.vector.lift(ctx).with_rank(rank)
    time_direction = Multivector.basis(ctx, rank, rank)
    return (bivector + wedge(time_direction, vector)) * ctx.var('u')


# TM x R


def build_tm_r(ctx: RingContext) -> Tuple[Algebroid, MultiForm]:
    """The algebroid TM x R over the chart of ``ctx`` and its cocycle (0, 1)."""
    m = len(ctx.directions)
    anchor = [[1 if a == i else 0 for a in range(m)] for i in range(m)]
    anchor.append([0] * m)
    algebroid = Algebroid(ctx, m + 1, anchor, {}, name=f"T R^{m} x R")
    return algebroid, MultiForm.basis(ctx, m + 1, m + 1)


def _tangent_of(element) -> Algebroid:
    return Algebroid.tangent(element.ctx)


def closed_form_tm_r_differential(forms: ProductElement) -> ProductElement:
    """(delta a, -delta b)."""
    tangent = _tangent_of(forms.first)
    return ProductElement(tangent.differential(forms.first), -tangent.differential(forms.second))


def closed_form_twisted_tm_r_differential(forms: ProductElement) -> ProductElement:
    """(delta a, a - delta b), the (0,1)-twisted differential."""
    tangent = _tangent_of(forms.first)
    return ProductElement(tangent.differential(forms.first),
                          forms.first - tangent.differential(forms.second))


def closed_form_tm_r_schouten(a: ProductElement, b: ProductElement) -> ProductElement:
    """([P, P'], (-1)^(k+1) [P, Q'] - [Q, P'])."""
    tangent = _tangent_of(a.first)
    k = a.degree
    return ProductElement(
        tangent.schouten(a.first, b.first),
        tangent.schouten(a.first, b.second) * _sign(k + 1) - tangent.schouten(a.second, b.first),
    )


def extended_schouten_tm_r(a: ProductElement, b: ProductElement) -> ProductElement:
    """The (0,1)-twisted Schouten bracket of TM x R in closed form:

        ([P,P'] + (-1)^(k+1)(k-1) P^Q' - (k'-1) Q^P',
         (-1)^(k+1)[P,Q'] - [Q,P'] + (-1)^(k+1)(k-k') Q^Q')
    """
    tangent = _tangent_of(a.first)
    k, l = a.degree, b.degree
    p, q = a.first, a.second
    p2, q2 = b.first, b.second
    first = (tangent.schouten(p, p2)
             + wedge(p, q2) * (_sign(k + 1) * (k - 1))
             - wedge(q, p2) * (l - 1))
    second = (tangent.schouten(p, q2) * _sign(k + 1)
              - tangent.schouten(q, p2)
              + wedge(q, q2) * (_sign(k + 1) * (k - l)))
    return ProductElement(first, second)


# T*M x R


def _lie_form(tangent: Algebroid, section: Multivector, form: MultiForm) -> MultiForm:
    return tangent.lie_derivative(section, form)


def tstar_pair_bracket(structure: JacobiStructure, a: ProductElement,
                       b: ProductElement) -> ProductElement:
    """The bracket of T*M x R on (a, f), (b, g):

        (L_{#a} b - L_{#b} a - d(Lambda(a,b)) + f L_E b - g L_E a - i_E(a ^ b),
         Lambda(b, a) + #a(g) - #b(f) + f E(g) - g E(f))
    """
    tangent = structure.tangent
    lam, vector = structure.bivector, structure.vector
    alpha, f = a.first, a.second.scalar()
    beta, g = b.first, b.second.scalar()
    sharp_alpha = sharp(lam, alpha)
    sharp_beta = sharp(lam, beta)
    lam_ab = evaluate(lam, alpha, beta)
    first = (_lie_form(tangent, sharp_alpha, beta)
             - _lie_form(tangent, sharp_beta, alpha)
             - tangent.differential(MultiForm.from_scalar(lam_ab, structure.rank))
             + _lie_form(tangent, vector, beta) * f
             - _lie_form(tangent, vector, alpha) * g
             - interior(vector, wedge(alpha, beta)))
    second = (evaluate(lam, beta, alpha)
              + tangent.anchor_apply(sharp_alpha, g)
              - tangent.anchor_apply(sharp_beta, f)
              + f * tangent.anchor_apply(vector, g)
              - g * tangent.anchor_apply(vector, f))
    return ProductElement(first, MultiForm.from_scalar(second, structure.rank))


def tstar_generator(structure: JacobiStructure, i: int) -> ProductElement:
    """(dx_i, 0) for i <= m, and (0, 1) for i = m+1."""
    ctx, m = structure.ctx, structure.rank
    if i == m + 1:
        return ProductElement(MultiForm.zero(ctx, m, 1), MultiForm.from_scalar(ctx.one(), m))
    return ProductElement(MultiForm.basis(ctx, m, i), MultiForm.zero(ctx, m, 0))


def build_tstar_m_r(structure: JacobiStructure,
                    verify: bool = True) -> Tuple[Algebroid, Multivector]:
    """The algebroid T*M x R of a Jacobi structure and its cocycle X0 = (-E, 0).

    Structure functions are obtained by evaluating the pair bracket on generator
    pairs. X0 is returned as a section of TM x R (the dual of T*M x R).

    Raises:
        UnverifiedStructureError: (Lambda, E) is not a Jacobi structure
    """
    if verify:
        verify_jacobi(structure.bivector, structure.vector).require(
            f"{structure.name or 'input'} is not a Jacobi structure"
        )
    ctx, m = structure.ctx, structure.rank
    lam, vector = structure.bivector, structure.vector

    anchor = []
    for i in range(1, m + 1):
        field = sharp(lam, MultiForm.basis(ctx, m, i))
        anchor.append([field.coefficient(a) for a in range(1, m + 1)])
    anchor.append([vector.coefficient(a) for a in range(1, m + 1)])

    structure_functions = {}
    for i, j in combinations(range(1, m + 2), 2):
        value = tstar_pair_bracket(structure, tstar_generator(structure, i),
                                   tstar_generator(structure, j))
        embedded = value.embed()
        if embedded:
            structure_functions[(i, j)] = embedded.transposed()
    logger.debug(f"T*M x R of {structure.name}: {len(structure_functions)} nonzero brackets")

    algebroid = Algebroid(ctx, m + 1, anchor, structure_functions,
                          name=f"T*R^{m} x R ({structure.name or 'Jacobi'})")
    x0 = ProductElement(-vector, Multivector.zero(ctx, m, 0)).embed()
    return algebroid, x0


def closed_form_tstar_differential(structure: JacobiStructure,
                                   vectors: ProductElement) -> ProductElement:
    """(-[Lambda,P] + k E^P + Lambda^Q, [Lambda,Q] - (k-1) E^Q + [E,P])."""
    tangent = structure.tangent
    lam, vector = structure.bivector, structure.vector
    p, q = vectors.first, vectors.second
    k = vectors.degree
    return ProductElement(
        -tangent.schouten(lam, p) + wedge(vector, p) * k + wedge(lam, q),
        tangent.schouten(lam, q) - wedge(vector, q) * (k - 1) + tangent.schouten(vector, p),
    )


def closed_form_twisted_tstar_differential(structure: JacobiStructure,
                                           vectors: ProductElement) -> ProductElement:
    """(-[Lambda,P] + (k-1) E^P + Lambda^Q, [Lambda,Q] - (k-2) E^Q + [E,P])."""
    tangent = structure.tangent
    lam, vector = structure.bivector, structure.vector
    p, q = vectors.first, vectors.second
    k = vectors.degree
    return ProductElement(
        -tangent.schouten(lam, p) + wedge(vector, p) * (k - 1) + wedge(lam, q),
        tangent.schouten(lam, q) - wedge(vector, q) * (k - 2) + tangent.schouten(vector, p),
    )


def generic_tstar_differential(tstar: Algebroid, vectors: ProductElement,
                               x0: Optional[Multivector] = None) -> ProductElement:
    """The CE differential of T*M x R acting on (P, Q) read as a cochain, optionally X0-twisted."""
    cochain = vectors.embed().transposed()
    if x0 is None:
        result = tstar.differential(cochain)
    else:
        result = twisted_differential(tstar, x0.transposed(), cochain, check_cocycle=False)
    return ProductElement.split(result.transposed())


def bracket_reconstruction(structure: JacobiStructure, a: ProductElement,
                           b: ProductElement) -> Tuple[ProductElement, ProductElement]:
    """The T*M x R bracket rebuilt on TM x R with # = #_(Lambda, E), in two forms:

        (L_(0,1))_{#a} b - (L_(0,1))_{#b} a - d_(0,1)((Lambda,E)(a, b))
        i_{#a} d_(0,1) b - i_{#b} d_(0,1) a + d_(0,1)((Lambda,E)(a, b))
    """
    product_algebroid, unit = build_tm_r(structure.ctx)
    big = ProductElement(structure.bivector, structure.vector).embed()
    alpha, beta = a.embed(), b.embed()
    sharp_alpha = sharp(big, alpha)
    sharp_beta = sharp(big, beta)
    value = MultiForm.from_scalar(evaluate(big, alpha, beta), product_algebroid.rank)
    d_value = twisted_differential(product_algebroid, unit, value, check_cocycle=False)

    lie_form = (twisted_lie_derivative_form(product_algebroid, unit, sharp_alpha, beta,
                                            check_cocycle=False)
                - twisted_lie_derivative_form(product_algebroid, unit, sharp_beta, alpha,
                                              check_cocycle=False)
                - d_value)
    interior_form = (interior(sharp_alpha, twisted_differential(product_algebroid, unit, beta,
                                                                check_cocycle=False))
                     - interior(sharp_beta, twisted_differential(product_algebroid, unit, alpha,
                                                                 check_cocycle=False))
                     + d_value)
    return ProductElement.split(lie_form), ProductElement.split(interior_form)


__all__ = [
    'JacobiStructure',
    'verify_jacobi',
    'jacobi_bracket',
    'hamiltonian_vector_field',
    'poissonize',
    'build_tm_r',
    'build_tstar_m_r',
    'tstar_pair_bracket',
    'tstar_generator',
    'closed_form_tm_r_differential',
    'closed_form_twisted_tm_r_differential',
    'closed_form_tm_r_schouten',
    'extended_schouten_tm_r',
    'closed_form_tstar_differential',
    'closed_form_twisted_tstar_differential',
    'generic_tstar_differential',
    'bracket_reconstruction',
]
