"""
Hypothesis strategies for Scalars, exterior elements and product pairs.
"""

from fractions import Fraction
from itertools import combinations

from hypothesis import strategies as st

from algebra.exterior import MultiForm, Multivector
from algebra.product_bundle import ProductElement
from algebra.scalar_ring import LAURENT_VARIABLE, RingContext

HEIGHT = 10

PLANE = RingContext(('x', 'y'))
SPACE = RingContext(('x', 'y', 'z'))
LINE_TIME = RingContext(('x',), time_extended=True)
PLANE_TIME = RingContext(('x', 'y'), time_extended=True)
POINT = RingContext(())


def _generators(ctx: RingContext, laurent: bool):
    names = list(ctx.directions)
    if ctx.time_extended and laurent:
        names.append(LAURENT_VARIABLE)
    return [ctx.var(name) for name in names]


def coefficients(height: int = HEIGHT, fractional: bool = False):
    integers = st.integers(-height, height)
    if not fractional:
        return integers
    return st.builds(Fraction, integers, st.integers(1, height))


def scalars(ctx: RingContext, max_terms: int = 3, max_degree: int = 2,
            laurent: bool = True, fractional: bool = False):
    """Polynomials of coefficient height at most 10 in the ring generators
    (and u on a time-extended ring)."""
    generators = _generators(ctx, laurent)
    factor_lists = (st.lists(st.sampled_from(range(len(generators))), max_size=max_degree)
                    if generators else st.just([]))
    monomial = st.tuples(coefficients(fractional=fractional), factor_lists)

    def build(terms):
        total = ctx.zero()
        for coefficient, factors in terms:
            term = ctx.constant(coefficient)
            for index in factors:
                term = term * generators[index]
            total = total + term
        return total

    return st.lists(monomial, max_size=max_terms).map(build)


def laurent_units(ctx: RingContext):
    """c u^k with c != 0, the invertible elements of a time-extended ring."""
    u = ctx.var(LAURENT_VARIABLE)
    nonzero = st.integers(-HEIGHT, HEIGHT).filter(bool)
    return st.builds(lambda c, k: ctx.constant(c) * u ** k, nonzero, st.integers(-3, 3))


def elements(element_type, ctx: RingContext, rank: int, degree: int, max_terms: int = 2,
             **scalar_options):
    keys = list(combinations(range(1, rank + 1), degree)) if degree >= 0 else []
    if not keys:
        return st.just(element_type.zero(ctx, rank, degree))
    return st.dictionaries(st.sampled_from(keys), scalars(ctx, **scalar_options),
                           max_size=max_terms).map(
        lambda coeffs: element_type(ctx, rank, degree, coeffs)
    )


def multivectors(ctx: RingContext, rank: int, degree: int, **options):
    return elements(Multivector, ctx, rank, degree, **options)


def multiforms(ctx: RingContext, rank: int, degree: int, **options):
    return elements(MultiForm, ctx, rank, degree, **options)


def graded_multivectors(ctx: RingContext, rank: int, max_degree: int = 3, **options):
    """Multivectors of a random degree between 0 and min(rank, max_degree)."""
    top = min(rank, max_degree)
    return st.integers(0, top).flatmap(lambda k: multivectors(ctx, rank, k, **options))


def graded_multiforms(ctx: RingContext, rank: int, max_degree: int = 3, **options):
    top = min(rank, max_degree)
    return st.integers(0, top).flatmap(lambda k: multiforms(ctx, rank, k, **options))


def products(element_type, ctx: RingContext, rank: int, degree: int, **options):
    """Pairs (P, Q) with deg Q = deg P - 1."""
    return st.builds(ProductElement,
                     elements(element_type, ctx, rank, degree, **options),
                     elements(element_type, ctx, rank, degree - 1, **options))
