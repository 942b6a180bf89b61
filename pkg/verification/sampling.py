"""
Seeded random sections, forms and functions for the property checks.
"""

import random
from itertools import combinations
from typing import List, Sequence

from algebra.exterior import MultiForm, Multivector
from algebra.product_bundle import ProductElement
from algebra.scalar_ring import LAURENT_VARIABLE, RingContext, Scalar


class Sampler:
    """Draws exact random elements over ``ctx`` from a seeded generator.

    Coefficients are integers of absolute value at most ``height``; monomials use
    the base variables, and t and u on a time-extended ring, up to ``max_degree``.
    """

    def __init__(self, ctx: RingContext, seed: int = 0, height: int = 10,
                 max_degree: int = 2, max_terms: int = 3):
        self.ctx = ctx
        self.rng = random.Random(seed)
        self.height = height
        self.max_degree = max_degree
        self.max_terms = max_terms
        names = list(ctx.directions)
        if ctx.time_extended:
            names.append(LAURENT_VARIABLE)
        self.variables = [ctx.var(name) for name in names]

    def coefficient(self) -> int:
        value = 0
        while value == 0:
            value = self.rng.randint(-self.height, self.height)
        return value

    def scalar(self) -> Scalar:
        result = self.ctx.zero()
        for _ in range(self.rng.randint(1, self.max_terms)):
            term = self.ctx.constant(self.coefficient())
            if self.variables:
                for _ in range(self.rng.randint(0, self.max_degree)):
                    term = term * self.rng.choice(self.variables)
            result = result + term
        return result

    def _element(self, element_type, rank: int, degree: int):
        keys = list(combinations(range(1, rank + 1), degree)) if degree >= 0 else []
        if not keys:
            return element_type.zero(self.ctx, rank, degree)
        chosen = self.rng.sample(keys, min(len(keys), self.rng.randint(1, 2)))
        return element_type(self.ctx, rank, degree, {key: self.scalar() for key in chosen})

    def vector(self, rank: int, degree: int = 1) -> Multivector:
        return self._element(Multivector, rank, degree)

    def form(self, rank: int, degree: int = 1) -> MultiForm:
        return self._element(MultiForm, rank, degree)

    def vectors(self, rank: int, degrees: Sequence[int], count: int) -> List[Multivector]:
        return [self.vector(rank, self.rng.choice(list(degrees))) for _ in range(count)]

    def forms(self, rank: int, degrees: Sequence[int], count: int) -> List[MultiForm]:
        return [self.form(rank, self.rng.choice(list(degrees))) for _ in range(count)]

    def product(self, element_type, rank: int, degree: int) -> ProductElement:
        """A pair (P, Q) of degrees (k, k-1) over a rank ``rank`` module."""
        return ProductElement(self._element(element_type, rank, degree),
                              self._element(element_type, rank, degree - 1))
