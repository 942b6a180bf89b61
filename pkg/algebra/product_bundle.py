"""
Sections of the exterior powers of A x R and A* x R.

A pair (P, Q) with deg Q = deg P - 1 stands for P + e_0 ^ Q, where e_0 is the
unit section of the trivial line. ``embed`` realises e_0 as the extra generator
n+1 of a rank n+1 module; ``split`` undoes it.
"""
import logging
from typing import Sequence, Tuple

from algebra.errors import DegreeError, RankMismatchError, RingMismatchError
from algebra.exterior import (
    ExteriorElement,
    MultiForm,
    Multivector,
    contract_form,
    evaluate,
    interior,
    wedge,
)
from algebra.scalar_ring import Scalar

logger = logging.getLogger(__name__)


def _sign(degree: int) -> int:
    return -1 if degree % 2 else 1


class ProductElement:
    """The pair (first, second) with deg second = deg first - 1."""

    __slots__ = ('first', 'second')

    def __init__(self, first: ExteriorElement, second: ExteriorElement):
        if type(first) is not type(second):
            raise DegreeError("Both components must be multivectors or both multiforms")
        if first.rank != second.rank:
            raise RankMismatchError(f"Component ranks differ: {first.rank} vs {second.rank}")
        if first.ctx != second.ctx:
            raise RingMismatchError("Components live in different rings")
        if second.degree != first.degree - 1 and second.coeffs:
            raise DegreeError(
                f"Second component has degree {second.degree}, expected {first.degree - 1}"
            )
        self.first = first
        if second.degree != first.degree - 1:
            second = type(second).zero(second.ctx, second.rank, first.degree - 1)
        self.second = second

    @classmethod
    def zero(cls, element_type, ctx, rank: int, degree: int) -> 'ProductElement':
        return cls(element_type.zero(ctx, rank, degree), element_type.zero(ctx, rank, degree - 1))

    @classmethod
    def from_scalar(cls, element_type, value: Scalar, rank: int) -> 'ProductElement':
        """A function f, as the degree-0 pair (f, 0)."""
        return cls(element_type.from_scalar(value, rank),
                   element_type.zero(value.ctx, rank, -1))

    @property
    def degree(self) -> int:
        return self.first.degree

    @property
    def rank(self) -> int:
        return self.first.rank

    @property
    def ctx(self):
        return self.first.ctx

    @property
    def is_vector(self) -> bool:
        return isinstance(self.first, Multivector)

    def is_zero(self) -> bool:
        return self.first.is_zero() and self.second.is_zero()

    def __add__(self, other: 'ProductElement') -> 'ProductElement':
        return ProductElement(self.first + other.first, self.second + other.second)

    def __sub__(self, other: 'ProductElement') -> 'ProductElement':
        return ProductElement(self.first - other.first, self.second - other.second)

    def __neg__(self) -> 'ProductElement':
        return ProductElement(-self.first, -self.second)

    def __mul__(self, factor) -> 'ProductElement':
        return ProductElement(self.first * factor, self.second * factor)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProductElement):
            return NotImplemented
        return self.first == other.first and self.second == other.second

    def __hash__(self) -> int:
        return hash((self.first, self.second))

    def embed(self) -> ExteriorElement:
        """P + e_0 ^ Q in the rank n+1 module, with e_0 = generator n+1."""
        rank = self.rank + 1
        unit = self.rank + 1
        coeffs = dict(self.first.coeffs)
        for key, value in self.second.coeffs.items():
            coeffs[key + (unit,)] = value if len(key) % 2 == 0 else -value
        return type(self.first)._from_clean(self.ctx, rank, self.degree, coeffs)

    @classmethod
    def split(cls, element: ExteriorElement) -> 'ProductElement':
        """Inverse of ``embed``: read generator n+1 of ``element`` as the unit section."""
        rank = element.rank - 1
        if rank < 0:
            raise RankMismatchError("Cannot split a rank-0 element")
        unit = element.rank
        first, second = {}, {}
        for key, value in element.coeffs.items():
            if key and key[-1] == unit:
                rest = key[:-1]
                second[rest] = value if len(rest) % 2 == 0 else -value
            else:
                first[key] = value
        element_type = type(element)
        return cls(element_type._from_clean(element.ctx, rank, element.degree, first),
                   element_type._from_clean(element.ctx, rank, element.degree - 1, second))

    def __repr__(self) -> str:
        return f"ProductElement(({self.first.format()}), ({self.second.format()}))"


def product_contract(forms: ProductElement, vectors: ProductElement) -> ProductElement:
    """i_(a,b)(P,Q) = (i_a P + i_b Q, (-1)^k i_a Q) for a form pair of degree k."""
    if forms.is_vector or not vectors.is_vector:
        raise DegreeError("product_contract expects (form pair, multivector pair)")
    k = forms.degree
    alpha, beta = forms.first, forms.second
    big_p, big_q = vectors.first, vectors.second
    first = contract_form(alpha, big_p) + contract_form(beta, big_q)
    second = contract_form(alpha, big_q) * _sign(k)
    return ProductElement(first, second)


def product_interior(vectors: ProductElement, forms: ProductElement) -> ProductElement:
    """i_(P,Q)(a,b) = (i_P a + i_Q b, (-1)^r i_P b) for a multivector pair of degree r."""
    if not vectors.is_vector or forms.is_vector:
        raise DegreeError("product_interior expects (multivector pair, form pair)")
    r = vectors.degree
    big_p, big_q = vectors.first, vectors.second
    alpha, beta = forms.first, forms.second
    first = interior(big_p, alpha) + interior(big_q, beta)
    second = interior(big_p, beta) * _sign(r)
    return ProductElement(first, second)


def product_wedge(a: ProductElement, b: ProductElement) -> ProductElement:
    """(P,Q) ^ (P',Q') = (P ^ P', Q ^ P' + (-1)^r P ^ Q'); the same shape for forms."""
    if a.is_vector != b.is_vector:
        raise DegreeError("Cannot wedge a multivector pair with a form pair")
    first = wedge(a.first, b.first)
    second = wedge(a.second, b.first) + wedge(a.first, b.second) * _sign(a.degree)
    return ProductElement(first, second)


def evaluate_product(vectors: ProductElement,
                     arguments: Sequence[Tuple[MultiForm, Scalar]]) -> Scalar:
    """(P,Q)((a_1,f_1),...,(a_r,f_r)) = P(a_1..a_r) + sum_i (-1)^(i+1) f_i Q(..a_i omitted..)."""
    if not vectors.is_vector:
        raise DegreeError("evaluate_product expects a multivector pair")
    if len(arguments) != vectors.degree:
        raise DegreeError(f"Expected {vectors.degree} arguments, got {len(arguments)}")
    forms = [alpha for alpha, _ in arguments]
    total = evaluate(vectors.first, *forms)
    for position, (_, f) in enumerate(arguments):
        rest = forms[:position] + forms[position + 1:]
        term = f * evaluate(vectors.second, *rest)
        total = total + term if position % 2 == 0 else total - term
    return total


__all__ = [
    'ProductElement', 'product_contract', 'product_interior', 'product_wedge',
    'evaluate_product',
]
