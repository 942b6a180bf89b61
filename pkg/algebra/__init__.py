"""
Exact coefficient ring, exterior algebra and product-bundle identifications.
"""

from algebra.errors import (
    AlgebroidError,
    CocycleError,
    ConsistencyError,
    DegreeError,
    ParseError,
    RankMismatchError,
    RingMismatchError,
    StructureFileError,
    UnknownVariableError,
    UnverifiedStructureError,
)
from algebra.scalar_ring import RingContext, Scalar
from algebra.polynomial_parser import parse_scalar
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
from algebra.product_bundle import (
    ProductElement,
    evaluate_product,
    product_contract,
    product_interior,
    product_wedge,
)

__all__ = [
    'AlgebroidError',
    'CocycleError',
    'ConsistencyError',
    'DegreeError',
    'ParseError',
    'RankMismatchError',
    'RingMismatchError',
    'StructureFileError',
    'UnknownVariableError',
    'UnverifiedStructureError',
    'RingContext',
    'Scalar',
    'parse_scalar',
    'Multivector',
    'MultiForm',
    'wedge',
    'contract_form',
    'interior',
    'pair',
    'evaluate',
    'sharp',
    'ProductElement',
    'product_contract',
    'product_interior',
    'product_wedge',
    'evaluate_product',
]
