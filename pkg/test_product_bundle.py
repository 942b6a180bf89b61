import pytest
from hypothesis import given
from hypothesis import strategies as st

from algebra.errors import DegreeError
from algebra.exterior import MultiForm, Multivector, contract_form, evaluate, wedge
from algebra.product_bundle import (
    ProductElement,
    evaluate_product,
    product_contract,
    product_interior,
    product_wedge,
)
from hypothesis_strategies import PLANE, multiforms, multivectors, products, scalars

RANK = 3


def unit_form(rank=RANK):
    """(0, 1)."""
    return ProductElement(MultiForm.zero(PLANE, rank, 1), MultiForm.from_scalar(PLANE.one(), rank))


def test_degrees_must_differ_by_one():
    with pytest.raises(DegreeError):
        ProductElement(Multivector.basis(PLANE, RANK, 1, 2), Multivector.basis(PLANE, RANK, 1, 2))
    with pytest.raises(DegreeError):
        ProductElement(Multivector.basis(PLANE, RANK, 1), MultiForm.zero(PLANE, RANK, 0))


def test_zero_second_component_takes_the_right_degree():
    element = ProductElement(Multivector.basis(PLANE, RANK, 1, 2), Multivector.zero(PLANE, RANK, 0))
    assert element.second.degree == 1


def test_unit_form_contracts_onto_the_second_component():
    p = Multivector.basis(PLANE, RANK, 1, 2) * PLANE.var('x')
    q = Multivector.basis(PLANE, RANK, 3)
    result = product_contract(unit_form(), ProductElement(p, q))
    assert result == ProductElement(q, Multivector.zero(PLANE, RANK, 0))


def test_form_without_second_component_contracts_the_first():
    alpha = MultiForm.basis(PLANE, RANK, 1)
    p = Multivector.basis(PLANE, RANK, 1, 2)
    forms = ProductElement(alpha, MultiForm.zero(PLANE, RANK, 0))
    vectors = ProductElement(p, Multivector.zero(PLANE, RANK, 1))
    assert product_contract(forms, vectors) == ProductElement(contract_form(alpha, p),
                                                              Multivector.zero(PLANE, RANK, 0))


def test_evaluate_bivector_pair():
    pair_element = ProductElement(Multivector.basis(PLANE, 2, 1, 2), Multivector.basis(PLANE, 2, 1))
    arguments = [(MultiForm.basis(PLANE, 2, 1), PLANE.constant(2)),
                 (MultiForm.basis(PLANE, 2, 2), PLANE.constant(3))]
    assert evaluate_product(pair_element, arguments) == -2


def test_embed_places_the_unit_last():
    q = Multivector.basis(PLANE, 2, 1)
    embedded = ProductElement(Multivector.zero(PLANE, 2, 2), q).embed()
    assert embedded == -Multivector.basis(PLANE, 3, 1, 3)


def test_argument_kinds_are_checked():
    vectors = ProductElement(Multivector.basis(PLANE, RANK, 1), Multivector.zero(PLANE, RANK, 0))
    with pytest.raises(DegreeError):
        product_contract(vectors, vectors)
    with pytest.raises(DegreeError):
        product_wedge(vectors, unit_form())


def _unit(element_type, rank):
    return element_type.basis(PLANE, rank + 1, rank + 1)


class TestEmbedding:
    @given(products(Multivector, PLANE, RANK, 2))
    def test_split_inverts_embed(self, element):
        assert ProductElement.split(element.embed()) == element

    @given(st.integers(1, 2).flatmap(lambda k: st.tuples(
        products(Multivector, PLANE, RANK, k), products(Multivector, PLANE, RANK, 3 - k))))
    def test_wedge_is_compatible_with_embed(self, operands):
        a, b = operands
        assert product_wedge(a, b).embed() == wedge(a.embed(), b.embed())

    @given(products(MultiForm, PLANE, RANK, 1), products(Multivector, PLANE, RANK, 2))
    def test_contraction_by_a_pair_is_compatible_with_embed(self, forms, vectors):
        assert product_contract(forms, vectors).embed() == contract_form(forms.embed(),
                                                                         vectors.embed())

    @given(products(Multivector, PLANE, RANK, 1), products(MultiForm, PLANE, RANK, 1))
    def test_interior_of_degree_one_pairs(self, vectors, forms):
        result = product_interior(vectors, forms)
        assert result.first.scalar() == evaluate(vectors.embed(), forms.embed())

    @given(products(Multivector, PLANE, RANK, 2),
           multiforms(PLANE, RANK, 1), multiforms(PLANE, RANK, 1), scalars(PLANE), scalars(PLANE))
    def test_evaluation_is_evaluation_of_the_embedding(self, vectors, a1, a2, f1, f2):
        arguments = [(a1, f1), (a2, f2)]
        lifted = [a.with_rank(RANK + 1) + _unit(MultiForm, RANK) * f for a, f in arguments]
        assert evaluate_product(vectors, arguments) == evaluate(vectors.embed(), *lifted)

    @given(multivectors(PLANE, RANK, 2), multivectors(PLANE, RANK, 1))
    def test_scalar_multiples_act_componentwise(self, p, q):
        element = ProductElement(p, q)
        x = PLANE.var('x')
        assert (element * x).embed() == element.embed() * x
