import pytest
from hypothesis import given
from hypothesis import strategies as st

from algebra.errors import DegreeError, RankMismatchError
from algebra.exterior import (
    MultiForm,
    Multivector,
    contract_form,
    evaluate,
    interior,
    merge_sign,
    pair,
    removal_sign,
    sharp,
    wedge,
)
from hypothesis_strategies import PLANE, SPACE, multiforms, multivectors

RANK = 4


def e(*indices, rank=3, ctx=SPACE):
    return Multivector.basis(ctx, rank, *indices)


def f(*indices, rank=3, ctx=SPACE):
    return MultiForm.basis(ctx, rank, *indices)


def test_wedge_of_a_generator_with_itself_vanishes():
    assert wedge(e(1), e(1)).is_zero()


def test_wedge_is_antisymmetric_on_generators():
    assert wedge(e(2), e(1)) == -wedge(e(1), e(2))


def test_wedge_is_bilinear_over_scalars():
    x, y = SPACE.var('x'), SPACE.var('y')
    assert wedge(e(1) * x, e(2, 3) * y) == e(1, 2, 3) * (x * y)


def test_basis_sorts_with_sign():
    assert e(3, 1, 2) == e(1, 2, 3)
    assert e(2, 1, 3) == -e(1, 2, 3)
    assert e(1, 1).is_zero()


def test_index_tuples_must_increase():
    with pytest.raises(ValueError):
        Multivector(SPACE, 3, 2, {(2, 1): 1})
    with pytest.raises(RankMismatchError):
        Multivector(SPACE, 3, 1, {(4,): 1})
    with pytest.raises(DegreeError):
        Multivector(SPACE, 3, 2, {(1,): 1})


def test_zero_coefficients_are_not_stored():
    element = Multivector(SPACE, 3, 1, {(1,): 0, (2,): 1})
    assert list(element.coeffs) == [(2,)]


def test_from_entries_accepts_any_order():
    entries = [((2, 1), 3), ((1, 3), SPACE.var('y'))]
    element = Multivector.from_entries(SPACE, 3, 2, entries)
    assert element.coefficient(1, 2) == -3
    assert element.coefficient(1, 3) == SPACE.var('y')


def test_contraction_examples():
    assert contract_form(f(1), e(1, 2)) == e(2)
    assert contract_form(f(2), e(1, 2)) == -e(1)
    assert contract_form(f(3), e(1, 2)).is_zero()


def test_contraction_above_the_degree_is_zero():
    assert contract_form(f(1, 2), e(1)).is_zero()
    assert interior(e(1, 2), f(1)).is_zero()


def test_pairing_of_dual_bases():
    assert pair(f(1, 2), e(1, 2)) == 1
    assert pair(f(1, 3), e(1, 2)) == 0
    with pytest.raises(DegreeError):
        pair(f(1), e(1, 2))


def test_evaluate_matches_pairing():
    bivector = e(1, 2) * SPACE.var('z') + e(2, 3)
    assert evaluate(bivector, f(1), f(2)) == SPACE.var('z')
    assert evaluate(bivector, f(2), f(1)) == -SPACE.var('z')
    with pytest.raises(DegreeError):
        evaluate(bivector, f(1))


def test_sharp_is_characterised_by_the_pairing():
    bivector = e(1, 2) + e(2, 3) * SPACE.var('x')
    for i in range(1, 4):
        for j in range(1, 4):
            assert pair(f(j), sharp(bivector, f(i))) == evaluate(bivector, f(i), f(j))


def test_kinds_do_not_mix():
    with pytest.raises(DegreeError):
        wedge(e(1), f(2))
    with pytest.raises(DegreeError):
        e(1) + f(1)


def test_rank_mismatch():
    with pytest.raises(RankMismatchError):
        wedge(e(1), Multivector.basis(SPACE, 2, 1))


def test_degrees_must_match_for_addition():
    with pytest.raises(DegreeError):
        e(1) + e(1, 2)
    assert e(1) + Multivector.zero(SPACE, 3, 2) == e(1)


def test_transposed_reads_the_dual_frame():
    form = e(1, 3).transposed()
    assert isinstance(form, MultiForm)
    assert form == f(1, 3)


def test_with_rank_embeds_into_larger_module():
    assert e(1, 2).with_rank(4) == Multivector.basis(SPACE, 4, 1, 2)
    with pytest.raises(RankMismatchError):
        e(1, 2).with_rank(2)


def test_printing():
    assert Multivector.zero(SPACE, 3, 2).format() == '0'
    assert e(1, 2).format() == 'e1^e2'
    assert (f(3) * SPACE.var('x')).format() == '(x)*e*3'


def test_merge_and_removal_signs():
    assert merge_sign((2,), (1,)) == (-1, (1, 2))
    assert merge_sign((1,), (1, 2)) == (0, None)
    assert removal_sign((2,), (1, 2)) == (-1, (1,))
    assert removal_sign((3,), (1, 2)) == (0, None)


class TestExteriorIdentities:
    @given(st.integers(0, 3).flatmap(lambda k: st.tuples(
        multivectors(PLANE, RANK, k), st.integers(0, RANK - k).flatmap(
            lambda l: multivectors(PLANE, RANK, l)))))
    def test_graded_commutativity(self, operands):
        a, b = operands
        sign = -1 if (a.degree * b.degree) % 2 else 1
        assert wedge(a, b) == wedge(b, a) * sign

    @given(multivectors(PLANE, RANK, 1), multivectors(PLANE, RANK, 1),
           multivectors(PLANE, RANK, 2))
    def test_associativity(self, a, b, c):
        assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))

    @given(multiforms(PLANE, RANK, 1), multivectors(PLANE, RANK, 2),
           multivectors(PLANE, RANK, 1))
    def test_contraction_is_an_antiderivation(self, alpha, p, q):
        lhs = contract_form(alpha, wedge(p, q))
        rhs = (wedge(contract_form(alpha, p), q)
               + wedge(p, contract_form(alpha, q)) * (1 if p.degree % 2 == 0 else -1))
        assert lhs == rhs

    @given(multiforms(PLANE, RANK, 1), multiforms(PLANE, RANK, 1), multivectors(PLANE, RANK, 3))
    def test_contraction_by_a_wedge_composes(self, alpha, beta, p):
        assert contract_form(wedge(alpha, beta), p) == contract_form(beta, contract_form(alpha, p))

    @given(multiforms(PLANE, RANK, 1))
    def test_contracting_twice_by_a_one_form_vanishes(self, alpha):
        p = Multivector.basis(PLANE, RANK, 1, 2, 3)
        assert contract_form(alpha, contract_form(alpha, p)).is_zero()

    @given(multiforms(PLANE, RANK, 2), multivectors(PLANE, RANK, 2))
    def test_full_contraction_is_the_pairing(self, omega, p):
        assert contract_form(omega, p).scalar() == pair(omega, p)
        assert interior(p, omega).scalar() == pair(omega, p)

    @given(multivectors(PLANE, RANK, 2), multiforms(PLANE, RANK, 1), multiforms(PLANE, RANK, 1))
    def test_bivectors_are_skew(self, p, alpha, beta):
        assert evaluate(p, alpha, beta) == -evaluate(p, beta, alpha)
