import pytest
from hypothesis import given
from hypothesis import strategies as st

from algebra.errors import CocycleError, DegreeError
from algebra.exterior import MultiForm, Multivector, contract_form, pair, wedge
from algebra.product_bundle import ProductElement
from algebroids.algebroid import Algebroid
from algebroids.jacobi_pair import build_tm_r
from algebroids.twisted import (
    check_morphism_pair,
    check_twisted_schouten_identities,
    morphism_pair,
    morphism_pullback,
    require_cocycle,
    tm_r_pair_bracket,
    twisted_anchor_apply,
    twisted_differential,
    twisted_lie_derivative_form,
    twisted_lie_derivative_mv,
    twisted_schouten,
)
from bialgebroids.lie_bialgebras import heisenberg
from hypothesis_strategies import PLANE, POINT, multiforms, multivectors, scalars

AFFINE = Algebroid(PLANE, 2, [[1, 0], [PLANE.var('x'), 0]], {(1, 2): [1, 0]}, name='affine')
AFFINE_PHI = AFFINE.dual_generator(2)
HEISENBERG = heisenberg().algebra
HEISENBERG_PHI = HEISENBERG.dual_generator(1)
TM_R, UNIT = build_tm_r(PLANE)


def test_twisted_differential_of_one_is_the_cocycle():
    assert twisted_differential(TM_R, UNIT, TM_R.scalar_form(1)) == UNIT
    assert twisted_differential(AFFINE, AFFINE_PHI, AFFINE.scalar_form(1)) == AFFINE_PHI


def test_non_cocycles_are_rejected():
    phi = HEISENBERG.dual_generator(3)
    with pytest.raises(CocycleError):
        require_cocycle(HEISENBERG, phi)
    with pytest.raises(CocycleError):
        twisted_differential(HEISENBERG, phi, HEISENBERG.scalar_form(1))
    with pytest.raises(CocycleError):
        twisted_schouten(HEISENBERG, phi, HEISENBERG.generator(1), HEISENBERG.generator(2))


def test_cocycle_check_can_be_skipped():
    phi = HEISENBERG.dual_generator(3)
    result = twisted_differential(HEISENBERG, phi, HEISENBERG.scalar_form(1), check_cocycle=False)
    assert result == phi


def test_non_constant_cocycle_on_affine():
    phi = AFFINE.dual_generator(1) + AFFINE.dual_generator(2) * PLANE.var('x')
    require_cocycle(AFFINE, phi)
    assert not AFFINE.is_cocycle(AFFINE.dual_generator(1))


def test_twisted_bracket_with_a_function():
    x = AFFINE.generator(2) * PLANE.var('y')
    f = PLANE.var('x') ** 2
    bracket = twisted_schouten(AFFINE, AFFINE_PHI, x, AFFINE.scalar_vector(f))
    assert bracket.scalar() == twisted_anchor_apply(AFFINE, AFFINE_PHI, x, f)
    assert twisted_anchor_apply(AFFINE, AFFINE_PHI, x, f) == (
        PLANE.var('x') ** 2 * PLANE.var('y') * 3)


def test_twisted_schouten_agrees_with_the_bracket_on_sections():
    x, y = AFFINE.generator(1), AFFINE.generator(2) * PLANE.var('y')
    assert twisted_schouten(AFFINE, AFFINE_PHI, x, y) == AFFINE.bracket(x, y)
    assert twisted_lie_derivative_mv(AFFINE, AFFINE_PHI, x, y) == AFFINE.bracket(x, y)


def test_twisted_schouten_on_heisenberg_bivectors():
    r = Multivector.basis(POINT, 3, 1, 2)
    # i_phi r = e2 wedges to zero against r
    expected = Multivector.basis(POINT, 3, 1, 2, 3) * -2
    assert twisted_schouten(HEISENBERG, HEISENBERG_PHI, r, r) == expected


def test_twisted_schouten_identities_report():
    vectors = [
        AFFINE.generator(1),
        AFFINE.generator(2) * PLANE.var('x'),
        Multivector.basis(PLANE, 2, 1, 2) * PLANE.var('y'),
        AFFINE.scalar_vector(PLANE.var('x') + 1),
    ]
    report = check_twisted_schouten_identities(AFFINE, AFFINE_PHI, vectors)
    assert report.passed, report.to_dict()
    assert [r.check_id for r in report.results] == [
        'graded_symmetry', 'function_bracket', 'derivation_rule']


def test_morphism_pair_on_generators():
    image = morphism_pair(AFFINE, AFFINE_PHI, AFFINE.generator(2))
    assert image == ProductElement(Multivector.basis(PLANE, 2, 1) * PLANE.var('x'),
                                   Multivector.from_scalar(PLANE.one(), 2))


@pytest.mark.parametrize('algebroid, phi', [
    (AFFINE, AFFINE_PHI),
    (AFFINE, AFFINE.zero_form()),
    (HEISENBERG, HEISENBERG_PHI),
    (TM_R, UNIT),
], ids=['affine', 'affine_untwisted', 'heisenberg', 'tm_r'])
def test_morphism_pair_is_a_homomorphism(algebroid, phi):
    assert check_morphism_pair(algebroid, phi).passed


def test_morphism_pair_fails_without_the_cocycle_condition():
    with pytest.raises(CocycleError):
        check_morphism_pair(HEISENBERG, HEISENBERG.dual_generator(3))


def test_pullback_needs_a_degree_one_form_pair():
    vectors = ProductElement(Multivector.basis(PLANE, 2, 1), Multivector.zero(PLANE, 2, 0))
    with pytest.raises(DegreeError):
        morphism_pullback(AFFINE, AFFINE_PHI, vectors)


def test_tm_r_pair_bracket():
    x = ProductElement(Multivector.basis(PLANE, 2, 1), Multivector.from_scalar(PLANE.zero(), 2))
    y = ProductElement(Multivector.basis(PLANE, 2, 2) * PLANE.var('x'),
                       Multivector.from_scalar(PLANE.var('x') * PLANE.var('y'), 2))
    bracket = tm_r_pair_bracket(AFFINE, x, y)
    assert bracket.first == Multivector.basis(PLANE, 2, 2)
    assert bracket.second.scalar() == PLANE.var('y')


class TestTwistedCalculus:
    @given(st.integers(0, 1).flatmap(lambda k: multiforms(PLANE, 2, k)))
    def test_twisted_differential_squares_to_zero(self, form):
        once = twisted_differential(AFFINE, AFFINE_PHI, form)
        assert twisted_differential(AFFINE, AFFINE_PHI, once).is_zero()

    @given(st.integers(0, 2).flatmap(lambda k: multiforms(POINT, 3, k)))
    def test_twisted_differential_squares_to_zero_on_heisenberg(self, form):
        once = twisted_differential(HEISENBERG, HEISENBERG_PHI, form)
        assert twisted_differential(HEISENBERG, HEISENBERG_PHI, once).is_zero()

    @given(multiforms(POINT, 3, 1), multiforms(POINT, 3, 1))
    def test_twisted_differential_is_a_derivation_up_to_the_cocycle(self, a, b):
        lhs = twisted_differential(HEISENBERG, HEISENBERG_PHI, wedge(a, b))
        rhs = (wedge(twisted_differential(HEISENBERG, HEISENBERG_PHI, a), b)
               - wedge(a, HEISENBERG.differential(b)))
        assert lhs == rhs

    @given(multivectors(PLANE, 2, 1), st.integers(0, 2).flatmap(lambda k: multiforms(PLANE, 2, k)))
    def test_twisted_lie_derivative_routes_agree(self, x, form):
        result = twisted_lie_derivative_form(AFFINE, AFFINE_PHI, x, form)
        assert result == AFFINE.lie_derivative(x, form) + form * pair(AFFINE_PHI, x)

    @given(multivectors(PLANE, 2, 1), multiforms(PLANE, 2, 1), multiforms(PLANE, 2, 0))
    def test_twisted_lie_derivative_product_rule(self, x, a, b):
        lhs = twisted_lie_derivative_form(AFFINE, AFFINE_PHI, x, wedge(a, b))
        rhs = (wedge(twisted_lie_derivative_form(AFFINE, AFFINE_PHI, x, a), b)
               + wedge(a, AFFINE.lie_derivative(x, b)))
        assert lhs == rhs

    @given(st.integers(0, 2).flatmap(lambda k: multivectors(PLANE, 2, k)),
           st.integers(0, 2).flatmap(lambda k: multivectors(PLANE, 2, k)))
    def test_graded_symmetry(self, p, q):
        sign = -1 if (p.degree * q.degree) % 2 else 1
        assert (twisted_schouten(AFFINE, AFFINE_PHI, p, q)
                == twisted_schouten(AFFINE, AFFINE_PHI, q, p) * sign)

    @given(st.integers(0, 3).flatmap(lambda k: multivectors(POINT, 3, k)),
           multivectors(POINT, 3, 1), multivectors(POINT, 3, 1))
    def test_derivation_rule(self, p, q, r):
        def bracket(a, b):
            return twisted_schouten(HEISENBERG, HEISENBERG_PHI, a, b)

        sign = -1 if (q.degree * (p.degree + 1)) % 2 else 1
        lhs = bracket(p, wedge(q, r))
        rhs = (wedge(bracket(p, q), r) + wedge(q, bracket(p, r)) * sign
               - wedge(wedge(contract_form(HEISENBERG_PHI, p), q), r))
        assert lhs == rhs

    @given(multivectors(PLANE, 2, 1), multivectors(PLANE, 2, 1), multivectors(PLANE, 2, 1))
    def test_jacobi_on_sections(self, x, y, z):
        def bracket(a, b):
            return twisted_schouten(AFFINE, AFFINE_PHI, a, b)

        total = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)
        assert total.is_zero()

    @given(multivectors(PLANE, 2, 1), multiforms(PLANE, 2, 1), scalars(PLANE))
    def test_pullback_is_dual_to_the_morphism(self, x, a, f):
        forms = ProductElement(a, MultiForm.from_scalar(f, 2))
        image = morphism_pair(AFFINE, AFFINE_PHI, x)
        lhs = pair(morphism_pullback(AFFINE, AFFINE_PHI, forms), x)
        assert lhs == pair(a, image.first) + f * image.second.scalar()
