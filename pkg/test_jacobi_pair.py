import pytest
from hypothesis import given
from hypothesis import strategies as st

from algebra.errors import DegreeError, RankMismatchError, UnverifiedStructureError
from algebra.exterior import MultiForm, Multivector
from algebra.product_bundle import ProductElement
from algebroids.algebroid import Algebroid
from algebroids.jacobi_pair import (
    JacobiStructure,
    bracket_reconstruction,
    build_tm_r,
    build_tstar_m_r,
    closed_form_tm_r_differential,
    closed_form_tm_r_schouten,
    closed_form_tstar_differential,
    closed_form_twisted_tm_r_differential,
    closed_form_twisted_tstar_differential,
    extended_schouten_tm_r,
    generic_tstar_differential,
    hamiltonian_vector_field,
    jacobi_bracket,
    poissonize,
    tstar_generator,
    tstar_pair_bracket,
    verify_jacobi,
)
from algebroids.twisted import twisted_differential, twisted_schouten
from hypothesis_strategies import PLANE, SPACE, products, scalars

CONTACT = JacobiStructure.contact_r3()
TSTAR, X0 = build_tstar_m_r(CONTACT)
TM_R, UNIT = build_tm_r(SPACE)


def without_reeb_field():
    return JacobiStructure(SPACE, CONTACT.bivector, Multivector.zero(SPACE, 3, 1), name='no E')


def small_scalars():
    return scalars(SPACE, max_terms=2, max_degree=2)


def test_contact_structure_is_jacobi():
    report = verify_jacobi(CONTACT.bivector, CONTACT.vector)
    assert report.passed
    assert [r.check_id for r in report.results] == ['lambda_lambda', 'e_lambda', 'product_route']
    assert not CONTACT.is_poisson()


def test_contact_bivector_alone_is_not_poisson():
    broken = without_reeb_field()
    report = verify_jacobi(broken.bivector, broken.vector)
    assert not report.get('lambda_lambda').passed
    assert report.get('e_lambda').passed
    assert not report.get('product_route').passed
    with pytest.raises(UnverifiedStructureError):
        build_tstar_m_r(broken)


def test_constant_bivector_is_poisson():
    structure = JacobiStructure.from_vectors(PLANE, Multivector.basis(PLANE, 2, 1, 2))
    assert structure.is_poisson()
    assert verify_jacobi(structure.bivector, structure.vector).passed


def test_structure_degrees_are_checked():
    with pytest.raises(DegreeError):
        JacobiStructure(SPACE, Multivector.basis(SPACE, 3, 1), CONTACT.vector)
    with pytest.raises(RankMismatchError):
        JacobiStructure(PLANE, CONTACT.bivector, CONTACT.vector)


def test_contact_brackets_of_coordinates():
    x, y, z = (SPACE.var(name) for name in ('x', 'y', 'z'))
    assert jacobi_bracket(CONTACT, x, y) == 1
    assert jacobi_bracket(CONTACT, SPACE.one(), z) == 1
    assert jacobi_bracket(CONTACT, y, z).is_zero()
    assert jacobi_bracket(CONTACT, x, z) == x


def test_hamiltonian_field_of_one_is_the_reeb_field():
    assert hamiltonian_vector_field(CONTACT, SPACE.one()) == CONTACT.vector


def test_poissonization_of_contact_is_poisson():
    bivector = poissonize(CONTACT)
    ctx = SPACE.time_extended_copy()
    assert bivector.ctx == ctx
    assert bivector.rank == 4
    assert Algebroid.tangent(ctx).schouten(bivector, bivector).is_zero()


def test_poissonization_detects_broken_structures():
    bivector = poissonize(without_reeb_field())
    tangent = Algebroid.tangent(SPACE.time_extended_copy())
    assert not tangent.schouten(bivector, bivector).is_zero()


def test_poissonization_needs_a_chart_without_time():
    time_ctx = SPACE.time_extended_copy()
    structure = JacobiStructure.from_vectors(time_ctx, Multivector.zero(time_ctx, 4, 2))
    with pytest.raises(RankMismatchError):
        poissonize(structure)


def test_tm_r_is_an_algebroid_with_cocycle():
    assert TM_R.rank == 4
    assert TM_R.check_axioms().passed
    assert TM_R.is_cocycle(UNIT)


def test_tstar_generators_and_anchor():
    assert TSTAR.rank == 4
    assert TSTAR.anchor_vector(TSTAR.generator(4)) == CONTACT.vector
    assert X0 == ProductElement(-CONTACT.vector, Multivector.zero(SPACE, 3, 0)).embed()
    assert tstar_generator(CONTACT, 4) == ProductElement(MultiForm.zero(SPACE, 3, 1),
                                                         MultiForm.from_scalar(SPACE.one(), 3))


def test_structure_functions_come_from_the_pair_bracket():
    for i in range(1, 5):
        for j in range(i + 1, 5):
            value = tstar_pair_bracket(CONTACT, tstar_generator(CONTACT, i),
                                       tstar_generator(CONTACT, j))
            assert TSTAR.generator_bracket(i, j) == value.embed().transposed()


def test_unit_section_brackets_by_the_reeb_field():
    unit = tstar_generator(CONTACT, 4)
    dz = tstar_generator(CONTACT, 3)
    # L_E dz = 0, Lambda(dz, 0) = 0, #dz(1) = 0 and E(1) = 0
    assert tstar_pair_bracket(CONTACT, unit, dz).is_zero()


class TestJacobiBracket:
    @given(small_scalars(), small_scalars(), small_scalars())
    def test_jacobi_identity(self, f, g, h):
        def bracket(a, b):
            return jacobi_bracket(CONTACT, a, b)

        total = bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g))
        assert total.is_zero()

    @given(small_scalars(), small_scalars())
    def test_antisymmetry(self, f, g):
        assert jacobi_bracket(CONTACT, f, g) == -jacobi_bracket(CONTACT, g, f)

    @given(small_scalars(), small_scalars())
    def test_hamiltonian_field_drives_the_bracket(self, f, g):
        field = hamiltonian_vector_field(CONTACT, f)
        tangent = CONTACT.tangent
        expected = jacobi_bracket(CONTACT, f, g) + g * tangent.anchor_apply(CONTACT.vector, f)
        assert tangent.anchor_apply(field, g) == expected

    @given(small_scalars())
    def test_tstar_anchor_is_the_hamiltonian_field(self, f):
        df = CONTACT.tangent.function_differential(f)
        section = ProductElement(df, MultiForm.from_scalar(f, 3)).embed().transposed()
        assert TSTAR.anchor_vector(section) == hamiltonian_vector_field(CONTACT, f)


class TestTangentProduct:
    @given(st.integers(1, 2).flatmap(lambda k: products(MultiForm, SPACE, 3, k, max_terms=1)))
    def test_differential_closed_form(self, forms):
        generic = ProductElement.split(TM_R.differential(forms.embed()))
        assert closed_form_tm_r_differential(forms) == generic

    @given(st.integers(1, 2).flatmap(lambda k: products(MultiForm, SPACE, 3, k, max_terms=1)))
    def test_twisted_differential_closed_form(self, forms):
        generic = ProductElement.split(twisted_differential(TM_R, UNIT, forms.embed()))
        assert closed_form_twisted_tm_r_differential(forms) == generic

    @given(st.integers(1, 2).flatmap(lambda k: st.tuples(
        products(Multivector, SPACE, 3, k, max_terms=1),
        products(Multivector, SPACE, 3, 3 - k, max_terms=1))))
    def test_schouten_closed_form(self, operands):
        a, b = operands
        generic = ProductElement.split(TM_R.schouten(a.embed(), b.embed()))
        assert closed_form_tm_r_schouten(a, b) == generic

    @given(st.integers(1, 2).flatmap(lambda k: st.tuples(
        products(Multivector, SPACE, 3, k, max_terms=1),
        products(Multivector, SPACE, 3, 3 - k, max_terms=1))))
    def test_extended_schouten_is_the_twisted_bracket(self, operands):
        a, b = operands
        generic = ProductElement.split(twisted_schouten(TM_R, UNIT, a.embed(), b.embed()))
        assert extended_schouten_tm_r(a, b) == generic


class TestCotangentProduct:
    @given(st.integers(1, 2).flatmap(lambda k: products(Multivector, SPACE, 3, k, max_terms=1)))
    def test_differential_closed_form(self, vectors):
        assert (closed_form_tstar_differential(CONTACT, vectors)
                == generic_tstar_differential(TSTAR, vectors))

    @given(st.integers(1, 2).flatmap(lambda k: products(Multivector, SPACE, 3, k, max_terms=1)))
    def test_twisted_differential_closed_form(self, vectors):
        assert (closed_form_twisted_tstar_differential(CONTACT, vectors)
                == generic_tstar_differential(TSTAR, vectors, x0=X0))

    @given(products(MultiForm, SPACE, 3, 1, max_terms=1),
           products(MultiForm, SPACE, 3, 1, max_terms=1))
    def test_bracket_reconstruction(self, a, b):
        direct = tstar_pair_bracket(CONTACT, a, b)
        by_lie_derivatives, by_interiors = bracket_reconstruction(CONTACT, a, b)
        assert by_lie_derivatives == direct
        assert by_interiors == direct
