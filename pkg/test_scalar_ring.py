from fractions import Fraction

import pytest
from hypothesis import given

from algebra.errors import RingMismatchError, UnknownVariableError
from algebra.polynomial_parser import parse_scalar
from algebra.scalar_ring import RingContext, Scalar, scalar_sum
from hypothesis_strategies import LINE_TIME, PLANE, PLANE_TIME, laurent_units, scalars


def test_reserved_and_duplicate_names_are_rejected():
    with pytest.raises(ValueError):
        RingContext(('x', 'x'))
    with pytest.raises(ValueError):
        RingContext(('t',))
    with pytest.raises(ValueError):
        RingContext(('u', 'x'))


def test_directions_include_t_only_when_time_extended():
    assert PLANE.directions == ('x', 'y')
    assert PLANE_TIME.directions == ('x', 'y', 't')
    assert PLANE.time_extended_copy() == PLANE_TIME
    assert not PLANE.knows('u')
    assert PLANE_TIME.knows('u')


def test_unknown_variable_position():
    with pytest.raises(UnknownVariableError):
        PLANE.position('z')


def test_t_and_u_exponents_need_a_time_extended_ring():
    with pytest.raises(RingMismatchError):
        Scalar(PLANE, {(0, 0, 1, 0): 1})


def test_zero_and_fraction_printing():
    assert PLANE.zero().format() == '0'
    assert PLANE.constant(Fraction(-1, 2)).format() == '-1/2'
    assert PLANE.one() == 1
    assert PLANE.zero() == 0


def test_partial_power_rule():
    s = parse_scalar('x^2*y', PLANE)
    assert s.partial('x') == parse_scalar('2*x*y', PLANE)


def test_partial_t_of_u():
    u = LINE_TIME.var('u')
    assert u.partial('t') == -u


def test_partial_t_product_rule_across_t_and_u():
    s = parse_scalar('t*u^2', LINE_TIME)
    assert s.partial('t') == parse_scalar('u^2 - 2*t*u^2', LINE_TIME)


def test_partial_along_u_is_rejected():
    with pytest.raises(ValueError):
        LINE_TIME.var('u').partial('u')


def test_only_laurent_monomials_invert():
    u = LINE_TIME.var('u')
    assert (u * 3) ** -1 == u ** -1 * Fraction(1, 3)
    with pytest.raises(ValueError):
        LINE_TIME.var('x') ** -1
    with pytest.raises(ValueError):
        (u + 1) ** -1


def test_lift_into_time_extended_ring():
    s = parse_scalar('x*y + 1', PLANE)
    lifted = s.lift(PLANE_TIME)
    assert lifted.ctx == PLANE_TIME
    assert lifted.partial('t').is_zero()
    with pytest.raises(RingMismatchError):
        PLANE_TIME.var('t').lift(PLANE)


def test_mixing_rings_is_rejected():
    with pytest.raises(RingMismatchError):
        PLANE.var('x') + PLANE_TIME.var('x')


def test_scalar_sum():
    values = [PLANE.var('x'), PLANE.var('y'), -PLANE.var('x')]
    assert scalar_sum(values, PLANE) == PLANE.var('y')


class TestRingAxioms:
    @given(scalars(PLANE_TIME), scalars(PLANE_TIME), scalars(PLANE_TIME))
    def test_associativity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)

    @given(scalars(PLANE_TIME), scalars(PLANE_TIME))
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(scalars(PLANE_TIME), scalars(PLANE_TIME), scalars(PLANE_TIME))
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(scalars(PLANE_TIME))
    def test_additive_inverse(self, a):
        assert (a - a).is_zero()

    @given(laurent_units(LINE_TIME))
    def test_units_invert(self, unit):
        assert unit * unit ** -1 == 1

    def test_u_times_its_inverse(self):
        u = PLANE_TIME.var('u')
        assert u * u ** -1 == PLANE_TIME.one()


class TestPartialDerivatives:
    @given(scalars(PLANE_TIME, max_degree=3))
    def test_partials_commute(self, s):
        assert s.partial('x').partial('y') == s.partial('y').partial('x')
        assert s.partial('x').partial('t') == s.partial('t').partial('x')

    @given(scalars(PLANE_TIME), scalars(PLANE_TIME))
    def test_leibniz_rule(self, a, b):
        for name in ('x', 'y', 't'):
            assert (a * b).partial(name) == a.partial(name) * b + a * b.partial(name)

    @given(scalars(PLANE))
    def test_constants_differentiate_to_zero(self, s):
        constant = PLANE.constant(7)
        assert constant.partial('x').is_zero()
        assert (s + constant).partial('y') == s.partial('y')


class TestPrinting:
    @given(scalars(PLANE_TIME, fractional=True))
    def test_printed_scalars_parse_back(self, s):
        assert parse_scalar(s.format(), PLANE_TIME) == s

    @given(scalars(PLANE))
    def test_printing_is_deterministic(self, s):
        rebuilt = parse_scalar(s.format(), PLANE)
        assert rebuilt.format() == s.format()
