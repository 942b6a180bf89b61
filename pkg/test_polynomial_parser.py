from fractions import Fraction

import pytest

from algebra.errors import ParseError, UnknownVariableError
from algebra.polynomial_parser import parse_scalar
from hypothesis_strategies import LINE_TIME, PLANE, SPACE


def test_zero():
    assert parse_scalar('0', PLANE).is_zero()


def test_two_monomials():
    s = parse_scalar('x*y - 1/2*x^2', PLANE)
    assert len(s.terms) == 2
    assert s == PLANE.var('x') * PLANE.var('y') - PLANE.var('x') ** 2 * Fraction(1, 2)


def test_laurent_monomial():
    s = parse_scalar('u^-1 * t', LINE_TIME)
    assert s.terms == {(0, 1, -1): Fraction(1)}
    assert s.degree_in('t') == 1


@pytest.mark.parametrize('text, expected', [
    ('x + x', '2*x'),
    ('(x + y)^2', 'x^2 + 2*x*y + y^2'),
    ('-x + 3', '3 - x'),
    ('  x*  y ', 'y*x'),
    ('2/4', '1/2'),
    ('-(x - y)', 'y - x'),
])
def test_canonical_forms_agree(text, expected):
    assert parse_scalar(text, PLANE) == parse_scalar(expected, PLANE)


def test_leading_sign_of_printed_output():
    s = parse_scalar('-y', PLANE)
    assert parse_scalar(s.format(), PLANE) == s


def test_unknown_variable():
    with pytest.raises(UnknownVariableError) as excinfo:
        parse_scalar('x + w', PLANE)
    assert excinfo.value.position == 4


@pytest.mark.parametrize('text', ['x*y ', 'x*y\n', '\tx * y  ', ' x*y'])
def test_surrounding_whitespace_is_ignored(text):
    assert parse_scalar(text, PLANE) == PLANE.var('x') * PLANE.var('y')


def test_syntax_error_carries_position():
    with pytest.raises(ParseError) as excinfo:
        parse_scalar('x + * y', PLANE)
    assert excinfo.value.position == 4
    assert 'position 4' in str(excinfo.value)


@pytest.mark.parametrize('text', ['', '   ', 'x +', '(x', 'x)', '1/0', 'x $ y', 'x^y', '3 4'])
def test_malformed_input(text):
    with pytest.raises(ParseError):
        parse_scalar(text, SPACE)


def test_negative_power_needs_a_time_extended_ring():
    with pytest.raises(ParseError):
        parse_scalar('u^-1', PLANE)
    with pytest.raises(ParseError):
        parse_scalar('x^-1', PLANE)


def test_negative_power_only_on_u():
    with pytest.raises(ParseError):
        parse_scalar('x^-2', LINE_TIME)
    assert parse_scalar('u^-2 * u^2', LINE_TIME) == LINE_TIME.one()


def test_non_string_input():
    with pytest.raises(ParseError):
        parse_scalar(3, PLANE)
