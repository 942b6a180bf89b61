"""
Recursive-descent parser for the polynomial grammar.

    expression := ['+'|'-'] term (('+'|'-') term)*
    term       := factor ('*' factor)*
    factor     := atom ('^' ['-'] integer)?
    atom       := rational | variable | '(' expression ')'
    rational   := integer ('/' positive-integer)?

Whitespace is insignificant. A leading sign is accepted so that printed
Scalars (which may start with '-') parse back.
"""
import logging
import re
from fractions import Fraction
from typing import List, Tuple

from algebra.errors import ParseError, UnknownVariableError
from algebra.scalar_ring import RingContext, Scalar

logger = logging.getLogger(__name__)

_TOKEN_PATTERN = re.compile(r'\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))')

Token = Tuple[str, str, int]  # (kind, text, position)


def _tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        if not text[position:].strip():
            break
        match = _TOKEN_PATTERN.match(text, position)
        if match is None or match.end() == position:
            break
        number, name, symbol = match.groups()
        start = match.start(match.lastindex) if match.lastindex else position
        if number is not None:
            tokens.append(('int', number, start))
        elif name is not None:
            tokens.append(('name', name, start))
        elif symbol is not None:
            if symbol not in '+-*/^()':
                raise ParseError(f"Unexpected character {symbol!r}", text, start)
            tokens.append((symbol, symbol, start))
        position = match.end()
    tokens.append(('end', '', len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: RingContext):
        self.text = text
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str) -> Token:
        token = self.peek()
        if token[0] != kind:
            found = 'end of input' if token[0] == 'end' else repr(token[1])
            raise ParseError(f"Expected {kind!r} but found {found}", self.text, token[2])
        return self.advance()

    def parse(self) -> Scalar:
        if self.peek()[0] == 'end':
            raise ParseError("Empty expression", self.text, 0)
        value = self.expression()
        token = self.peek()
        if token[0] != 'end':
            raise ParseError(f"Unexpected {token[1]!r}", self.text, token[2])
        return value

    def expression(self) -> Scalar:
        negate = False
        if self.peek()[0] in ('+', '-'):
            negate = self.advance()[0] == '-'
        value = self.term()
        if negate:
            value = -value
        while self.peek()[0] in ('+', '-'):
            op = self.advance()[0]
            rhs = self.term()
            value = value + rhs if op == '+' else value - rhs
        return value

    def term(self) -> Scalar:
        value = self.factor()
        while self.peek()[0] == '*':
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> Scalar:
        base = self.atom()
        if self.peek()[0] != '^':
            return base
        self.advance()
        negative = False
        if self.peek()[0] == '-':
            self.advance()
            negative = True
        token = self.expect('int')
        exponent = -int(token[1]) if negative else int(token[1])
        if exponent < 0:
            if not self.ctx.time_extended:
                raise ParseError("Negative powers need a time-extended ring", self.text, token[2])
            try:
                return base ** exponent
            except ValueError:
                raise ParseError(
                    "Negative powers are only allowed on u", self.text, token[2]
                ) from None
        return base ** exponent

    def atom(self) -> Scalar:
        token = self.peek()
        kind = token[0]
        if kind == 'int':
            self.advance()
            numerator = int(token[1])
            if self.peek()[0] == '/':
                self.advance()
                denominator_token = self.expect('int')
                denominator = int(denominator_token[1])
                if denominator == 0:
                    raise ParseError("Zero denominator", self.text, denominator_token[2])
                return self.ctx.constant(Fraction(numerator, denominator))
            return self.ctx.constant(numerator)
        if kind == 'name':
            self.advance()
            if not self.ctx.knows(token[1]):
                raise UnknownVariableError(
                    f"Unknown variable '{token[1]}'", self.text, token[2]
                )
            return self.ctx.var(token[1])
        if kind == '(':
            self.advance()
            value = self.expression()
            self.expect(')')
            return value
        found = 'end of input' if kind == 'end' else repr(token[1])
        raise ParseError(f"Expected a number, variable or '(' but found {found}", self.text, token[2])


def parse_scalar(text: str, ctx: RingContext) -> Scalar:
    """Parse ``text`` into a canonical Scalar of ``ctx``.

    Args:
        text: Polynomial expression, e.g. ``"x*y - 1/2*x^2"`` or ``"u^-1*t"``
        ctx: Ring the expression lives in

    Returns:
        Canonical Scalar

    Raises:
        ParseError: Syntax error, with the offending position
        UnknownVariableError: Variable not declared in ``ctx``
    """
    if not isinstance(text, str):
        raise ParseError(f"Expected a polynomial string, got {type(text).__name__}")
    value = _Parser(text, ctx).parse()
    logger.debug(f"Parsed {text!r} -> {value}")
    return value


__all__ = ['parse_scalar']
