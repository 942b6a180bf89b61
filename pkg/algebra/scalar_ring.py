"""
Exact coefficient ring.

Scalars are multivariate polynomials over the rationals. A time-extended ring
adds the time variable ``t`` and the Laurent generator ``u`` standing for
e^(-t), so that d/dt u = -u and negative powers of ``u`` encode e^(kt).

Every exponent tuple has the layout (base variables..., t, u), so lifting a
scalar into the time-extended ring with the same base variables is free.
"""
import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from algebra.errors import RingMismatchError, UnknownVariableError

logger = logging.getLogger(__name__)

TIME_VARIABLE = 't'
LAURENT_VARIABLE = 'u'
RESERVED_NAMES = (TIME_VARIABLE, LAURENT_VARIABLE)

Exponents = Tuple[int, ...]
Number = Union[int, Fraction]


class RingContext:
    """Declaration of a coefficient ring: ordered base variables plus the time flag."""

    __slots__ = ('variables', 'time_extended', '_positions')

    def __init__(self, variables: Sequence[str] = (), time_extended: bool = False):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"Duplicate variable names in {list(variables)}")
        for name in variables:
            if name in RESERVED_NAMES:
                raise ValueError(f"'{name}' is reserved and cannot be a base variable")
            if not name.isidentifier():
                raise ValueError(f"Invalid variable name: {name!r}")

        self.variables = variables
        self.time_extended = bool(time_extended)
        self._positions = {name: i for i, name in enumerate(variables)}
        if self.time_extended:
            self._positions[TIME_VARIABLE] = len(variables)
            self._positions[LAURENT_VARIABLE] = len(variables) + 1

    @property
    def width(self) -> int:
        """Length of every exponent tuple in this ring."""
        return len(self.variables) + 2

    @property
    def directions(self) -> Tuple[str, ...]:
        """Independent derivation directions: base variables, then t if present."""
        if self.time_extended:
            return self.variables + (TIME_VARIABLE,)
        return self.variables

    def position(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise UnknownVariableError(
                f"Unknown variable '{name}' (ring variables: {list(self._positions)})"
            ) from None

    def knows(self, name: str) -> bool:
        return name in self._positions

    def time_extended_copy(self) -> 'RingContext':
        return RingContext(self.variables, time_extended=True)

    # Element constructors

    def zero(self) -> 'Scalar':
        return Scalar(self)

    def one(self) -> 'Scalar':
        return self.constant(1)

    def constant(self, value: Number) -> 'Scalar':
        return Scalar(self, {(0,) * self.width: value})

    def var(self, name: str) -> 'Scalar':
        exps = [0] * self.width
        exps[self.position(name)] = 1
        return Scalar._from_clean(self, {tuple(exps): Fraction(1)})

    def coerce(self, value: Union['Scalar', Number]) -> 'Scalar':
        if isinstance(value, Scalar):
            if value.ctx != self:
                raise RingMismatchError(f"Scalar over {value.ctx!r} used in {self!r}")
            return value
        if isinstance(value, (int, Fraction)):
            return self.constant(value)
        raise TypeError(f"Cannot coerce {type(value).__name__} into {self!r}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingContext):
            return NotImplemented
        return self.variables == other.variables and self.time_extended == other.time_extended

    def __hash__(self) -> int:
        return hash((self.variables, self.time_extended))

    def __repr__(self) -> str:
        flag = ', time_extended=True' if self.time_extended else ''
        return f"RingContext({list(self.variables)}{flag})"


class Scalar:
    """Canonical sparse polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ('ctx', 'terms')

    def __init__(self, ctx: RingContext, terms: Optional[Dict[Exponents, Number]] = None):
        self.ctx = ctx
        self.terms: Dict[Exponents, Fraction] = {}
        if not terms:
            return
        width = ctx.width
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != width:
                raise RingMismatchError(f"Exponent tuple {exps} does not fit {ctx!r}")
            if any(e < 0 for e in exps[:-1]):
                raise ValueError(f"Negative exponent outside u in {exps}")
            if not ctx.time_extended and (exps[-2] or exps[-1]):
                raise RingMismatchError(f"t and u need a time-extended ring, got {exps}")
            if coeff:
                self.terms[exps] = Fraction(coeff)

    @classmethod
    def _from_clean(cls, ctx: RingContext, terms: Dict[Exponents, Fraction]) -> 'Scalar':
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.terms = terms
        return obj

    # Inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        zero = (0,) * self.ctx.width
        return all(exps == zero for exps in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return next(iter(self.terms.values()), Fraction(0))

    def is_time_independent(self) -> bool:
        return all(not exps[-2] and not exps[-1] for exps in self.terms)

    def degree_in(self, name: str) -> int:
        pos = self.ctx.position(name)
        return max((exps[pos] for exps in self.terms), default=0)

    def sorted_terms(self) -> List[Tuple[Exponents, Fraction]]:
        """Terms in canonical order (lexicographic on exponents, descending)."""
        return sorted(self.terms.items(), reverse=True)

    # Arithmetic

    def _other(self, other) -> Optional['Scalar']:
        if isinstance(other, Scalar):
            if other.ctx != self.ctx:
                raise RingMismatchError(f"Cannot combine {self.ctx!r} with {other.ctx!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.constant(other)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            total = terms.get(exps, 0) + coeff
            if total:
                terms[exps] = total
            else:
                terms.pop(exps, None)
        return Scalar._from_clean(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self) -> 'Scalar':
        return Scalar._from_clean(self.ctx, {exps: -c for exps, c in self.terms.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.ctx.zero()
            return Scalar._from_clean(self.ctx, {e: c * other for e, c in self.terms.items()})
        other = self._other(other)
        if other is None:
            return NotImplemented
        terms: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms.get(exps, 0) + c1 * c2
        return Scalar._from_clean(self.ctx, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of a Scalar by zero")
            return self * (Fraction(1) / other)
        if isinstance(other, Scalar):
            return self * other ** -1
        return NotImplemented

    def __pow__(self, exponent: int) -> 'Scalar':
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self._invert() ** (-exponent)
        result = self.ctx.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def _invert(self) -> 'Scalar':
        """Inverse of a unit: a nonzero constant times a power of u."""
        if len(self.terms) != 1:
            raise ValueError(f"{self} is not invertible")
        (exps, coeff), = self.terms.items()
        if any(exps[:-1]):
            raise ValueError(f"{self} is not invertible (only constants times u^k are)")
        inverse = exps[:-1] + (-exps[-1],)
        return Scalar._from_clean(self.ctx, {inverse: 1 / coeff})

    # Calculus

    def partial(self, name: str) -> 'Scalar':
        """Partial derivative along a base variable or t (with d/dt u = -u)."""
        if name == LAURENT_VARIABLE:
            raise ValueError("u encodes e^(-t) and is not an independent direction")
        pos = self.ctx.position(name)
        terms: Dict[Exponents, Fraction] = {}

        def accumulate(exps: Exponents, coeff: Fraction) -> None:
            total = terms.get(exps, 0) + coeff
            if total:
                terms[exps] = total
            else:
                terms.pop(exps, None)

        for exps, coeff in self.terms.items():
            power = exps[pos]
            if power:
                lowered = exps[:pos] + (power - 1,) + exps[pos + 1:]
                accumulate(lowered, coeff * power)
            if name == TIME_VARIABLE and exps[-1]:
                accumulate(exps, -exps[-1] * coeff)
        return Scalar._from_clean(self.ctx, terms)

    def lift(self, ctx: RingContext) -> 'Scalar':
        """The same element in a ring with the same base variables."""
        if ctx == self.ctx:
            return self
        if ctx.variables != self.ctx.variables:
            raise RingMismatchError(f"Cannot lift {self.ctx!r} into {ctx!r}")
        if not ctx.time_extended and not self.is_time_independent():
            raise RingMismatchError(f"{self} depends on t or u; target ring has neither")
        return Scalar._from_clean(ctx, dict(self.terms))

    # Comparison and printing

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ctx, frozenset(self.terms.items())))

    def _monomial_text(self, exps: Exponents) -> str:
        names = self.ctx.variables + RESERVED_NAMES
        factors = []
        for name, power in zip(names, exps):
            if power == 1:
                factors.append(name)
            elif power:
                factors.append(f"{name}^{power}")
        return '*'.join(factors)

    def format(self) -> str:
        """Deterministic text in the polynomial grammar accepted by ``parse_scalar``."""
        if not self.terms:
            return '0'
        pieces = []
        for index, (exps, coeff) in enumerate(self.sorted_terms()):
            monomial = self._monomial_text(exps)
            magnitude = abs(coeff)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if index == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
        return ''.join(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Scalar({self.format()!r})"


def scalar_sum(values: Iterable[Scalar], ctx: RingContext) -> Scalar:
    total = ctx.zero()
    for value in values:
        total = total + value
    return total
