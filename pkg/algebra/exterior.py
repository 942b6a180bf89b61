"""
Sparse exterior algebra over a free module of finite rank.

Elements are stored as maps from strictly increasing 1-based index tuples to
nonzero Scalars. ``Multivector`` lives on the frame e_1..e_n and ``MultiForm``
on the dual frame e*_1..e*_n; both share the same storage.

Conventions:
    - k-forms pair with k-vectors through the determinant of the Kronecker
      matrix, so P(a_1, ..., a_k) = <a_1 ^ ... ^ a_k, P>.
    - A 1-form contracts as i_a(X_1^...^X_r) = sum_s (-1)^s a(X_{s+1}) X_1^..^X_r
      with the (s+1)-th factor removed; for higher forms i_{a^b} = i_b o i_a.
"""
import logging
from bisect import bisect_left
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from algebra.errors import DegreeError, RankMismatchError, RingMismatchError
from algebra.scalar_ring import Number, RingContext, Scalar

logger = logging.getLogger(__name__)

IndexTuple = Tuple[int, ...]
Coefficient = Union[Scalar, Number]


def merge_sign(left: IndexTuple, right: IndexTuple) -> Tuple[int, Optional[IndexTuple]]:
    """Sign and sorted union of e_left ^ e_right; (0, None) when they overlap."""
    inversions = 0
    for index in left:
        position = bisect_left(right, index)
        if position < len(right) and right[position] == index:
            return 0, None
        inversions += position
    merged = tuple(sorted(left + right))
    return (-1 if inversions % 2 else 1), merged


def removal_sign(removed: IndexTuple, source: IndexTuple) -> Tuple[int, Optional[IndexTuple]]:
    """Sign and remainder of contracting the sorted indices ``removed`` out of ``source``.

    The indices are removed smallest first, each contributing (-1)^position in
    the tuple as it stands at that moment.
    """
    exponent = 0
    for count, index in enumerate(removed):
        position = bisect_left(source, index)
        if position == len(source) or source[position] != index:
            return 0, None
        exponent += position - count
    removed_set = set(removed)
    remainder = tuple(i for i in source if i not in removed_set)
    return (-1 if exponent % 2 else 1), remainder


class ExteriorElement:
    """Homogeneous element of degree ``degree`` over a rank-``rank`` free module.

    Elements of negative degree, or of degree above the rank, exist only as zero.
    """

    __slots__ = ('ctx', 'rank', 'degree', 'coeffs')

    kind = 'element'
    symbol = 'e'

    def __init__(self, ctx: RingContext, rank: int, degree: int,
                 coeffs: Optional[Dict[IndexTuple, Coefficient]] = None):
        if rank < 0:
            raise RankMismatchError(f"Negative rank {rank}")
        self.ctx = ctx
        self.rank = rank
        self.degree = degree
        self.coeffs: Dict[IndexTuple, Scalar] = {}
        for key, value in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != degree:
                raise DegreeError(f"Index tuple {key} does not have degree {degree}")
            if any(b <= a for a, b in zip(key, key[1:])):
                raise ValueError(f"Index tuple {key} is not strictly increasing")
            if key and (key[0] < 1 or key[-1] > rank):
                raise RankMismatchError(f"Index tuple {key} outside 1..{rank}")
            scalar = ctx.coerce(value)
            if scalar:
                self.coeffs[key] = scalar

    @classmethod
    def _from_clean(cls, ctx: RingContext, rank: int, degree: int,
                    coeffs: Dict[IndexTuple, Scalar]):
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.rank = rank
        obj.degree = degree
        obj.coeffs = {key: value for key, value in coeffs.items() if value}
        return obj

    # Constructors

    @classmethod
    def zero(cls, ctx: RingContext, rank: int, degree: int):
        return cls._from_clean(ctx, rank, degree, {})

    @classmethod
    def basis(cls, ctx: RingContext, rank: int, *indices: int):
        """The wedge of basis elements with the given indices (in the given order)."""
        if any(i < 1 or i > rank for i in indices):
            raise RankMismatchError(f"Basis indices {indices} outside 1..{rank}")
        if len(set(indices)) != len(indices):
            return cls.zero(ctx, rank, len(indices))
        order = sorted(range(len(indices)), key=lambda k: indices[k])
        inversions = sum(
            1 for a in range(len(order)) for b in range(a + 1, len(order)) if order[a] > order[b]
        )
        sign = -1 if inversions % 2 else 1
        return cls._from_clean(ctx, rank, len(indices),
                               {tuple(sorted(indices)): ctx.constant(sign)})

    @classmethod
    def from_scalar(cls, value: Scalar, rank: int):
        return cls._from_clean(value.ctx, rank, 0, {(): value})

    @classmethod
    def from_components(cls, ctx: RingContext, components: Sequence[Coefficient]):
        """Degree-1 element from its list of frame components."""
        rank = len(components)
        return cls(ctx, rank, 1, {(i + 1,): c for i, c in enumerate(components)})

    @classmethod
    def from_entries(cls, ctx: RingContext, rank: int, degree: int,
                     entries: Iterable[Tuple[Sequence[int], Coefficient]]):
        """Sum of (indices, coefficient) records; indices may come in any order."""
        result = cls.zero(ctx, rank, degree)
        for indices, coeff in entries:
            if len(indices) != degree:
                raise DegreeError(f"Entry {list(indices)} does not have degree {degree}")
            result = result + cls.basis(ctx, rank, *indices) * coeff
        return result

    # Inspection

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, *indices: int) -> Scalar:
        return self.coeffs.get(tuple(indices), self.ctx.zero())

    def components(self) -> List[Scalar]:
        """Frame components of a degree-1 element."""
        if self.degree != 1:
            raise DegreeError(f"components() needs degree 1, got {self.degree}")
        return [self.coefficient(i) for i in range(1, self.rank + 1)]

    def scalar(self) -> Scalar:
        """The coefficient of a degree-0 element."""
        if self.degree == 0:
            return self.coeffs.get((), self.ctx.zero())
        if not self.coeffs:
            return self.ctx.zero()
        raise DegreeError(f"scalar() needs degree 0, got {self.degree}")

    def terms(self) -> List[Tuple[IndexTuple, Scalar]]:
        """Terms in canonical order."""
        return sorted(self.coeffs.items())

    def first_term(self) -> Optional[Tuple[IndexTuple, Scalar]]:
        """First nonzero term in canonical order, used as a defect witness."""
        terms = self.terms()
        return terms[0] if terms else None

    def to_entries(self) -> List[Dict[str, object]]:
        return [{'indices': list(key), 'coeff': value.format()} for key, value in self.terms()]

    # Arithmetic

    def _compatible(self, other: 'ExteriorElement', operation: str) -> None:
        if type(other) is not type(self):
            raise DegreeError(f"Cannot {operation} {self.kind} and {other.kind}")
        if other.rank != self.rank:
            raise RankMismatchError(f"Cannot {operation} rank {self.rank} and rank {other.rank}")
        if other.ctx != self.ctx:
            raise RingMismatchError(f"Cannot {operation} elements over {self.ctx!r} and {other.ctx!r}")

    def _same_degree(self, other: 'ExteriorElement') -> int:
        if self.degree == other.degree:
            return self.degree
        if not other.coeffs:
            return self.degree
        if not self.coeffs:
            return other.degree
        raise DegreeError(f"Cannot add degree {self.degree} and degree {other.degree}")

    def __add__(self, other):
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        self._compatible(other, 'add')
        degree = self._same_degree(other)
        coeffs = dict(self.coeffs)
        for key, value in other.coeffs.items():
            coeffs[key] = coeffs[key] + value if key in coeffs else value
        return self._from_clean(self.ctx, self.rank, degree, coeffs)

    def __neg__(self):
        return self._from_clean(self.ctx, self.rank, self.degree,
                                {key: -value for key, value in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, factor):
        """Multiplication by a Scalar or a rational number."""
        if isinstance(factor, (int, Fraction)):
            if not factor:
                return self.zero(self.ctx, self.rank, self.degree)
            return self._from_clean(self.ctx, self.rank, self.degree,
                                    {key: value * factor for key, value in self.coeffs.items()})
        if isinstance(factor, Scalar):
            if factor.ctx != self.ctx:
                raise RingMismatchError(f"Scalar over {factor.ctx!r} times element over {self.ctx!r}")
            return self._from_clean(self.ctx, self.rank, self.degree,
                                    {key: value * factor for key, value in self.coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def map_coefficients(self, function) -> 'ExteriorElement':
        """Apply a Scalar -> Scalar map to every coefficient (e.g. a partial derivative)."""
        return self._from_clean(self.ctx, self.rank, self.degree,
                                {key: function(value) for key, value in self.coeffs.items()})

    def lift(self, ctx: RingContext) -> 'ExteriorElement':
        if ctx == self.ctx:
            return self
        return self._from_clean(ctx, self.rank, self.degree,
                                {key: value.lift(ctx) for key, value in self.coeffs.items()})

    def with_rank(self, rank: int) -> 'ExteriorElement':
        """The same element viewed in a module of larger rank."""
        if rank < self.rank:
            raise RankMismatchError(f"Cannot shrink rank {self.rank} to {rank}")
        return self._from_clean(self.ctx, rank, self.degree, dict(self.coeffs))

    def transposed(self) -> 'ExteriorElement':
        """The same coefficients read on the dual frame (vector <-> form)."""
        other = MultiForm if isinstance(self, Multivector) else Multivector
        return other._from_clean(self.ctx, self.rank, self.degree, dict(self.coeffs))

    # Comparison and printing

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        if type(other) is not type(self) or other.rank != self.rank or other.ctx != self.ctx:
            return False
        if not self.coeffs and not other.coeffs:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.ctx, self.rank,
                     self.degree if self.coeffs else None,
                     frozenset(self.coeffs.items())))

    def format(self) -> str:
        if not self.coeffs:
            return '0'
        pieces = []
        for key, value in self.terms():
            basis = '^'.join(f"{self.symbol}{i}" for i in key)
            text = value.format()
            if not basis:
                pieces.append(f"({text})")
            elif text == '1':
                pieces.append(basis)
            else:
                pieces.append(f"({text})*{basis}")
        return ' + '.join(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"{type(self).__name__}(deg={self.degree}, rank={self.rank}, {self.format()})"


class Multivector(ExteriorElement):
    """Section of the k-th exterior power of the module."""

    __slots__ = ()
    kind = 'multivector'
    symbol = 'e'


class MultiForm(ExteriorElement):
    """Section of the k-th exterior power of the dual module."""

    __slots__ = ()
    kind = 'multiform'
    symbol = 'e*'


def _check_pair(a: ExteriorElement, b: ExteriorElement) -> None:
    if a.rank != b.rank:
        raise RankMismatchError(f"Rank mismatch: {a.rank} vs {b.rank}")
    if a.ctx != b.ctx:
        raise RingMismatchError(f"Ring mismatch: {a.ctx!r} vs {b.ctx!r}")


def wedge(a: ExteriorElement, b: ExteriorElement) -> ExteriorElement:
    """Exterior product of two elements of the same kind."""
    if type(a) is not type(b):
        raise DegreeError(f"Cannot wedge a {a.kind} with a {b.kind}")
    _check_pair(a, b)
    degree = a.degree + b.degree
    coeffs: Dict[IndexTuple, Scalar] = {}
    for left, x in a.coeffs.items():
        for right, y in b.coeffs.items():
            sign, merged = merge_sign(left, right)
            if not sign:
                continue
            value = x * y if sign > 0 else -(x * y)
            coeffs[merged] = coeffs[merged] + value if merged in coeffs else value
    return type(a)._from_clean(a.ctx, a.rank, degree, coeffs)


def wedge_all(elements: Sequence[ExteriorElement]) -> ExteriorElement:
    if not elements:
        raise ValueError("wedge_all needs at least one element")
    result = elements[0]
    for element in elements[1:]:
        result = wedge(result, element)
    return result


def _contract(inner: ExteriorElement, outer: ExteriorElement, result_type):
    _check_pair(inner, outer)
    degree = outer.degree - inner.degree
    if degree < 0:
        return result_type.zero(outer.ctx, outer.rank, degree)
    coeffs: Dict[IndexTuple, Scalar] = {}
    for removed, x in inner.coeffs.items():
        for source, y in outer.coeffs.items():
            sign, remainder = removal_sign(removed, source)
            if not sign:
                continue
            value = x * y if sign > 0 else -(x * y)
            coeffs[remainder] = coeffs[remainder] + value if remainder in coeffs else value
    return result_type._from_clean(outer.ctx, outer.rank, degree, coeffs)


def contract_form(form: MultiForm, vector: Multivector) -> Multivector:
    """Interior product i_form(vector), of degree deg(vector) - deg(form)."""
    if not isinstance(form, MultiForm) or not isinstance(vector, Multivector):
        raise DegreeError("contract_form expects (MultiForm, Multivector)")
    return _contract(form, vector, Multivector)


def interior(vector: Multivector, form: MultiForm) -> MultiForm:
    """Interior product i_vector(form), of degree deg(form) - deg(vector)."""
    if not isinstance(vector, Multivector) or not isinstance(form, MultiForm):
        raise DegreeError("interior expects (Multivector, MultiForm)")
    return _contract(vector, form, MultiForm)


def pair(form: MultiForm, vector: Multivector) -> Scalar:
    """Full contraction <form, vector> of equal degrees (determinant pairing)."""
    if form.degree != vector.degree and form.coeffs and vector.coeffs:
        raise DegreeError(f"Cannot pair a {form.degree}-form with a {vector.degree}-vector")
    _check_pair(form, vector)
    total = vector.ctx.zero()
    for key, x in form.coeffs.items():
        y = vector.coeffs.get(key)
        if y is not None:
            total = total + x * y
    return total


def evaluate(vector: Multivector, *forms: MultiForm) -> Scalar:
    """P(a_1, ..., a_k) = <a_1 ^ ... ^ a_k, P>."""
    if len(forms) != vector.degree:
        raise DegreeError(f"A {vector.degree}-vector takes {vector.degree} forms, got {len(forms)}")
    if not forms:
        return vector.scalar()
    return pair(wedge_all(forms), vector)


def sharp(bivector: Multivector, form: MultiForm) -> Multivector:
    """#_P(a), characterised by <b, #_P(a)> = P(a, b)."""
    if bivector.degree != 2 and bivector.coeffs:
        raise DegreeError(f"sharp needs a bivector, got degree {bivector.degree}")
    if form.degree != 1 and form.coeffs:
        raise DegreeError(f"sharp needs a 1-form, got degree {form.degree}")
    if not bivector.coeffs:
        return Multivector.zero(bivector.ctx, bivector.rank, 1)
    return contract_form(form, bivector)


def iter_index_tuples(rank: int, degree: int) -> Iterator[IndexTuple]:
    """All strictly increasing index tuples of the given degree, in canonical order."""
    return combinations(range(1, rank + 1), degree)


__all__ = [
    'ExteriorElement', 'Multivector', 'MultiForm',
    'wedge', 'wedge_all', 'contract_form', 'interior', 'pair', 'evaluate', 'sharp',
    'merge_sign', 'removal_sign', 'iter_index_tuples',
]
