"""
Lie algebroids with polynomial structure functions over a coordinate chart.

An algebroid of rank n is given by its anchor matrix (one row per generator,
one column per base direction) and the structure functions c_ij^k of the
bracket on generators. Everything else (the bracket of arbitrary sections, the
Chevalley-Eilenberg differential, the Schouten bracket, Lie derivatives)
follows from these through the Leibniz rule.
"""
import logging
import random
import threading
from bisect import bisect_left
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from algebra.errors import ConsistencyError, DegreeError, RankMismatchError, RingMismatchError
from algebra.exterior import (
    IndexTuple,
    MultiForm,
    Multivector,
    contract_form,
    interior,
    wedge,
)
from algebra.scalar_ring import Number, RingContext, Scalar
from algebroids.checks import CheckReport, CheckResult

logger = logging.getLogger(__name__)

Entry = Union[Scalar, Number]
StructureSpec = Mapping[Tuple[int, int], Union[Sequence[Entry], Multivector]]


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


class Algebroid:
    """A Lie algebroid (A, [.,.], rho) of finite rank over a polynomial base.

    Attributes:
        ctx: Coefficient ring; its directions are the anchor columns
        rank: Number of generators e_1..e_n
        name: Optional label used in reports
    """

    def __init__(self, ctx: RingContext, rank: int,
                 anchor: Optional[Sequence[Sequence[Entry]]] = None,
                 structure: Optional[StructureSpec] = None,
                 name: Optional[str] = None):
        self.ctx = ctx
        self.rank = rank
        self.name = name or f"algebroid(rank={rank})"
        directions = ctx.directions

        if anchor is None:
            anchor = [[0] * len(directions) for _ in range(rank)]
        if len(anchor) != rank:
            raise RankMismatchError(f"Anchor has {len(anchor)} rows, expected {rank}")
        rows = []
        for i, row in enumerate(anchor, start=1):
            if len(row) != len(directions):
                raise RankMismatchError(
                    f"Anchor row {i} has {len(row)} entries, expected {len(directions)} "
                    f"(directions {list(directions)})"
                )
            rows.append(tuple(ctx.coerce(entry) for entry in row))
        self._anchor: Tuple[Tuple[Scalar, ...], ...] = tuple(rows)

        self._brackets: Dict[Tuple[int, int], Multivector] = {}
        for (i, j), value in (structure or {}).items():
            if not (1 <= i <= rank and 1 <= j <= rank):
                raise RankMismatchError(f"Bracket indices ({i}, {j}) outside 1..{rank}")
            if i == j:
                raise ValueError(f"Bracket entry ({i}, {i}) is forced to vanish")
            if isinstance(value, Multivector):
                if value.rank != rank or value.ctx != ctx:
                    raise RingMismatchError(f"Bracket value for ({i}, {j}) has the wrong rank or ring")
                vector = value
            else:
                if len(value) != rank:
                    raise RankMismatchError(
                        f"Bracket ({i}, {j}) has {len(value)} coefficients, expected {rank}"
                    )
                vector = Multivector.from_components(ctx, value)
            if i > j:
                i, j, vector = j, i, -vector
            if (i, j) in self._brackets:
                raise ValueError(f"Bracket ({i}, {j}) given twice")
            if vector:
                self._brackets[(i, j)] = vector

        self._generator_action_cache: Dict[Tuple[int, IndexTuple], Multivector] = {}
        self._cocycle_verdicts: Dict[MultiForm, bool] = {}
        self._lock = threading.Lock()

    # Constructors

    @classmethod
    def tangent(cls, ctx: RingContext, name: Optional[str] = None) -> 'Algebroid':
        """TM over the coordinate chart of ``ctx``: frame d/dx_a, identity anchor."""
        n = len(ctx.directions)
        anchor = [[1 if a == i else 0 for a in range(n)] for i in range(n)]
        return cls(ctx, n, anchor, {}, name=name or f"T R^{n}")

    @classmethod
    def lie_algebra(cls, rank: int, structure: StructureSpec,
                    name: Optional[str] = None) -> 'Algebroid':
        """A Lie algebra, i.e. an algebroid over a point."""
        return cls(RingContext(()), rank, None, structure, name=name)

    # Generators and anchor

    @property
    def directions(self) -> Tuple[str, ...]:
        return self.ctx.directions

    @property
    def anchor_rows(self) -> Tuple[Tuple[Scalar, ...], ...]:
        return self._anchor

    def structure_functions(self) -> Dict[Tuple[int, int], Multivector]:
        return dict(self._brackets)

    def is_point_base(self) -> bool:
        return not self.directions

    def generator(self, i: int) -> Multivector:
        return Multivector.basis(self.ctx, self.rank, i)

    def dual_generator(self, i: int) -> MultiForm:
        return MultiForm.basis(self.ctx, self.rank, i)

    def zero_vector(self, degree: int = 1) -> Multivector:
        return Multivector.zero(self.ctx, self.rank, degree)

    def zero_form(self, degree: int = 1) -> MultiForm:
        return MultiForm.zero(self.ctx, self.rank, degree)

    def scalar_vector(self, value: Entry) -> Multivector:
        return Multivector.from_scalar(self.ctx.coerce(value), self.rank)

    def scalar_form(self, value: Entry) -> MultiForm:
        return MultiForm.from_scalar(self.ctx.coerce(value), self.rank)

    def generator_bracket(self, i: int, j: int) -> Multivector:
        if i == j:
            return self.zero_vector()
        if i < j:
            return self._brackets.get((i, j)) or self.zero_vector()
        value = self._brackets.get((j, i))
        return -value if value is not None else self.zero_vector()

    def anchor_derivation(self, i: int, f: Scalar) -> Scalar:
        """rho(e_i)(f) = sum_a anchor[i][a] df/dx_a."""
        total = self.ctx.zero()
        if not f:
            return total
        for coeff, name in zip(self._anchor[i - 1], self.directions):
            if coeff:
                total = total + coeff * f.partial(name)
        return total

    def anchor_apply(self, section: Multivector, f: Scalar) -> Scalar:
        """rho(X)(f) for a section X."""
        total = self.ctx.zero()
        for (i,), x in section.coeffs.items():
            total = total + x * self.anchor_derivation(i, f)
        return total

    def anchor_of(self, section: Multivector) -> List[Scalar]:
        """rho(X) as its list of components along the base directions."""
        self._require_section(section)
        components = [self.ctx.zero() for _ in self.directions]
        for (i,), x in section.coeffs.items():
            for a, coeff in enumerate(self._anchor[i - 1]):
                if coeff:
                    components[a] = components[a] + x * coeff
        return components

    def anchor_vector(self, section: Multivector) -> Multivector:
        """rho(X) as a vector field on the tangent frame of the base."""
        return Multivector(self.ctx, len(self.directions), 1,
                           {(a + 1,): c for a, c in enumerate(self.anchor_of(section))})

    def anchor_transpose(self, form: MultiForm) -> MultiForm:
        """rho*(a) for a 1-form a on the tangent frame of the base."""
        components = []
        for row in self._anchor:
            total = self.ctx.zero()
            for a, coeff in enumerate(row):
                value = form.coefficient(a + 1)
                if coeff and value:
                    total = total + coeff * value
            components.append(total)
        return MultiForm(self.ctx, self.rank, 1, {(i + 1,): c for i, c in enumerate(components)})

    def function_differential(self, f: Scalar) -> MultiForm:
        """df as a section of A*: (df)(e_i) = rho(e_i)(f)."""
        f = self.ctx.coerce(f)
        return MultiForm(self.ctx, self.rank, 1,
                         {(i,): self.anchor_derivation(i, f) for i in range(1, self.rank + 1)})

    # Bracket of sections

    def _require_section(self, section: Multivector) -> None:
        if not isinstance(section, Multivector):
            raise DegreeError(f"Expected a section (Multivector), got {type(section).__name__}")
        if section.degree != 1 and section.coeffs:
            raise DegreeError(f"Expected a degree-1 section, got degree {section.degree}")
        if section.rank != self.rank or section.ctx != self.ctx:
            raise RankMismatchError(f"Section does not belong to {self.name}")

    def bracket(self, x: Multivector, y: Multivector) -> Multivector:
        """[X, Y] extended from the generators by bilinearity and the Leibniz rule."""
        self._require_section(x)
        self._require_section(y)
        result = self.zero_vector()
        for (i,), a in x.coeffs.items():
            for (j,), b in y.coeffs.items():
                if i != j:
                    structure = self.generator_bracket(i, j)
                    if structure:
                        result = result + structure * (a * b)
        for (j,), b in y.coeffs.items():
            derivative = self.anchor_apply(x, b)
            if derivative:
                result = result + self.generator(j) * derivative
        for (i,), a in x.coeffs.items():
            derivative = self.anchor_apply(y, a)
            if derivative:
                result = result - self.generator(i) * derivative
        return result

    def jacobiator(self, x: Multivector, y: Multivector, z: Multivector) -> Multivector:
        return (self.bracket(self.bracket(x, y), z)
                + self.bracket(self.bracket(y, z), x)
                + self.bracket(self.bracket(z, x), y))

    # Chevalley-Eilenberg differential

    def differential(self, form: MultiForm) -> MultiForm:
        """d: Gamma(^k A*) -> Gamma(^(k+1) A*) of the Lie algebroid."""
        if not isinstance(form, MultiForm):
            raise DegreeError(f"differential expects a MultiForm, got {type(form).__name__}")
        if form.rank != self.rank or form.ctx != self.ctx:
            raise RankMismatchError(f"Form does not belong to {self.name}")
        k = form.degree
        if k < 0 or not form.coeffs:
            return self.zero_form(k + 1)

        coeffs: Dict[IndexTuple, Scalar] = {}
        for key in combinations(range(1, self.rank + 1), k + 1):
            value = self.ctx.zero()
            for s, i in enumerate(key):
                rest = key[:s] + key[s + 1:]
                coefficient = form.coeffs.get(rest)
                if coefficient:
                    term = self.anchor_derivation(i, coefficient)
                    value = value - term if s % 2 else value + term
            for s in range(len(key)):
                for t in range(s + 1, len(key)):
                    structure = self.generator_bracket(key[s], key[t])
                    if not structure:
                        continue
                    rest = key[:s] + key[s + 1:t] + key[t + 1:]
                    for (m,), c in structure.coeffs.items():
                        position = bisect_left(rest, m)
                        if position < len(rest) and rest[position] == m:
                            continue
                        coefficient = form.coeffs.get(rest[:position] + (m,) + rest[position:])
                        if coefficient:
                            term = c * coefficient
                            value = value - term if (s + t + position) % 2 else value + term
            if value:
                coeffs[key] = value
        return MultiForm._from_clean(self.ctx, self.rank, k + 1, coeffs)

    def lie_derivative(self, section: Multivector, form: MultiForm) -> MultiForm:
        """L_X = d o i_X + i_X o d on forms."""
        self._require_section(section)
        return (self.differential(interior(section, form))
                + interior(section, self.differential(form)))

    # Schouten bracket

    def _generator_action(self, j: int, key: IndexTuple) -> Multivector:
        """[[e_j, e_key]] = sum_s e_i1 ^ .. ^ [e_j, e_is] ^ .. ^ e_ik (structure part only)."""
        with self._lock:
            cached = self._generator_action_cache.get((j, key))
        if cached is not None:
            return cached
        result = self.zero_vector(len(key))
        for s, i in enumerate(key):
            structure = self.generator_bracket(j, i)
            if not structure:
                continue
            head = Multivector.basis(self.ctx, self.rank, *key[:s])
            tail = Multivector.basis(self.ctx, self.rank, *key[s + 1:])
            result = result + wedge(wedge(head, structure), tail)
        with self._lock:
            return self._generator_action_cache.setdefault((j, key), result)

    def _generator_bracket_with(self, j: int, vector: Multivector) -> Multivector:
        """[[e_j, P]] for a generator e_j."""
        result = self.zero_vector(vector.degree)
        for key, f in vector.coeffs.items():
            derivative = self.anchor_derivation(j, f)
            if derivative:
                result = result + Multivector.basis(self.ctx, self.rank, *key) * derivative
            action = self._generator_action(j, key)
            if action:
                result = result + action * f
        return result

    def _bracket_with_function(self, vector: Multivector, f: Scalar) -> Multivector:
        """[[P, f]] = i_{df} P (zero when P has degree 0)."""
        if vector.degree <= 0:
            return self.zero_vector(vector.degree - 1)
        return contract_form(self.function_differential(f), vector)

    def _bracket_with_basis(self, vector: Multivector, key: IndexTuple,
                            cache: Dict[object, Multivector]) -> Multivector:
        """[[P, e_key]] through [[P, e_j ^ e_J]] = [[P,e_j]] ^ e_J + (-1)^(k+1) e_j ^ [[P, e_J]]."""
        k = vector.degree
        if not key:
            return self.zero_vector(k - 1)
        cached = cache.get(key)
        if cached is not None:
            return cached
        j, rest = key[0], key[1:]
        head = cache.get(j)
        if head is None:
            head = self._generator_bracket_with(j, vector) * _sign(k)
            cache[j] = head
        result = wedge(head, Multivector.basis(self.ctx, self.rank, *rest))
        inner = self._bracket_with_basis(vector, rest, cache)
        if inner:
            result = result + wedge(self.generator(j), inner) * _sign(k + 1)
        cache[key] = result
        return result

    def schouten(self, p: Multivector, q: Multivector) -> Multivector:
        """Schouten bracket [[P, Q]] of degree deg P + deg Q - 1.

        Normalised by [[X, f]] = rho(X)(f), [[P, Q]] = (-1)^(kk') [[Q, P]] and
        [[P, Q ^ R]] = [[P, Q]] ^ R + (-1)^(k'(k+1)) Q ^ [[P, R]].
        """
        for element in (p, q):
            if not isinstance(element, Multivector):
                raise DegreeError("schouten expects two Multivectors")
            if element.rank != self.rank or element.ctx != self.ctx:
                raise RankMismatchError(f"Multivector does not belong to {self.name}")
        k, l = p.degree, q.degree
        if not p.coeffs or not q.coeffs or k < 0 or l < 0:
            return self.zero_vector(k + l - 1)
        if k == 0:
            return self._bracket_with_function(q, p.scalar())
        if l == 0:
            return self._bracket_with_function(p, q.scalar())

        result = self.zero_vector(k + l - 1)
        cache: Dict[object, Multivector] = {}
        for key, g in q.coeffs.items():
            if not g.is_constant():
                part = self._bracket_with_function(p, g)
                if part:
                    result = result + wedge(part, Multivector.basis(self.ctx, self.rank, *key))
            basis_part = self._bracket_with_basis(p, key, cache)
            if basis_part:
                result = result + basis_part * g
        return result

    # Cocycles

    def cocycle_pair_defect(self, form: MultiForm, i: int, j: int) -> Scalar:
        """phi([e_i, e_j]) - rho(e_i)(phi(e_j)) + rho(e_j)(phi(e_i))."""
        structure = self.generator_bracket(i, j)
        value = self.ctx.zero()
        for (m,), c in structure.coeffs.items():
            value = value + c * form.coefficient(m)
        return (value - self.anchor_derivation(i, form.coefficient(j))
                + self.anchor_derivation(j, form.coefficient(i)))

    def is_cocycle(self, form: MultiForm) -> bool:
        """Whether phi is a 1-cocycle, by the generator-pair condition and by d(phi) = 0.

        The two routes must agree; the verdict is memoised per form.
        """
        if not isinstance(form, MultiForm):
            raise DegreeError("is_cocycle expects a MultiForm")
        if form.degree != 1 and form.coeffs:
            raise DegreeError(f"A 1-cocycle has degree 1, got {form.degree}")
        if form.rank != self.rank or form.ctx != self.ctx:
            raise RankMismatchError(f"Form does not belong to {self.name}")
        with self._lock:
            verdict = self._cocycle_verdicts.get(form)
        if verdict is not None:
            return verdict

        by_pairs = all(
            not self.cocycle_pair_defect(form, i, j)
            for i, j in combinations(range(1, self.rank + 1), 2)
        )
        by_differential = self.differential(form).is_zero() if form.coeffs else True
        if by_pairs != by_differential:
            raise ConsistencyError(
                f"Cocycle routes disagree for {form}: pairs={by_pairs}, d={by_differential}"
            )
        with self._lock:
            self._cocycle_verdicts.setdefault(form, by_pairs)
        logger.debug(f"{self.name}: cocycle verdict for {form} is {by_pairs}")
        return by_pairs

    # Axioms

    def check_axioms(self, seed: int = 0, samples: int = 20) -> CheckReport:
        """Jacobi identity on generator triples, anchor homomorphism, and a
        seeded Jacobi sample on function multiples (X_i, x_a X_j, X_k)."""
        report = CheckReport(subject=self.name)
        n = self.rank

        defect, where = None, None
        for i, j, k in combinations(range(1, n + 1), 3):
            value = self.jacobiator(self.generator(i), self.generator(j), self.generator(k))
            if value:
                defect, where = value, (i, j, k)
                break
        report.add(CheckResult.from_defect(
            'jacobi_identity', defect, detail=f"generator triple {where}" if where else None
        ))

        defect, where = None, None
        for i, j in combinations(range(1, n + 1), 2):
            bracket = self.generator_bracket(i, j)
            for name in self.directions:
                coordinate = self.ctx.var(name)
                lhs = self.anchor_apply(bracket, coordinate)
                rhs = (self.anchor_derivation(i, self.anchor_derivation(j, coordinate))
                       - self.anchor_derivation(j, self.anchor_derivation(i, coordinate)))
                if lhs != rhs:
                    defect, where = lhs - rhs, (i, j, name)
                    break
            if defect is not None:
                break
        report.add(CheckResult.from_defect(
            'anchor_homomorphism', defect,
            detail=f"generators ({where[0]}, {where[1]}) on coordinate {where[2]}" if where else None,
        ))

        if not self.directions or n == 0:
            report.add(CheckResult.skip('jacobi_function_multiples', 'no base directions'))
        else:
            rng = random.Random(seed)
            defect, where = None, None
            for _ in range(samples):
                i, j, k = (rng.randint(1, n) for _ in range(3))
                name = rng.choice(self.directions)
                multiple = self.generator(j) * self.ctx.var(name)
                value = self.jacobiator(self.generator(i), multiple, self.generator(k))
                if value:
                    defect, where = value, (i, name, j, k)
                    break
            report.add(CheckResult.from_defect(
                'jacobi_function_multiples', defect,
                detail=(f"triple (e{where[0]}, {where[1]}*e{where[2]}, e{where[3]})"
                        if where else None),
            ))
        return report

    def same_structure(self, other: 'Algebroid') -> bool:
        """Structural equality of ring, rank, anchor and structure functions."""
        return (self.ctx == other.ctx and self.rank == other.rank
                and self._anchor == other._anchor and self._brackets == other._brackets)

    def __repr__(self) -> str:
        return f"Algebroid({self.name!r}, rank={self.rank}, ring={self.ctx!r})"
