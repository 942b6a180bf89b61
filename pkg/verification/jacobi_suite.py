"""
Jacobi pairs (Lambda, E) and the two algebroids TM x R and T*M x R they carry.
"""

import logging
from functools import cached_property
from itertools import combinations
from typing import Tuple

from algebra.exterior import MultiForm, Multivector
from algebra.product_bundle import ProductElement
from algebroids.algebroid import Algebroid
from algebroids.checks import CheckReport, CheckResult, first_nonzero
from algebroids.jacobi_pair import (
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
    tstar_generator,
    tstar_pair_bracket,
    verify_jacobi,
)
from algebroids.twisted import twisted_differential, twisted_schouten
from bialgebroids.glb import check_canonical_pair_identities
from structure_loader import build_jacobi
from verification.base_suite import BaseSuite

logger = logging.getLogger(__name__)


class JacobiSuite(BaseSuite):
    """Checks for jacobi files."""

    def prepare(self) -> None:
        self.jacobi = build_jacobi(self.structure)
        self.tm_r, self.unit = build_tm_r(self.jacobi.ctx)

    @cached_property
    def verdict(self) -> CheckReport:
        return verify_jacobi(self.jacobi.bivector, self.jacobi.vector)

    @cached_property
    def tstar(self) -> Tuple[Algebroid, Multivector]:
        return build_tstar_m_r(self.jacobi, verify=False)

    def _product_samples(self, element_type, offset: int):
        m = self.jacobi.rank
        sampler = self.sampler(self.jacobi.ctx, offset=offset)
        count = max(1, min(self.samples, 6))
        return [sampler.product(element_type, m, sampler.rng.randint(1, min(m, 2) + 1))
                for _ in range(count)]

    def _requires_jacobi(self, check_id: str):
        if not self.verdict.passed:
            return self.skip(check_id, 'not a Jacobi structure')
        return None

    # The Jacobi conditions

    def check_lambda_lambda(self) -> CheckResult:
        return self.verdict.get('lambda_lambda')

    def check_e_lambda(self) -> CheckResult:
        return self.verdict.get('e_lambda')

    def check_product_route(self) -> CheckResult:
        return self.verdict.get('product_route')

    # TM x R

    def _tm_r_differential(self, forms: ProductElement, twisted: bool) -> ProductElement:
        embedded = forms.embed()
        if twisted:
            value = twisted_differential(self.tm_r, self.unit, embedded, check_cocycle=False)
        else:
            value = self.tm_r.differential(embedded)
        return ProductElement.split(value)

    def check_tm_r_differential(self) -> CheckResult:
        return CheckResult.from_defect('tm_r_differential', first_nonzero(
            closed_form_tm_r_differential(forms) - self._tm_r_differential(forms, False)
            for forms in self._product_samples(MultiForm, 1)
        ), detail='closed form vs CE differential of TM x R')

    def check_twisted_tm_r_differential(self) -> CheckResult:
        return CheckResult.from_defect('twisted_tm_r_differential', first_nonzero(
            closed_form_twisted_tm_r_differential(forms) - self._tm_r_differential(forms, True)
            for forms in self._product_samples(MultiForm, 2)
        ), detail='closed form vs (0,1)-twisted CE differential of TM x R')

    def check_tm_r_schouten(self) -> CheckResult:
        samples = self._product_samples(Multivector, 3)
        return CheckResult.from_defect('tm_r_schouten', first_nonzero(
            closed_form_tm_r_schouten(a, b)
            - ProductElement.split(self.tm_r.schouten(a.embed(), b.embed()))
            for a in samples for b in samples
        ), detail='closed form vs Schouten bracket of TM x R')

    def check_twisted_tm_r_schouten(self) -> CheckResult:
        samples = self._product_samples(Multivector, 4)

        def generic(a, b):
            value = twisted_schouten(self.tm_r, self.unit, a.embed(), b.embed(),
                                     check_cocycle=False)
            return ProductElement.split(value)

        return CheckResult.from_defect('twisted_tm_r_schouten', first_nonzero(
            extended_schouten_tm_r(a, b) - generic(a, b) for a in samples for b in samples
        ), detail='closed form vs (0,1)-Schouten bracket of TM x R')

    # T*M x R

    def check_tstar_axioms(self) -> CheckResult:
        skipped = self._requires_jacobi('tstar_axioms')
        if skipped:
            return skipped
        tstar, _ = self.tstar
        return tstar.check_axioms(seed=self.seed, samples=self.samples).summary('tstar_axioms')

    def check_tstar_differential(self) -> CheckResult:
        tstar, _ = self.tstar
        return CheckResult.from_defect('tstar_differential', first_nonzero(
            closed_form_tstar_differential(self.jacobi, vectors)
            - generic_tstar_differential(tstar, vectors)
            for vectors in self._product_samples(Multivector, 5)
        ), detail='closed form vs CE differential of T*M x R')

    def check_twisted_tstar_differential(self) -> CheckResult:
        tstar, x0 = self.tstar
        return CheckResult.from_defect('twisted_tstar_differential', first_nonzero(
            closed_form_twisted_tstar_differential(self.jacobi, vectors)
            - generic_tstar_differential(tstar, vectors, x0)
            for vectors in self._product_samples(Multivector, 6)
        ), detail='closed form vs (-E,0)-twisted CE differential of T*M x R')

    def check_bracket_reconstruction(self) -> CheckResult:
        m = self.jacobi.rank
        defect, where = None, None
        for i, j in combinations(range(1, m + 2), 2):
            a, b = tstar_generator(self.jacobi, i), tstar_generator(self.jacobi, j)
            lie_form, interior_form = bracket_reconstruction(self.jacobi, a, b)
            expected = tstar_pair_bracket(self.jacobi, a, b)
            value = first_nonzero([lie_form - expected, interior_form - expected])
            if value is not None:
                defect, where = value, (i, j)
                break
        return CheckResult.from_defect(
            'bracket_reconstruction', defect,
            detail=f"generators ({where[0]}, {where[1]}) of T*M x R" if where else None,
        )

    def check_hamiltonian_anchor(self) -> CheckResult:
        """#_Lambda(df) + f E is the anchor of (df, f) in T*M x R."""
        tstar, _ = self.tstar
        tangent = self.jacobi.tangent
        sampler = self.sampler(self.jacobi.ctx, offset=7)
        defects = []
        for _ in range(max(1, min(self.samples, 6))):
            f = sampler.scalar()
            section = ProductElement(tangent.function_differential(f),
                                     MultiForm.from_scalar(f, self.jacobi.rank))
            anchor = tstar.anchor_vector(section.embed().transposed())
            defects.append(hamiltonian_vector_field(self.jacobi, f) - anchor)
        return CheckResult.from_defect('hamiltonian_anchor', first_nonzero(defects))

    def check_canonical_pair_identities(self) -> CheckResult:
        skipped = self._requires_jacobi('canonical_pair_identities')
        if skipped:
            return skipped
        return check_canonical_pair_identities(self.jacobi).summary('canonical_pair_identities')
