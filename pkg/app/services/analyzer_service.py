"""
Local Cohomology Analyzer

Assembles H^i_m(S/I) at every representative multidegree from the homology
of the degree complexes Δ_a:

    H^i_m(S/I)_a ≅ H̃_{i−|G_a|−1}(Δ_a; K)

and derives a_i, b_i, depth, reg, the finite-length flags and the bound
checks. The cross-checks against the Čech oracle, the square-free link
formula and the extended degree box live here too.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

import sympy

from app.config import settings
from app.exceptions import NotSquareFree, TheoremViolation
from app.models.cohomology_table import ExtendedInt, LocalCohomologyTable, RepresentativeDegree
from app.models.field import FieldSpec
from app.models.monomial import MonomialIdeal, is_squarefree, radical, rho
from app.models.simplicial_complex import MultiDegree, SimplicialComplex, dimension, is_cone, is_pure, link
from app.services.cech_service import cech_cohomology_dims
from app.services.complex_service import (
    box_degrees,
    degree_complex,
    radical_complex,
    stanley_reisner_complex,
)
from app.services.homology_service import reduced_homology_dims
from app.utils.bitsets import members, size

logger = logging.getLogger(__name__)


def representative_degrees(ideal: MonomialIdeal, delta: Optional[SimplicialComplex] = None
                           ) -> Iterator[RepresentativeDegree]:
    """Every F ∈ Δ(√I) with every box point; Σ_F Π_{j∉F} ρ_j of them"""
    if delta is None:
        delta = radical_complex(ideal)
    rho_vec = rho(ideal)
    for face in delta.sorted_faces():
        for a in box_degrees(rho_vec, face):
            yield RepresentativeDegree.of(face, a)


def degree_cohomology_dims(ideal: MonomialIdeal, degree: MultiDegree,
                           K: FieldSpec = FieldSpec()) -> Dict[int, int]:
    """Nonzero i ↦ dim H̃_{i−|G_a|−1}(Δ_a; K)"""
    complex_a = degree_complex(ideal, degree)
    shift = size(degree.negative_mask) + 1
    homology = reduced_homology_dims(complex_a, K)
    return {j + shift: dim for j, dim in homology.nonzero().items()}


def _assemble(ideal: MonomialIdeal, K: FieldSpec, reps: List[RepresentativeDegree],
              dims: List[Dict[int, int]], d: int) -> LocalCohomologyTable:
    delta = radical_complex(ideal)
    table = LocalCohomologyTable(
        n=ideal.n,
        d=d,
        field=K,
        rho=rho(ideal),
        representatives=tuple(reps),
        entries={i: {} for i in range(d + 1)},
        squarefree=is_squarefree(ideal),
        radical_pure=is_pure(delta),
    )
    for rep, row in zip(reps, dims):
        for i, dim in row.items():
            if not 0 <= i <= d:
                raise TheoremViolation("local cohomology outside 0..dim S/I", index=i,
                                       degree=rep.degree.a)
            table.entries[i][rep] = dim
    return table


@lru_cache(maxsize=256)
def _cached_table(ideal: MonomialIdeal, K: FieldSpec, workers: int) -> LocalCohomologyTable:
    delta = radical_complex(ideal)
    d = dimension(delta) + 1
    reps = list(representative_degrees(ideal, delta))
    logger.info(f"Computing local cohomology of {ideal} over {K}: d={d}, {len(reps)} representatives")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        dims = list(pool.map(lambda rep: degree_cohomology_dims(ideal, rep.degree, K), reps))
    return _assemble(ideal, K, reps, dims, d)


def local_cohomology_table(ideal: MonomialIdeal, K: FieldSpec = FieldSpec(),
                           parallel: Optional[int] = None) -> LocalCohomologyTable:
    return _cached_table(ideal, K, max(1, parallel or settings.PARALLEL))


def is_flc(ideal: MonomialIdeal, i: int, K: FieldSpec = FieldSpec()) -> bool:
    """H̃_{i−|G_a|−1}(Δ_a; K) = 0 at every representative with ∅ ≠ G_a ∈ Δ"""
    return local_cohomology_table(ideal, K).finite_length(i)


def is_generalized_cm(ideal: MonomialIdeal, K: FieldSpec = FieldSpec()) -> bool:
    return local_cohomology_table(ideal, K).is_generalized_cm


def is_cohen_macaulay(ideal: MonomialIdeal, K: FieldSpec = FieldSpec()) -> bool:
    return local_cohomology_table(ideal, K).is_cohen_macaulay


@dataclass
class BoundCheck:
    name: str
    passed: Optional[bool]
    hypothesis: Optional[str] = None


@dataclass
class InvariantsReport:
    dim: int
    depth: int
    a: List[ExtendedInt]
    b: List[ExtendedInt]
    reg: Optional[int]
    total_lengths: List[Optional[int]]
    a_bound: int
    k_bound: int
    k_bound_intermediate: Optional[int]
    checks: List[BoundCheck] = field(default_factory=list)

    def check(self, name: str) -> Optional[bool]:
        for c in self.checks:
            if c.name == name:
                return c.passed
        raise KeyError(name)


def _first_offender(table: LocalCohomologyTable, indices, predicate):
    for i in indices:
        for rep in table.entries.get(i, {}):
            if predicate(i, rep):
                return i, rep.degree.a
    return None, None


def invariants_report(table: LocalCohomologyTable, linear_resolution: Optional[int] = None,
                      verify: Optional[bool] = None) -> InvariantsReport:
    """a_i, b_i, depth, reg and the theorem checks; failed theorem checks raise when verifying"""
    if verify is None:
        verify = settings.VERIFY_THEOREMS
    d = table.d
    a_bound = sum(table.rho) - table.n
    a = [table.a_invariant(i) for i in range(d + 1)]
    b = [table.b_invariant(i) for i in range(d + 1)]
    reg = table.regularity()
    gcm = table.is_generalized_cm
    lower = [i for i in range(d) if not table.vanishes(i)]

    checks = []
    violations = []

    a_ok = all(a[i] <= a_bound for i in table.nonzero_indices())
    checks.append(BoundCheck("a_bound", a_ok))
    if not a_ok:
        violations.append((f"a_i exceeds Σρ_j − n = {a_bound}",
                           _first_offender(table, range(d + 1),
                                           lambda i, rep: rep.total_degree > a_bound)))

    intermediate = None
    if gcm:
        b_ok = all(b[i] >= 0 for i in lower)
        checks.append(BoundCheck("b_nonnegative", b_ok))
        if not b_ok:
            violations.append(("b_i < 0 for a generalized CM ideal",
                               _first_offender(table, lower, lambda i, rep: rep.total_degree < 0)))

        reg_ok = reg is None or not any(reg + 1 <= i for i in lower)
        checks.append(BoundCheck("regularity_vanishing", reg_ok))
        if not reg_ok:
            violations.append(("H^i ≠ 0 for reg + 1 ≤ i < d",
                               _first_offender(table, lower, lambda i, rep: i >= reg + 1)))

        if lower:
            intermediate = int(max(a[i] - b[i] + 1 for i in lower))
        k_ok = intermediate is None or intermediate <= a_bound + 1
        checks.append(BoundCheck("k_bound", k_ok))
        if not k_ok:
            violations.append((f"max(a_i − b_i + 1) = {intermediate} exceeds Σρ_j − n + 1", (None, None)))
    else:
        checks.extend([BoundCheck("b_nonnegative", None), BoundCheck("regularity_vanishing", None),
                       BoundCheck("k_bound", None)])

    if table.squarefree and gcm:
        sf_ok = all(a[i] <= 0 for i in table.nonzero_indices())
        checks.append(BoundCheck("squarefree_a_nonpositive", sf_ok))
        checks.append(BoundCheck("squarefree_pure", table.radical_pure))
        if not sf_ok:
            violations.append(("a_i > 0 for a square-free generalized CM ideal",
                               _first_offender(table, range(d + 1), lambda i, rep: rep.total_degree > 0)))
        if not table.radical_pure:
            violations.append(("Stanley-Reisner complex of a generalized CM ideal is not pure", (None, None)))
    else:
        checks.extend([BoundCheck("squarefree_a_nonpositive", None), BoundCheck("squarefree_pure", None)])

    if linear_resolution is not None:
        # depends on the user's assertion, so a failure is reported but never raised
        passed = None
        if gcm:
            passed = not any(linear_resolution <= i for i in lower)
        checks.append(BoundCheck("linear_resolution_vanishing", passed,
                                 hypothesis=f"asserted {linear_resolution}-linear resolution"))

    if violations:
        message, (index, degree) = violations[0]
        logger.error(f"Theorem check failed: {message}")
        if verify:
            raise TheoremViolation(message, index=index, degree=degree)

    return InvariantsReport(
        dim=d,
        depth=table.depth,
        a=a,
        b=b,
        reg=reg,
        total_lengths=[table.total_length(i) for i in range(d + 1)],
        a_bound=a_bound,
        k_bound=a_bound + 1,
        k_bound_intermediate=intermediate,
        checks=checks,
    )


@dataclass
class HilbertTerm:
    """Contribution of one face F to the series of H^i"""
    i: int
    face: Tuple[int, ...]
    polynomial: sympy.Expr
    factor: sympy.Expr

    @property
    def expression(self) -> sympy.Expr:
        return self.factor * self.polynomial


@dataclass
class HilbertSeriesReport:
    n: int
    terms: List[HilbertTerm] = field(default_factory=list)

    def series(self, i: int) -> sympy.Expr:
        return sympy.Add(*[t.expression for t in self.terms if t.i == i])


def hilbert_variables(n: int) -> Tuple[sympy.Symbol, ...]:
    return sympy.symbols(f"t1:{n + 1}")


def hilbert_series_report(table: LocalCohomologyTable) -> HilbertSeriesReport:
    """Per i and F: the box polynomial times Π_{j∈F} t_j^{−1}/(1 − t_j^{−1})"""
    t = hilbert_variables(table.n)
    grouped: Dict[Tuple[int, int], List[Tuple[RepresentativeDegree, int]]] = {}
    for i, rep, dim in table.rows():
        grouped.setdefault((i, rep.face), []).append((rep, dim))
    report = HilbertSeriesReport(table.n)
    for (i, face), items in sorted(grouped.items(), key=lambda kv: (kv[0][0], size(kv[0][1]), members(kv[0][1]))):
        polynomial = sympy.Integer(0)
        for rep, dim in items:
            monomial = sympy.Integer(dim)
            for j, x in enumerate(rep.degree.a):
                if not face >> j & 1:
                    monomial *= t[j] ** x
            polynomial += monomial
        factor = sympy.Integer(1)
        for j in members(face):
            factor *= (1 / t[j]) / (1 - 1 / t[j])
        report.terms.append(HilbertTerm(i, tuple(j + 1 for j in members(face)), polynomial, factor))
    return report


@dataclass
class RadicalComparison:
    compared: int
    mismatches: List[Tuple[int, Tuple[int, ...], int, int]]
    gcm: bool
    radical_gcm: bool
    cm: bool
    radical_cm: bool

    @property
    def dims_agree(self) -> bool:
        return not self.mismatches

    @property
    def gcm_implication_holds(self) -> bool:
        return self.radical_gcm or not self.gcm

    @property
    def non_cm_inherited_holds(self) -> bool:
        """√I generalized CM but not CM forces I not CM"""
        if self.radical_gcm and not self.radical_cm:
            return not self.cm
        return True


def radical_compare(ideal: MonomialIdeal, K: FieldSpec = FieldSpec(),
                    verify: Optional[bool] = None) -> RadicalComparison:
    """Compare H^i(S/I)_a with H^i(S/√I)_a wherever H_a = ∅"""
    if verify is None:
        verify = settings.VERIFY_THEOREMS
    table = local_cohomology_table(ideal, K)
    radical_table = local_cohomology_table(radical(ideal), K)
    mismatches = []
    compared = 0
    for rep in table.representatives:
        if not rep.has_zero_box:
            continue
        compared += 1
        for i in range(table.d + 1):
            ours, theirs = table.dim_at(i, rep), radical_table.dim_at(i, rep)
            if ours != theirs:
                mismatches.append((i, rep.degree.a, ours, theirs))
    result = RadicalComparison(
        compared=compared,
        mismatches=mismatches,
        gcm=table.is_generalized_cm,
        radical_gcm=radical_table.is_generalized_cm,
        cm=table.is_cohen_macaulay,
        radical_cm=radical_table.is_cohen_macaulay,
    )
    logger.info(f"Radical comparison for {ideal}: {compared} degrees, {len(mismatches)} mismatches")
    if verify:
        if mismatches:
            i, a, _, _ = mismatches[0]
            raise TheoremViolation("H^i(S/I)_a and H^i(S/√I)_a differ with H_a = ∅", index=i, degree=a)
        if not result.gcm_implication_holds:
            raise TheoremViolation("I is generalized CM but √I is not")
        if not result.non_cm_inherited_holds:
            raise TheoremViolation("√I is generalized CM and not CM but I is CM")
    return result


def classic_hochster_table(ideal: MonomialIdeal, K: FieldSpec = FieldSpec()) -> LocalCohomologyTable:
    """Square-free case from links: H^i_a = H̃_{i−|F|−1}(lk_Δ F; K) at F = G_a"""
    if not is_squarefree(ideal):
        raise NotSquareFree(f"Link formula requires a square-free ideal, got {ideal}")
    delta = stanley_reisner_complex(ideal)
    d = dimension(delta) + 1
    reps = list(representative_degrees(ideal, delta))
    dims = []
    for rep in reps:
        homology = reduced_homology_dims(link(delta, rep.face), K)
        shift = rep.face_size + 1
        dims.append({j + shift: dim for j, dim in homology.nonzero().items()})
    return _assemble(ideal, K, reps, dims, d)


def table_mismatches(left: LocalCohomologyTable, right: LocalCohomologyTable
                     ) -> List[Tuple[int, Tuple[int, ...]]]:
    """(i, a) where the two tables disagree, over the union of their nonzero sets"""
    ours, theirs = left.nonzero_set(), right.nonzero_set()
    keys = sorted(set(ours) | set(theirs))
    return [key for key in keys if ours.get(key, 0) != theirs.get(key, 0)]


@dataclass
class FlcAgreement:
    d: int
    clause_iii: List[bool]
    clause_ii: List[bool]
    table_flags: List[bool]

    @property
    def agrees(self) -> bool:
        return self.clause_iii == self.clause_ii == self.table_flags


def flc_clause_agreement(ideal: MonomialIdeal, K: FieldSpec = FieldSpec(),
                         verify: Optional[bool] = None) -> FlcAgreement:
    """Degree-complex verdict, Čech verdict at coordinates −2, and table flags, per i"""
    if verify is None:
        verify = settings.VERIFY_THEOREMS
    table = local_cohomology_table(ideal, K)
    d = table.d
    clause_iii = [True] * (d + 1)
    clause_ii = [True] * (d + 1)
    for rep in table.representatives:
        if not rep.face:
            continue
        for i in degree_cohomology_dims(ideal, rep.degree, K):
            clause_iii[i] = False
        deeper = MultiDegree(tuple(-2 if rep.face >> j & 1 else x for j, x in enumerate(rep.degree.a)))
        for i, dim in cech_cohomology_dims(ideal, deeper, K).items():
            if dim and i <= d:
                clause_ii[i] = False
    result = FlcAgreement(d, clause_iii, clause_ii, table.flc)
    if verify and not result.agrees:
        index = next(i for i in range(d + 1) if len({clause_iii[i], clause_ii[i], result.table_flags[i]}) > 1)
        raise TheoremViolation("finite-length criteria disagree", index=index)
    return result


@dataclass
class ExtendedScan:
    scanned: int
    pruned: int
    cones_checked: int
    missing: List[Tuple[int, Tuple[int, ...]]]
    extra: List[Tuple[int, Tuple[int, ...]]]

    @property
    def matches(self) -> bool:
        return not self.missing and not self.extra


def scan_extended_box(ideal: MonomialIdeal, K: FieldSpec = FieldSpec(),
                      verify: Optional[bool] = None) -> ExtendedScan:
    """Scan a ∈ {−1, 0, …, ρ_j}^n, pruning degrees where Δ_a must be a cone"""
    if verify is None:
        verify = settings.VERIFY_THEOREMS
    rho_vec = rho(ideal)
    table = local_cohomology_table(ideal, K)
    found: Dict[Tuple[int, Tuple[int, ...]], int] = {}
    scanned = pruned = cones = 0
    for a in product(*[range(-1, r + 1) for r in rho_vec]):
        degree = MultiDegree(a)
        apex = next((j for j, x in enumerate(a) if x >= rho_vec[j]), None)
        if apex is not None:
            pruned += 1
            if verify:
                complex_a = degree_complex(ideal, degree)
                if not complex_a.is_void:
                    cones += 1
                    if not is_cone(complex_a, apex):
                        raise TheoremViolation(f"Δ_a is not a cone over vertex {apex + 1}", degree=a)
            continue
        scanned += 1
        for i, dim in degree_cohomology_dims(ideal, degree, K).items():
            found[(i, a)] = dim
    expected = table.nonzero_set()
    missing = sorted(key for key in expected if found.get(key) != expected[key])
    extra = sorted(key for key in found if key not in expected)
    result = ExtendedScan(scanned, pruned, cones, missing, extra)
    if verify and not result.matches:
        i, a = (missing or extra)[0]
        raise TheoremViolation("extended box scan disagrees with the representative table", index=i, degree=a)
    return result


@dataclass
class OracleComparison:
    degrees: int
    matches: int
    mismatches: List[Tuple[int, Tuple[int, ...], int, int]] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return self.degrees == self.matches


def oracle_compare(ideal: MonomialIdeal, K: FieldSpec = FieldSpec(), parallel: Optional[int] = None,
                   verify: Optional[bool] = None) -> OracleComparison:
    """Δ_a homology against degreewise Čech cohomology at every representative"""
    if verify is None:
        verify = settings.VERIFY_THEOREMS
    reps = list(representative_degrees(ideal))
    workers = max(1, parallel or settings.PARALLEL)

    def both(rep: RepresentativeDegree):
        cech = {i: x for i, x in cech_cohomology_dims(ideal, rep.degree, K).items() if x}
        return degree_cohomology_dims(ideal, rep.degree, K), cech

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(both, reps))

    comparison = OracleComparison(degrees=len(reps), matches=0)
    for rep, (simplicial, cech) in zip(reps, results):
        if simplicial == cech:
            comparison.matches += 1
            continue
        for i in sorted(set(simplicial) | set(cech)):
            if simplicial.get(i, 0) != cech.get(i, 0):
                comparison.mismatches.append((i, rep.degree.a, simplicial.get(i, 0), cech.get(i, 0)))
    logger.info(f"Oracle comparison for {ideal}: {comparison.matches}/{comparison.degrees} degreewise matches")
    if verify and comparison.mismatches:
        i, a, _, _ = comparison.mismatches[0]
        raise TheoremViolation("Δ_a homology and Čech cohomology differ", index=i, degree=a)
    return comparison
