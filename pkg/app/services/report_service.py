"""
Report assembly shared by the CLI commands and the HTTP routes
"""

import logging
from typing import List, Optional

import sympy

from app.models.field import FieldSpec
from app.models.monomial import MonomialIdeal, frobenius_transform, radical
from app.schemas.ideal_document import IdealDocument
from app.schemas.report import (
    AnalysisReport,
    CharacterizationReport,
    FrobeniusFamilyReport,
    FrobeniusReport,
    GcmVerdict,
    HilbertReport,
    HilbertTermReport,
    IdealSummary,
    KIndexInfo,
    OracleCompareReport,
    RadicalCompareReport,
    SearchEntry,
    SearchReport,
    extended_list,
    table_entries,
)
from app.services.analyzer_service import (
    OracleComparison,
    hilbert_series_report,
    invariants_report,
    local_cohomology_table,
    oracle_compare,
    radical_compare,
)
from app.services.cech_service import KBuchsbaumResult, KIndexStatus, k_buchsbaum_index
from app.services.characterization_service import ConditionResult, combinatorial_gcm
from app.services.construction_service import (
    VerdictPath,
    exponent_search,
    is_frobenius_constant,
    product_seed,
    verify_only_frobenius_family,
)
from app.utils.ideal_parser import format_ideal

logger = logging.getLogger(__name__)


def k_index_info(result: KBuchsbaumResult) -> KIndexInfo:
    witness = None
    if result.witness is not None:
        i, a, b = result.witness
        witness = {"i": i, "a": list(a), "b": list(b)}
    return KIndexInfo(value=result.as_report_value(), cap=result.cap, bound=result.bound,
                      vacuous=result.vacuous, witness=witness)


def build_analysis_report(doc: IdealDocument, K: FieldSpec, parallel: Optional[int] = None,
                          with_k_index: bool = True, cap: Optional[int] = None) -> AnalysisReport:
    ideal = doc.to_ideal()
    table = local_cohomology_table(ideal, K, parallel)
    invariants = invariants_report(table, linear_resolution=doc.linear_resolution)
    k_detail = None
    if with_k_index:
        if table.is_generalized_cm:
            k_detail = k_index_info(k_buchsbaum_index(ideal, K, cap=cap, parallel=parallel))
        else:
            k_detail = KIndexInfo(value=KIndexStatus.INFINITE.value, cap=0, bound=invariants.k_bound)
    return AnalysisReport(
        ideal=IdealSummary.of(ideal, doc.name),
        field=K.label,
        dim=table.d,
        depth=table.depth,
        table=table_entries(table),
        a=extended_list(invariants.a),
        b=extended_list(invariants.b),
        reg=invariants.reg,
        flc=table.flc,
        gcm=table.is_generalized_cm,
        cm=table.is_cohen_macaulay,
        k_index=k_detail.value if k_detail else None,
        checks={c.name: c.passed for c in invariants.checks},
        total_lengths=invariants.total_lengths,
        k_bound=invariants.k_bound,
        k_bound_intermediate=invariants.k_bound_intermediate,
        k_detail=k_detail,
    )


def build_gcm_verdict(doc: IdealDocument, K: FieldSpec, parallel: Optional[int] = None) -> GcmVerdict:
    ideal = doc.to_ideal()
    table = local_cohomology_table(ideal, K, parallel)
    return GcmVerdict(
        ideal=IdealSummary.of(ideal, doc.name),
        field=K.label,
        dim=table.d,
        depth=table.depth,
        gcm=table.is_generalized_cm,
        cm=table.is_cohen_macaulay,
        flc=table.flc,
        combinatorial=combinatorial_gcm(ideal),
    )


def build_characterization_report(doc: IdealDocument, test: str, result: ConditionResult
                                  ) -> CharacterizationReport:
    sigma, a = result.witness if result.witness else (None, None)
    return CharacterizationReport(
        ideal=IdealSummary.of(doc.to_ideal(), doc.name),
        test=test,
        holds=result.holds,
        clause=result.clause,
        witness_sigma=sigma,
        witness_a=list(a) if a is not None else None,
        checked=result.checked,
    )


def build_hilbert_report(doc: IdealDocument, K: FieldSpec, parallel: Optional[int] = None) -> HilbertReport:
    ideal = doc.to_ideal()
    table = local_cohomology_table(ideal, K, parallel)
    series = hilbert_series_report(table)
    return HilbertReport(
        ideal=IdealSummary.of(ideal, doc.name),
        field=K.label,
        terms=[
            HilbertTermReport(i=t.i, F=list(t.face), polynomial=sympy.sstr(t.polynomial),
                              factor=sympy.sstr(t.factor))
            for t in series.terms
        ],
        series={str(i): sympy.sstr(series.series(i)) for i in table.nonzero_indices()},
    )


def build_radical_report(doc: IdealDocument, K: FieldSpec) -> RadicalCompareReport:
    ideal = doc.to_ideal()
    comparison = radical_compare(ideal, K)
    return RadicalCompareReport(
        ideal=IdealSummary.of(ideal, doc.name),
        radical=IdealSummary.of(radical(ideal)),
        field=K.label,
        compared=comparison.compared,
        mismatches=[[i, list(a), x, y] for i, a, x, y in comparison.mismatches],
        gcm=comparison.gcm,
        radical_gcm=comparison.radical_gcm,
        cm=comparison.cm,
        radical_cm=comparison.radical_cm,
        gcm_implication=comparison.gcm_implication_holds,
        non_cm_inherited=comparison.non_cm_inherited_holds,
    )


def build_frobenius_report(doc: IdealDocument, exps: List[int]) -> FrobeniusReport:
    ideal = doc.to_ideal()
    image = frobenius_transform(ideal, exps)
    return FrobeniusReport(
        ideal=IdealSummary.of(ideal, doc.name),
        exps=list(exps),
        image=IdealSummary.of(image),
        text=format_ideal(image, field=doc.field),
    )


def build_search_report(seed: MonomialIdeal, bound: int, tuples: int, K: FieldSpec,
                        path: VerdictPath = VerdictPath.COMBINATORIAL,
                        parallel: Optional[int] = None) -> SearchReport:
    outcomes = exponent_search(seed, bound, tuples, K, path, parallel)
    frobenius_family = tuples == 1 and _is_product_seed(seed)
    entries = [
        SearchEntry(
            exponents=[[list(t) for t in choice] for choice in o.assignment.choices],
            ideal=[str(u) for u in o.ideal.gens],
            gcm=o.verdict.gcm,
            frobenius_constant=is_frobenius_constant(seed, o.assignment) if frobenius_family else None,
        )
        for o in outcomes
    ]
    return SearchReport(
        seed=IdealSummary.of(seed),
        bound=bound,
        tuples=tuples,
        assignments=len(outcomes),
        orbits=sum(1 for o in outcomes if o.representative),
        positives=sum(1 for e in entries if e.gcm),
        entries=entries,
    )


def _is_product_seed(seed: MonomialIdeal) -> bool:
    return seed.n % 2 == 0 and seed.n >= 2 and seed == product_seed(seed.n // 2)


def build_oracle_report(ideals: List[MonomialIdeal], K: FieldSpec, parallel: Optional[int] = None
                        ) -> OracleCompareReport:
    total = OracleComparison(degrees=0, matches=0)
    ideals_matched = 0
    for ideal in ideals:
        comparison = oracle_compare(ideal, K, parallel, verify=False)
        ideals_matched += comparison.all_match
        total.degrees += comparison.degrees
        total.matches += comparison.matches
        total.mismatches.extend(comparison.mismatches)
    return OracleCompareReport(
        field=K.label,
        ideals=len(ideals),
        ideals_matched=ideals_matched,
        degrees=total.degrees,
        matches=total.matches,
        mismatches=[[i, list(a), x, y] for i, a, x, y in total.mismatches],
        summary=f"{ideals_matched}/{len(ideals)} degreewise matches",
    )


def build_frobenius_family_report(n: int, bound: int, K: FieldSpec,
                                  path: VerdictPath = VerdictPath.COMBINATORIAL,
                                  parallel: Optional[int] = None) -> FrobeniusFamilyReport:
    result = verify_only_frobenius_family(n, bound, K, path, parallel)
    counterexample = None
    if result.counterexample is not None:
        counterexample = [[list(t) for t in choice] for choice in result.counterexample.choices]
    return FrobeniusFamilyReport(
        n=result.n,
        bound=result.bound,
        holds=result.holds,
        checked=result.checked,
        positives=result.positives,
        counterexample=counterexample,
        skipped_reason=result.skipped_reason,
    )
