"""
Report models

Field order is the JSON key order, so `model_dump_json(indent=2)` output is
stable across runs and thread counts. Variable indices are 1-based and the
infinite invariants are the strings "-infinity" / "infinity".
"""

from pydantic import BaseModel, Field
from typing import Dict, List, Optional, Union

from app.models.cohomology_table import LocalCohomologyTable, format_extended
from app.models.monomial import MonomialIdeal

Extended = Union[int, str]


class IdealSummary(BaseModel):
    n: int
    gens: List[str]
    rho: List[int]
    name: Optional[str] = None

    @classmethod
    def of(cls, ideal: MonomialIdeal, name: Optional[str] = None) -> "IdealSummary":
        return cls(n=ideal.n, gens=[str(u) for u in ideal.gens], rho=list(ideal.rho()), name=name)


class TableEntry(BaseModel):
    i: int
    F: List[int]
    box: List[int]
    dim: int


class KIndexInfo(BaseModel):
    value: Union[int, str]
    cap: int
    bound: int
    vacuous: bool = False
    witness: Optional[Dict[str, Union[int, List[int]]]] = None


class AnalysisReport(BaseModel):
    ideal: IdealSummary
    field: str
    dim: int
    depth: int
    table: List[TableEntry]
    a: List[Extended]
    b: List[Extended]
    reg: Optional[int]
    flc: List[bool]
    gcm: bool
    cm: bool
    k_index: Optional[Union[int, str]] = None
    checks: Dict[str, Optional[bool]] = Field(default_factory=dict)
    total_lengths: List[Optional[int]] = Field(default_factory=list)
    k_bound: int = 0
    k_bound_intermediate: Optional[int] = None
    k_detail: Optional[KIndexInfo] = None


def table_entries(table: LocalCohomologyTable) -> List[TableEntry]:
    return [
        TableEntry(i=i, F=rep.face_one_based, box=list(rep.box), dim=dim)
        for i, rep, dim in table.rows()
    ]


def extended_list(values) -> List[Extended]:
    return [format_extended(v) for v in values]


class GcmVerdict(BaseModel):
    ideal: IdealSummary
    field: str
    dim: int
    depth: int
    gcm: bool
    cm: bool
    flc: List[bool]
    combinatorial: Optional[bool] = None


class CharacterizationReport(BaseModel):
    ideal: IdealSummary
    test: str
    holds: bool
    clause: Optional[str] = None
    witness_sigma: Optional[List[int]] = None
    witness_a: Optional[List[int]] = None
    checked: int = 0


class HilbertTermReport(BaseModel):
    i: int
    F: List[int]
    polynomial: str
    factor: str


class HilbertReport(BaseModel):
    ideal: IdealSummary
    field: str
    terms: List[HilbertTermReport]
    series: Dict[str, str]


class RadicalCompareReport(BaseModel):
    ideal: IdealSummary
    radical: IdealSummary
    field: str
    compared: int
    mismatches: List[List[Union[int, List[int]]]]
    gcm: bool
    radical_gcm: bool
    cm: bool
    radical_cm: bool
    gcm_implication: bool
    non_cm_inherited: bool


class FrobeniusReport(BaseModel):
    ideal: IdealSummary
    exps: List[int]
    image: IdealSummary
    text: str


class SearchEntry(BaseModel):
    exponents: List[List[List[int]]]
    ideal: List[str]
    gcm: bool
    frobenius_constant: Optional[bool] = None


class SearchReport(BaseModel):
    seed: IdealSummary
    bound: int
    tuples: int
    assignments: int
    orbits: int
    positives: int
    entries: List[SearchEntry]


class OracleCompareReport(BaseModel):
    field: str
    ideals: int
    ideals_matched: int
    degrees: int
    matches: int
    mismatches: List[List[Union[int, List[int]]]]
    summary: str


class FrobeniusFamilyReport(BaseModel):
    n: int
    bound: int
    holds: Optional[bool]
    checked: int
    positives: int
    counterexample: Optional[List[List[List[int]]]] = None
    skipped_reason: Optional[str] = None
