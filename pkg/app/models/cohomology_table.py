"""
Local cohomology tables

A LocalCohomologyTable stores, for 0 ≤ i ≤ d, the nonzero dimensions of
H^i_m(S/I)_a at representative multidegrees. A representative fixes the
negative support F = G_a with coordinates −1 on F and box coordinates
0 ≤ a_j ≤ ρ_j − 1 off F; every other degree with the same pattern has the
same dimension.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple, Union

from app.models.field import FieldSpec
from app.models.simplicial_complex import MultiDegree
from app.utils.bitsets import members, size, to_one_based

NEG_INF = float("-inf")
POS_INF = float("inf")

ExtendedInt = Union[int, float]


def format_extended(value: ExtendedInt) -> Union[int, str]:
    """±∞ as the strings used in reports, integers unchanged"""
    if value == NEG_INF:
        return "-infinity"
    if value == POS_INF:
        return "infinity"
    return int(value)


@dataclass(frozen=True)
class RepresentativeDegree:
    face: int
    degree: MultiDegree

    @classmethod
    def of(cls, face: int, a: Tuple[int, ...]) -> "RepresentativeDegree":
        return cls(face, MultiDegree(tuple(a)))

    @property
    def box(self) -> Tuple[int, ...]:
        """Coordinates a_j for j ∉ F, in ascending j"""
        return tuple(x for j, x in enumerate(self.degree.a) if not self.face >> j & 1)

    @property
    def face_size(self) -> int:
        return size(self.face)

    @property
    def face_one_based(self) -> List[int]:
        return to_one_based(self.face)

    @property
    def has_zero_box(self) -> bool:
        return all(x == 0 for x in self.box)

    @property
    def total_degree(self) -> int:
        return self.degree.total_degree

    def sort_key(self):
        return (self.face_size, members(self.face), self.degree.a)


@dataclass
class LocalCohomologyTable:
    n: int
    d: int
    field: FieldSpec
    rho: Tuple[int, ...]
    representatives: Tuple[RepresentativeDegree, ...] = ()
    squarefree: bool = False
    radical_pure: bool = True
    # i -> representative -> positive dimension
    entries: Dict[int, Dict[RepresentativeDegree, int]] = field(default_factory=dict)

    def dim_at(self, i: int, rep: RepresentativeDegree) -> int:
        return self.entries.get(i, {}).get(rep, 0)

    def nonzero_indices(self) -> List[int]:
        return sorted(i for i, row in self.entries.items() if row)

    def rows(self) -> Iterable[Tuple[int, RepresentativeDegree, int]]:
        """(i, representative, dim) in canonical order"""
        for i in sorted(self.entries):
            for rep in sorted(self.entries[i], key=RepresentativeDegree.sort_key):
                yield i, rep, self.entries[i][rep]

    def vanishes(self, i: int) -> bool:
        return not self.entries.get(i)

    def finite_length(self, i: int) -> bool:
        """Every nonzero piece of H^i has G_a = ∅"""
        return all(rep.face == 0 for rep in self.entries.get(i, {}))

    @property
    def flc(self) -> List[bool]:
        return [self.finite_length(i) for i in range(self.d + 1)]

    @property
    def depth(self) -> int:
        nonzero = self.nonzero_indices()
        return nonzero[0] if nonzero else self.d

    @property
    def is_generalized_cm(self) -> bool:
        return all(self.finite_length(i) for i in range(self.d))

    @property
    def is_cohen_macaulay(self) -> bool:
        return self.depth == self.d

    def a_invariant(self, i: int) -> ExtendedInt:
        row = self.entries.get(i)
        if not row:
            return NEG_INF
        return max(rep.total_degree for rep in row)

    def b_invariant(self, i: int) -> ExtendedInt:
        row = self.entries.get(i)
        if not row:
            return POS_INF
        if any(rep.face for rep in row):
            return NEG_INF
        return min(rep.total_degree for rep in row)

    def regularity(self) -> Optional[int]:
        values = [self.a_invariant(i) + i for i in self.nonzero_indices()]
        return int(max(values)) if values else None

    def total_length(self, i: int) -> Optional[int]:
        """Σ of dims when H^i has finite length, else None"""
        if not self.finite_length(i):
            return None
        return sum(self.entries.get(i, {}).values())

    def nonzero_set(self) -> Dict[Tuple[int, Tuple[int, ...]], int]:
        return {(i, rep.degree.a): dim for i, rep, dim in self.rows()}
