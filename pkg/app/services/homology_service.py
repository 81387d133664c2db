"""
Reduced simplicial homology over an exact field

Boundary matrices follow the oriented convention on ascending vertex order:
∂F = Σ_j (−1)^j F_j, where F_j drops the j-th vertex (0-indexed), and the
augmentation sends every vertex to the empty face with coefficient +1.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List

from app.exceptions import TheoremViolation
from app.models.field import FieldSpec
from app.models.simplicial_complex import SimplicialComplex, dimension
from app.utils.bitsets import members
from app.utils.linalg import exact_rank, transpose

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabeledMatrix:
    """Integer matrix with faces labelling its rows and columns"""
    row_faces: List[int]
    col_faces: List[int]
    entries: List[List[int]]

    @property
    def shape(self):
        return len(self.row_faces), len(self.col_faces)

    def is_empty(self) -> bool:
        return not self.row_faces or not self.col_faces


@dataclass(frozen=True)
class HomologyResult:
    """dim_K H̃_i for −1 ≤ i ≤ dim Δ; other degrees are implicitly zero"""
    dims: Dict[int, int] = field(default_factory=dict)

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    def nonzero(self) -> Dict[int, int]:
        return {i: d for i, d in self.dims.items() if d}

    @property
    def is_acyclic(self) -> bool:
        return not self.nonzero()


def boundary_sign(face: int, sub: int) -> int:
    """(−1)^s where sub is face minus its s-th vertex"""
    removed = face & ~sub
    position = members(face).index(members(removed)[0])
    return -1 if position % 2 else 1


def boundary_matrix(delta: SimplicialComplex, i: int) -> LabeledMatrix:
    """∂_i : C_i → C_{i−1}; rows are (i−1)-faces, columns i-faces"""
    cols = delta.faces_of_dim(i)
    rows = delta.faces_of_dim(i - 1)
    row_index = {f: r for r, f in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for c, face in enumerate(cols):
        for j in members(face):
            sub = face & ~(1 << j)
            if sub in row_index:
                entries[row_index[sub]][c] = boundary_sign(face, sub)
    return LabeledMatrix(rows, cols, entries)


def _boundary_ranks(delta: SimplicialComplex, K: FieldSpec, dual: bool) -> Dict[int, int]:
    ranks = {}
    for i in range(0, dimension(delta) + 1):
        matrix = boundary_matrix(delta, i)
        entries = transpose(matrix.entries, len(matrix.col_faces)) if dual else matrix.entries
        ncols = len(matrix.row_faces) if dual else len(matrix.col_faces)
        ranks[i] = exact_rank(entries, K, ncols)
    return ranks


@lru_cache(maxsize=65536)
def reduced_homology_dims(delta: SimplicialComplex, K: FieldSpec = FieldSpec()) -> HomologyResult:
    """dim H̃_i = f_i − rank ∂_i − rank ∂_{i+1}"""
    if delta.is_void:
        return HomologyResult({})
    top = dimension(delta)
    ranks = _boundary_ranks(delta, K, dual=False)
    f_vector = delta.f_vector()
    dims = {}
    for i in range(-1, top + 1):
        dims[i] = f_vector.get(i, 0) - ranks.get(i, 0) - ranks.get(i + 1, 0)
    return HomologyResult(dims)


def reduced_cohomology_dims(delta: SimplicialComplex, K: FieldSpec = FieldSpec()) -> HomologyResult:
    """dim H̃^i from the transposed (coboundary) matrices"""
    if delta.is_void:
        return HomologyResult({})
    top = dimension(delta)
    ranks = _boundary_ranks(delta, K, dual=True)
    f_vector = delta.f_vector()
    return HomologyResult({
        i: f_vector.get(i, 0) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        for i in range(-1, top + 1)
    })


def cohomology_dims_equal_homology(delta: SimplicialComplex, K: FieldSpec = FieldSpec()) -> bool:
    homology = reduced_homology_dims(delta, K)
    cohomology = reduced_cohomology_dims(delta, K)
    for i in sorted(set(homology.nonzero()) | set(cohomology.nonzero())):
        if homology[i] != cohomology[i]:
            logger.error(f"H̃_{i} = {homology[i]} but H̃^{i} = {cohomology[i]} over {K}")
            raise TheoremViolation("reduced homology and cohomology dimensions differ", index=i)
    return True


def reduced_euler_characteristic(delta: SimplicialComplex) -> int:
    """Σ_{i ≥ −1} (−1)^i f_i; zero for the void complex"""
    return sum(-count if i % 2 else count for i, count in delta.f_vector().items())


def homology_euler_characteristic(result: HomologyResult) -> int:
    return sum(-d if i % 2 else d for i, d in result.dims.items())
