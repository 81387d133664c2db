"""
Čech Oracle

Independent ground truth for local cohomology. For a multidegree a the
degree-a strand of the Čech complex has one basis vector b_F for every
F ⊆ [n] with F ⊇ G_a such that every generator u has some j ∉ F with
ν_j(u) > a_j. Its cohomology is H^i_m(S/I)_a directly, without going through
Δ_a.

Multiplication by x_j maps the strand at a to the strand at a + e_j by
b_F ↦ b_F (or 0 when F is not admitted at a + e_j). Composing the induced
maps on cohomology along lattice paths decides the k-Buchsbaum index.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from app.config import settings
from app.exceptions import PreconditionViolation, TheoremViolation
from app.models.field import FieldSpec
from app.models.monomial import MonomialIdeal, rho
from app.models.simplicial_complex import MultiDegree, dimension
from app.services.complex_service import admits, box_degrees, radical_complex, witness_masks
from app.services.homology_service import LabeledMatrix, boundary_sign
from app.utils.bitsets import canonical_key, size, subsets_of_size, full_mask
from app.utils.linalg import (
    apply_matrix,
    compose,
    coordinates_in_basis,
    exact_rank,
    independent_columns,
    is_zero_matrix,
    kernel_basis,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DegreeComplex:
    """C•_a: bases[t] lists the admitted t-subsets, differentials[t] : C^t → C^{t+1}"""
    degree: MultiDegree
    bases: Tuple[Tuple[int, ...], ...]
    differentials: Tuple[LabeledMatrix, ...]

    def rank_of(self, t: int) -> int:
        return len(self.bases[t]) if 0 <= t < len(self.bases) else 0


@dataclass(frozen=True)
class ChainMap:
    """Per-t matrices from C•_source to C•_target"""
    source: MultiDegree
    target: MultiDegree
    components: Tuple[LabeledMatrix, ...]


@dataclass(frozen=True)
class CohomologyPiece:
    """H^i(C•_a) presented as cocycle representatives modulo a coboundary basis"""
    degree: MultiDegree
    index: int
    basis: Tuple[int, ...]
    coboundaries: Tuple[Tuple, ...]
    representatives: Tuple[Tuple, ...]

    @property
    def dim(self) -> int:
        return len(self.representatives)


class KIndexStatus(Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    ABOVE_CAP = "above_cap"


@dataclass
class KBuchsbaumResult:
    status: KIndexStatus
    index: Optional[int] = None
    cap: int = 0
    bound: int = 0
    vacuous: bool = False
    witness: Optional[Tuple[int, Tuple[int, ...], Tuple[int, ...]]] = None
    checked_maps: int = 0

    def as_report_value(self):
        if self.status is KIndexStatus.FINITE:
            return self.index
        return self.status.value


def cech_degree_basis(ideal: MonomialIdeal, degree: MultiDegree, t: int) -> List[int]:
    """Size-t subsets F ⊇ G_a admitted at a, in canonical order"""
    if not 0 <= t <= ideal.n:
        raise PreconditionViolation(f"Čech position t={t} outside 0..{ideal.n}")
    negative = degree.negative_mask
    witnesses = witness_masks(ideal, degree.a)
    free = full_mask(ideal.n) & ~negative
    needed = t - size(negative)
    if needed < 0:
        return []
    basis = [
        negative | extra
        for extra in subsets_of_size(free, needed)
        if admits(negative | extra, witnesses)
    ]
    return sorted(basis, key=canonical_key)


def _differential(source: Sequence[int], target: Sequence[int], n: int) -> LabeledMatrix:
    """d(b_F) = Σ_{j ∉ F} (−1)^s b_{F ∪ j}, s = #{k ∈ F : k < j}"""
    row_index = {f: r for r, f in enumerate(target)}
    entries = [[0] * len(source) for _ in target]
    for c, face in enumerate(source):
        for j in range(n):
            bigger = face | (1 << j)
            if bigger != face and bigger in row_index:
                entries[row_index[bigger]][c] = boundary_sign(bigger, face)
    return LabeledMatrix(list(target), list(source), entries)


def _same_map(left: Sequence[Sequence], right: Sequence[Sequence], K: FieldSpec) -> bool:
    # empty intermediate spaces can flatten shapes, so two zero maps always agree
    if is_zero_matrix(left, K) and is_zero_matrix(right, K):
        return True
    return [list(r) for r in left] == [list(r) for r in right]


def cech_degree_complex(ideal: MonomialIdeal, degree: MultiDegree,
                        K: FieldSpec = FieldSpec(), verify: bool = True) -> DegreeComplex:
    bases = tuple(tuple(cech_degree_basis(ideal, degree, t)) for t in range(ideal.n + 1))
    differentials = tuple(_differential(bases[t], bases[t + 1], ideal.n) for t in range(ideal.n))
    if verify:
        for t in range(ideal.n - 1):
            first, second = differentials[t], differentials[t + 1]
            product = compose(second.entries, first.entries, K, len(bases[t + 1]))
            if not is_zero_matrix(product, K):
                raise TheoremViolation("Čech differentials do not compose to zero", index=t,
                                       degree=degree.a)
    return DegreeComplex(degree, bases, differentials)


def cech_cohomology_dims(ideal: MonomialIdeal, degree: MultiDegree,
                         K: FieldSpec = FieldSpec()) -> Dict[int, int]:
    """i ↦ dim H^i(C•_a) for 0 ≤ i ≤ n"""
    complex_a = cech_degree_complex(ideal, degree, K, verify=False)
    ranks = {}
    for t, d in enumerate(complex_a.differentials):
        ranks[t] = exact_rank(d.entries, K, len(d.col_faces))
    return {
        i: complex_a.rank_of(i) - ranks.get(i, 0) - ranks.get(i - 1, 0)
        for i in range(ideal.n + 1)
    }


def multiplication_map(ideal: MonomialIdeal, degree: MultiDegree, j: int,
                       K: FieldSpec = FieldSpec(), verify: bool = True) -> ChainMap:
    """Chain map C•_a → C•_{a+e_j} given by b_F ↦ b_F when F is admitted at a + e_j"""
    if not 0 <= j < ideal.n:
        raise PreconditionViolation(f"variable index {j} outside 0..{ideal.n - 1}")
    target_degree = degree.shifted(j)
    source = cech_degree_complex(ideal, degree, K, verify=False)
    target = cech_degree_complex(ideal, target_degree, K, verify=False)
    components = []
    for t in range(ideal.n + 1):
        row_index = {f: r for r, f in enumerate(target.bases[t])}
        entries = [[0] * len(source.bases[t]) for _ in target.bases[t]]
        for c, face in enumerate(source.bases[t]):
            if face in row_index:
                entries[row_index[face]][c] = 1
        components.append(LabeledMatrix(list(target.bases[t]), list(source.bases[t]), entries))
    chain_map = ChainMap(degree, target_degree, tuple(components))
    if verify:
        for t in range(ideal.n):
            left = compose(target.differentials[t].entries, components[t].entries, K,
                           len(target.bases[t]))
            right = compose(components[t + 1].entries, source.differentials[t].entries, K,
                            len(source.bases[t + 1]))
            if not _same_map(left, right, K):
                raise TheoremViolation("multiplication map does not commute with differentials",
                                       index=t, degree=degree.a)
    return chain_map


class CechOracle:
    """Caches cohomology pieces and single-step induced maps for one ideal and field"""

    def __init__(self, ideal: MonomialIdeal, K: FieldSpec = FieldSpec(), verify: bool = True):
        self.ideal = ideal
        self.K = K
        self.verify = verify
        self._pieces: Dict[Tuple[Tuple[int, ...], int], CohomologyPiece] = {}
        self._steps: Dict[Tuple[Tuple[int, ...], int, int], List[List]] = {}
        self.logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}")

    def piece(self, degree: MultiDegree, i: int) -> CohomologyPiece:
        key = (degree.a, i)
        if key in self._pieces:
            return self._pieces[key]
        complex_a = cech_degree_complex(self.ideal, degree, self.K, verify=self.verify)
        basis = complex_a.bases[i]
        dim = len(basis)
        if i > 0:
            incoming = complex_a.differentials[i - 1]
            columns = [[row[c] for row in incoming.entries] for c in range(len(incoming.col_faces))]
            coboundaries = independent_columns(columns, self.K, dim)
        else:
            coboundaries = []
        if i < self.ideal.n:
            outgoing = complex_a.differentials[i]
            cocycles = kernel_basis(outgoing.entries, self.K, dim)
        else:
            cocycles = kernel_basis([], self.K, dim)
        extended = independent_columns(coboundaries + cocycles, self.K, dim)
        representatives = extended[len(coboundaries):]
        piece = CohomologyPiece(
            degree, i, tuple(basis),
            tuple(tuple(v) for v in coboundaries),
            tuple(tuple(v) for v in representatives),
        )
        self._pieces[key] = piece
        return piece

    def induced_step(self, degree: MultiDegree, j: int, i: int) -> List[List]:
        """Matrix of H^i_a → H^i_{a+e_j} in the representative bases"""
        key = (degree.a, j, i)
        if key in self._steps:
            return self._steps[key]
        source = self.piece(degree, i)
        target = self.piece(degree.shifted(j), i)
        domain = self.K.domain()
        matrix = [[domain.zero] * source.dim for _ in range(target.dim)]
        if source.dim and target.dim:
            chain_map = multiplication_map(self.ideal, degree, j, self.K, verify=self.verify)
            component = chain_map.components[i].entries
            basis = [list(v) for v in target.coboundaries] + [list(v) for v in target.representatives]
            offset = len(target.coboundaries)
            for c, rep in enumerate(source.representatives):
                image = apply_matrix(component, list(rep), self.K)
                coeffs = coordinates_in_basis(basis, image, self.K)
                for r in range(target.dim):
                    matrix[r][c] = coeffs[offset + r]
        self._steps[key] = matrix
        return matrix

    def composite(self, degree: MultiDegree, steps: Sequence[int], i: int) -> List[List]:
        """Product of single-step induced maps along the path given by `steps`"""
        current = degree
        result = None
        for j in steps:
            step = self.induced_step(current, j, i)
            if result is None:
                result = step
            else:
                result = compose(step, result, self.K, len(result))
            current = current.shifted(j)
        return result if result is not None else []

    def composite_is_zero(self, degree: MultiDegree, b: Sequence[int], i: int) -> bool:
        steps = [j for j, count in enumerate(b) for _ in range(count)]
        forward = self.composite(degree, steps, i)
        if self.verify and len(set(steps)) > 1:
            backward = self.composite(degree, list(reversed(steps)), i)
            if not _same_map(forward, backward, self.K):
                raise TheoremViolation("induced maps depend on the lattice path", index=i,
                                       degree=degree.a)
        return is_zero_matrix(forward, self.K)


def _b_vectors(n: int, k: int) -> List[Tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(n), k):
        b = [0] * n
        for j in combo:
            b[j] += 1
        out.append(tuple(b))
    return out


def k_buchsbaum_index(ideal: MonomialIdeal, K: FieldSpec = FieldSpec(), cap: Optional[int] = None,
                      parallel: Optional[int] = None, verify: bool = True) -> KBuchsbaumResult:
    """Least k with m^k H^i_m(S/I) = 0 for all i ≠ dim S/I, decided through the Čech oracle"""
    rho_vec = rho(ideal)
    n = ideal.n
    bound = sum(rho_vec) - n + 1
    if cap is None:
        cap = bound + settings.K_INDEX_MARGIN
    if cap < 1:
        raise PreconditionViolation(f"k-index cap must be >= 1, got {cap}")
    delta = radical_complex(ideal)
    d = dimension(delta) + 1
    workers = parallel or settings.PARALLEL

    # finite length check: no nonzero piece with G_a ≠ ∅ below d
    negative_degrees = [
        MultiDegree(a)
        for face in sorted(delta.faces, key=canonical_key) if face
        for a in box_degrees(rho_vec, face)
    ]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        negative_dims = list(pool.map(lambda deg: cech_cohomology_dims(ideal, deg, K), negative_degrees))
    for degree, dims in zip(negative_degrees, negative_dims):
        if any(dims.get(i, 0) for i in range(d)):
            logger.info(f"{ideal} has an infinite-length H^i below d={d} (degree {degree})")
            return KBuchsbaumResult(KIndexStatus.INFINITE, cap=cap, bound=bound)

    oracle = CechOracle(ideal, K, verify=verify)
    nonzero: List[Tuple[int, MultiDegree]] = []
    for a in box_degrees(rho_vec, 0):
        degree = MultiDegree(a)
        dims = cech_cohomology_dims(ideal, degree, K)
        nonzero.extend((i, degree) for i in range(d) if dims.get(i, 0))
    if not nonzero:
        return KBuchsbaumResult(KIndexStatus.FINITE, index=1, cap=cap, bound=bound, vacuous=True)

    checked = 0
    witness = None
    for k in range(1, cap + 1):
        survivor = None
        for i, degree in nonzero:
            for b in _b_vectors(n, k):
                if any(degree.a[j] + b[j] >= rho_vec[j] for j in range(n)):
                    continue
                checked += 1
                if not oracle.composite_is_zero(degree, b, i):
                    survivor = (i, degree.a, b)
                    break
            if survivor:
                break
        if survivor is None:
            logger.info(f"{ideal} is strictly {k}-Buchsbaum over {K}")
            return KBuchsbaumResult(KIndexStatus.FINITE, index=k, cap=cap, bound=bound,
                                    witness=witness, checked_maps=checked)
        witness = survivor
    logger.warning(f"k-Buchsbaum search for {ideal} exceeded cap {cap}")
    return KBuchsbaumResult(KIndexStatus.ABOVE_CAP, cap=cap, bound=bound, witness=witness,
                            checked_maps=checked)
