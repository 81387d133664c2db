"""
Combinatorial characterizations of finite length cohomology

Everything here works on exponent data only (no homology): the sets
L(a, u) = {i : ν_i(u) > a_i}, the extension a(σ) that raises coordinates in
σ to ρ, maximal admissible degrees, the ℓ-condition that finite length of
H^i forces on every (i−1)-face, and the complete tests for dim S/I = 2 and 3.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from app.config import settings
from app.exceptions import DimensionMismatch, NotAFace, NotSquareFree, PreconditionViolation, TheoremViolation
from app.models.monomial import Monomial, MonomialIdeal, free_vertices, is_squarefree, rho, split_generators
from app.models.simplicial_complex import MultiDegree, dimension, is_pure
from app.services.complex_service import L_mask, degree_complex, radical_complex, stanley_reisner_complex
from app.utils.bitsets import mask_of, members, size, to_one_based

logger = logging.getLogger(__name__)


def L_set(a: MultiDegree, u: Monomial) -> int:
    """L(a, u) as a bitmask"""
    return L_mask(a.a, u)


def sigma_extend(a: Sequence[int], sigma: int, rho_vec: Sequence[int]) -> MultiDegree:
    """a(σ): ρ_i on σ, a_i elsewhere"""
    return MultiDegree(tuple(rho_vec[i] if sigma >> i & 1 else a[i] for i in range(len(a))))


@dataclass(frozen=True)
class AdmissibleDegree:
    sigma: int
    a: Tuple[int, ...]
    maximal: bool

    @property
    def sigma_one_based(self) -> List[int]:
        return to_one_based(self.sigma)


def _satisfies_b(a: Sequence[int], sigma: int, rho_vec, mixed: Sequence[Monomial]) -> bool:
    extended = sigma_extend(a, sigma, rho_vec)
    return all(L_set(extended, u) for u in mixed)


def admissible_degrees(ideal: MonomialIdeal, sigma: int) -> List[AdmissibleDegree]:
    """All a with 0 ≤ a ≤ ρ − 1 and L(a(σ), u) ≠ ∅ for u ∈ G_0(I); coordinates on σ set to ρ − 1"""
    delta = radical_complex(ideal)
    if sigma not in delta:
        raise NotAFace(f"{to_one_based(sigma)} is not a face of Δ(√I)")
    rho_vec = rho(ideal)
    _, mixed = split_generators(ideal)
    ranges = [(r - 1,) if sigma >> j & 1 else range(r) for j, r in enumerate(rho_vec)]
    out = []
    for a in product(*ranges):
        if not _satisfies_b(a, sigma, rho_vec, mixed):
            continue
        # the admissible set is downward closed, so one-step increments decide maximality
        maximal = True
        for j in range(ideal.n):
            if sigma >> j & 1 or a[j] >= rho_vec[j] - 1:
                continue
            bumped = a[:j] + (a[j] + 1,) + a[j + 1:]
            if _satisfies_b(bumped, sigma, rho_vec, mixed):
                maximal = False
                break
        out.append(AdmissibleDegree(sigma, tuple(a), maximal))
    return out


def maximal_admissible_degrees(ideal: MonomialIdeal, sigma: int) -> List[AdmissibleDegree]:
    return [d for d in admissible_degrees(ideal, sigma) if d.maximal]


def _ell_exists(ideal: MonomialIdeal, sigma: int, a: Sequence[int], free: Sequence[int],
                rho_vec, mixed) -> Optional[int]:
    """An ℓ ∈ [m]∖σ with a_ℓ = ρ_ℓ − 1 and L(a(σ∪ℓ), u) ≠ ∅ whenever ν_ℓ(u) = ρ_ℓ"""
    for ell in free:
        if sigma >> ell & 1 or a[ell] != rho_vec[ell] - 1:
            continue
        extended = sigma_extend(a, sigma | (1 << ell), rho_vec)
        if all(L_set(extended, u) for u in mixed if u.nu(ell) == rho_vec[ell]):
            return ell
    return None


@dataclass
class ConditionResult:
    holds: bool
    i: int
    checked: int = 0
    witness: Optional[Tuple[List[int], Tuple[int, ...]]] = None
    clause: Optional[str] = None

    def __bool__(self) -> bool:
        return self.holds


def _faces_of_size(ideal: MonomialIdeal, i: int) -> List[int]:
    return radical_complex(ideal).faces_of_dim(i - 1)


def check_necessary_condition(ideal: MonomialIdeal, i: int, parallel: Optional[int] = None) -> ConditionResult:
    """Every maximal admissible a(σ) over every (i−1)-face σ admits an ℓ"""
    if i < 1:
        raise PreconditionViolation(f"the ℓ-condition is stated for i ≥ 1, got {i}")
    rho_vec = rho(ideal)
    _, mixed = split_generators(ideal)
    free = free_vertices(ideal)
    faces = _faces_of_size(ideal, i)

    def failing(sigma: int):
        maximal = maximal_admissible_degrees(ideal, sigma)
        for point in maximal:
            if _ell_exists(ideal, sigma, point.a, free, rho_vec, mixed) is None:
                return len(maximal), point
        return len(maximal), None

    workers = max(1, parallel or settings.PARALLEL)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        outcomes = list(pool.map(failing, faces))

    checked = sum(count for count, _ in outcomes)
    for sigma, (_, point) in zip(faces, outcomes):
        if point is not None:
            logger.debug(f"ℓ-condition fails at σ={to_one_based(sigma)}, a={point.a}")
            return ConditionResult(False, i, checked, (to_one_based(sigma), point.a), clause="ell")
    return ConditionResult(True, i, checked)


def _require_dimension(ideal: MonomialIdeal, expected: int, name: str) -> None:
    actual = dimension(radical_complex(ideal))
    if actual != expected:
        if actual >= 3:
            logger.warning(f"{name} refused: dim Δ = {actual}; no combinatorial test is available")
        raise DimensionMismatch(f"{name} needs dim Δ = {expected}, got {actual}")


def check_dim2(ideal: MonomialIdeal) -> ConditionResult:
    """Generalized CM with dim S/I = 2 iff the ℓ-condition holds on every vertex j ∈ [m]"""
    _require_dimension(ideal, 1, "check-dim2")
    result = check_necessary_condition(ideal, 1)
    logger.info(f"dim-2 characterization for {ideal}: {result.holds}")
    return result


def vertex_set_delta_a(ideal: MonomialIdeal, degree: MultiDegree, verify: bool = True) -> Tuple[int, ...]:
    """Vertices of Δ_a for G_a = {j}: ℓ ∈ [m]∖{j} with L(a({ℓ, j}), u) ≠ ∅ for all u ∈ G_0(I)"""
    negative = members(degree.negative_mask)
    free = free_vertices(ideal)
    if len(negative) != 1 or negative[0] not in free:
        raise PreconditionViolation(f"need G_a = {{j}} with j ∈ [m], got G_a = {list(negative)}")
    j = negative[0]
    complex_a = degree_complex(ideal, degree)
    if complex_a.is_void:
        raise PreconditionViolation(f"Δ_a is void at a = {degree}")
    rho_vec = rho(ideal)
    _, mixed = split_generators(ideal)
    vertices = tuple(
        ell for ell in free
        if ell != j and all(L_set(sigma_extend(degree.a, mask_of((ell, j)), rho_vec), u) for u in mixed)
    )
    if verify and vertices != complex_a.vertices():
        raise TheoremViolation("vertex set of Δ_a differs from its combinatorial description",
                               degree=degree.a)
    return vertices


def singleton_witnesses(a: Sequence[int], j: int, rho_vec, mixed) -> int:
    """L_a = {ℓ : L(a(j), u) = {ℓ} for some u ∈ G_0(I)}"""
    extended = sigma_extend(a, 1 << j, rho_vec)
    out = 0
    for u in mixed:
        L = L_set(extended, u)
        if size(L) == 1:
            out |= L
    return out


def good_pair_graph(a: Sequence[int], j: int, free: Sequence[int], rho_vec, mixed) -> nx.Graph:
    """Graph on [m]∖{j} − L_a with an edge wherever no u ∈ G_0(I) has L(a(j), u) = {x, y}"""
    extended = sigma_extend(a, 1 << j, rho_vec)
    bad_pairs = {L for L in (L_set(extended, u) for u in mixed) if size(L) == 2}
    excluded = singleton_witnesses(a, j, rho_vec, mixed) | (1 << j)
    graph = nx.Graph()
    graph.add_nodes_from(v for v in free if not excluded >> v & 1)
    nodes = sorted(graph.nodes)
    for x_pos, x in enumerate(nodes):
        for y in nodes[x_pos + 1:]:
            if mask_of((x, y)) not in bad_pairs:
                graph.add_edge(x, y)
    return graph


def delta_a_connected_combinatorially(ideal: MonomialIdeal, a: Sequence[int], j: int) -> bool:
    """No splitting (P, Q) of the vertex set with every cross pair bad"""
    rho_vec = rho(ideal)
    _, mixed = split_generators(ideal)
    graph = good_pair_graph(a, j, free_vertices(ideal), rho_vec, mixed)
    return graph.number_of_nodes() <= 1 or nx.is_connected(graph)


def check_dim3(ideal: MonomialIdeal) -> ConditionResult:
    """Generalized CM with dim S/I = 3: vertex clauses (ℓ-existence and connectivity) plus the edge ℓ-condition"""
    _require_dimension(ideal, 2, "check-dim3")
    rho_vec = rho(ideal)
    _, mixed = split_generators(ideal)
    free = free_vertices(ideal)
    checked = 0
    for j in free:
        for point in maximal_admissible_degrees(ideal, 1 << j):
            checked += 1
            if _ell_exists(ideal, 1 << j, point.a, free, rho_vec, mixed) is None:
                return ConditionResult(False, 1, checked, ([j + 1], point.a), clause="ell")
            if not delta_a_connected_combinatorially(ideal, point.a, j):
                return ConditionResult(False, 2, checked, ([j + 1], point.a), clause="connectivity")
    edges = check_necessary_condition(ideal, 2)
    result = ConditionResult(edges.holds, 2, checked + edges.checked, edges.witness,
                             clause=None if edges.holds else "edge-ell")
    logger.info(f"dim-3 characterization for {ideal}: {result.holds}")
    return result


def purity_check(ideal: MonomialIdeal) -> bool:
    if not is_squarefree(ideal):
        raise NotSquareFree(f"purity check needs a square-free ideal, got {ideal}")
    return is_pure(stanley_reisner_complex(ideal))


def combinatorial_gcm(ideal: MonomialIdeal) -> Optional[bool]:
    """Verdict of the dim-2/dim-3 tests, True for dim ≤ 1, None when no test applies"""
    dim_delta = dimension(radical_complex(ideal))
    if dim_delta <= 0:
        return True
    if dim_delta == 1:
        return check_dim2(ideal).holds
    if dim_delta == 2:
        return check_dim3(ideal).holds
    return None
