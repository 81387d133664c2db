"""
Generalized CM Constructor

Builds candidate ideals from a square-free seed J by replacing every
generator X_{j_1}⋯X_{j_p} with one or more monomials X_{j_1}^{e_1}⋯X_{j_p}^{e_p}
(e_i ≥ 1), then decides generalized CM for each candidate. Assignments that
differ by a variable permutation fixing J share a verdict, so only one per
orbit is evaluated.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from app.config import settings
from app.exceptions import NonPositiveExponent, NotSquareFree, PreconditionViolation, SeedNotGeneralizedCM, TheoremViolation
from app.models.field import FieldSpec
from app.models.monomial import Monomial, MonomialIdeal, is_squarefree, minimal_generators, radical
from app.services.analyzer_service import is_generalized_cm
from app.services.characterization_service import combinatorial_gcm
from app.utils.bitsets import mask_of, members

logger = logging.getLogger(__name__)

# per generator: the exponent tuples, each aligned with the generator's ascending support
Choice = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class ExponentAssignment:
    """Exponent tuples for every generator of the seed, in the seed's generator order"""
    choices: Tuple[Choice, ...]

    @classmethod
    def ones(cls, seed: MonomialIdeal) -> "ExponentAssignment":
        return cls(tuple(((1,) * len(u.support),) for u in seed.gens))

    @classmethod
    def single(cls, seed: MonomialIdeal, tuples: Sequence[Sequence[int]]) -> "ExponentAssignment":
        return cls(tuple((tuple(t),) for t in tuples))

    @classmethod
    def by_support(cls, seed: MonomialIdeal, table: Dict[Tuple[int, ...], Sequence[Sequence[int]]]
                   ) -> "ExponentAssignment":
        """Build from {1-based support: [exponent tuples]}; unspecified generators get all ones"""
        choices = []
        for u in seed.gens:
            key = tuple(j + 1 for j in u.support)
            tuples = table.get(key, [(1,) * len(key)])
            choices.append(tuple(sorted(tuple(t) for t in tuples)))
        return cls(tuple(choices))

    @property
    def is_single(self) -> bool:
        return all(len(c) == 1 for c in self.choices)

    def flat(self) -> Tuple[int, ...]:
        return tuple(e for choice in self.choices for t in choice for e in t)


def apply_assignment(seed: MonomialIdeal, assignment: ExponentAssignment) -> MonomialIdeal:
    if not is_squarefree(seed):
        raise NotSquareFree(f"seed must be square-free, got {seed}")
    if len(assignment.choices) != len(seed.gens):
        raise PreconditionViolation(
            f"assignment covers {len(assignment.choices)} generators, seed has {len(seed.gens)}")
    produced = []
    for u, choice in zip(seed.gens, assignment.choices):
        support = u.support
        if not choice:
            raise PreconditionViolation(f"no exponent tuple for generator {u}")
        for exps in choice:
            if len(exps) != len(support):
                raise PreconditionViolation(f"tuple {exps} does not match support of {u}")
            if any(e < 1 for e in exps):
                raise NonPositiveExponent(f"assignment exponents must be >= 1, got {exps}")
            vector = [0] * seed.n
            for j, e in zip(support, exps):
                vector[j] = e
            produced.append(Monomial(tuple(vector)))
    ideal = minimal_generators(produced, seed.n)
    if radical(ideal) != seed:
        raise TheoremViolation(f"radical of {ideal} is not the seed {seed}")
    return ideal


def seed_symmetries(seed: MonomialIdeal) -> List[Tuple[int, ...]]:
    """Variable permutations mapping the set of generator supports onto itself"""
    supports = {u.support_mask for u in seed.gens}
    out = []
    for perm in permutations(range(seed.n)):
        if all(mask_of(perm[v] for v in members(s)) in supports for s in supports):
            out.append(perm)
    return out


def _permute(seed: MonomialIdeal, assignment: ExponentAssignment, perm: Sequence[int]) -> ExponentAssignment:
    position = {u.support_mask: k for k, u in enumerate(seed.gens)}
    moved: List[Optional[Choice]] = [None] * len(seed.gens)
    for u, choice in zip(seed.gens, assignment.choices):
        support = members(u.support_mask)
        image = tuple(sorted(perm[v] for v in support))
        new_choice = []
        for exps in choice:
            by_var = {perm[v]: e for v, e in zip(support, exps)}
            new_choice.append(tuple(by_var[w] for w in image))
        moved[position[mask_of(image)]] = tuple(sorted(new_choice))
    return ExponentAssignment(tuple(moved))


def canonical_assignment(seed: MonomialIdeal, assignment: ExponentAssignment,
                         symmetries: Sequence[Sequence[int]]) -> ExponentAssignment:
    return min((_permute(seed, assignment, perm) for perm in symmetries), key=lambda a: a.choices)


def enumerate_assignments(seed: MonomialIdeal, bound: int, tuples: int):
    """Every assignment with exponents in [1, bound] and 1..tuples distinct tuples per generator"""
    if bound < 1 or tuples < 1:
        raise PreconditionViolation(f"bound and tuples must be >= 1, got {bound}, {tuples}")
    options = []
    for u in seed.gens:
        points = list(product(range(1, bound + 1), repeat=len(u.support)))
        per_gen = [combo for t in range(1, tuples + 1) for combo in combinations(points, t)]
        options.append(per_gen)
    for combo in product(*options):
        yield ExponentAssignment(tuple(combo))


class VerdictPath(str, Enum):
    COMBINATORIAL = "combinatorial"
    HOMOLOGICAL = "homological"
    BOTH = "both"


@dataclass
class Verdict:
    gcm: bool
    combinatorial: Optional[bool] = None
    homological: Optional[bool] = None


def evaluate_candidate(ideal: MonomialIdeal, K: FieldSpec = FieldSpec(),
                       path: VerdictPath = VerdictPath.COMBINATORIAL) -> Verdict:
    """Combinatorial test when dim S/I ≤ 3, the local cohomology table otherwise or on request"""
    combinatorial = None
    homological = None
    if path in (VerdictPath.COMBINATORIAL, VerdictPath.BOTH):
        combinatorial = combinatorial_gcm(ideal)
    if path is not VerdictPath.COMBINATORIAL or combinatorial is None:
        homological = is_generalized_cm(ideal, K)
    if combinatorial is not None and homological is not None and combinatorial != homological:
        raise TheoremViolation(f"combinatorial and homological verdicts differ for {ideal}")
    gcm = combinatorial if combinatorial is not None else homological
    return Verdict(gcm, combinatorial, homological)


@dataclass
class SearchOutcome:
    assignment: ExponentAssignment
    ideal: MonomialIdeal
    verdict: Verdict
    representative: bool


def exponent_search(seed: MonomialIdeal, bound: Optional[int] = None, tuples: Optional[int] = None,
                    K: FieldSpec = FieldSpec(), path: VerdictPath = VerdictPath.COMBINATORIAL,
                    parallel: Optional[int] = None) -> List[SearchOutcome]:
    """Decide generalized CM for every assignment, evaluating one per symmetry orbit"""
    bound = bound or settings.SEARCH_BOUND
    tuples = tuples or settings.SEARCH_TUPLES
    if not is_squarefree(seed):
        raise NotSquareFree(f"seed must be square-free, got {seed}")
    if not is_generalized_cm(seed, K):
        raise SeedNotGeneralizedCM(f"seed {seed} is not generalized CM over {K}")

    symmetries = seed_symmetries(seed)
    assignments = list(enumerate_assignments(seed, bound, tuples))
    canon = [canonical_assignment(seed, a, symmetries) for a in assignments]
    orbit_reps: List[ExponentAssignment] = []
    seen = set()
    for c in canon:
        if c not in seen:
            seen.add(c)
            orbit_reps.append(c)
    logger.info(f"Exponent search on {seed}: {len(assignments)} assignments, "
                f"{len(orbit_reps)} orbits under {len(symmetries)} symmetries")

    def evaluate(rep: ExponentAssignment) -> Verdict:
        return evaluate_candidate(apply_assignment(seed, rep), K, path)

    workers = max(1, parallel or settings.PARALLEL)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        verdicts = dict(zip(orbit_reps, pool.map(evaluate, orbit_reps)))

    return [
        SearchOutcome(a, apply_assignment(seed, a), verdicts[c], representative=(a == c))
        for a, c in zip(assignments, canon)
    ]


def product_seed(n: int) -> MonomialIdeal:
    """(X_1, …, X_n)(X_{n+1}, …, X_{2n}) in 2n variables"""
    if n < 1:
        raise PreconditionViolation(f"n must be >= 1, got {n}")
    vectors = []
    for i in range(n):
        for j in range(n, 2 * n):
            vector = [0] * (2 * n)
            vector[i] = vector[j] = 1
            vectors.append(vector)
    return MonomialIdeal.from_exponents(2 * n, vectors)


def is_frobenius_constant(seed: MonomialIdeal, assignment: ExponentAssignment) -> bool:
    """α_{i,j} independent of j and β_{i,j} independent of i"""
    alpha: Dict[int, set] = {}
    beta: Dict[int, set] = {}
    for u, choice in zip(seed.gens, assignment.choices):
        if len(choice) != 1:
            raise PreconditionViolation("Frobenius constancy is defined for single-tuple assignments")
        i, j = u.support
        a_ij, b_ij = choice[0]
        alpha.setdefault(i, set()).add(a_ij)
        beta.setdefault(j, set()).add(b_ij)
    return all(len(v) == 1 for v in alpha.values()) and all(len(v) == 1 for v in beta.values())


@dataclass
class FrobeniusFamilyResult:
    n: int
    bound: int
    holds: Optional[bool]
    checked: int = 0
    positives: int = 0
    counterexample: Optional[ExponentAssignment] = None
    skipped_reason: Optional[str] = None


def verify_only_frobenius_family(n: int, bound: int, K: FieldSpec = FieldSpec(),
                                 path: VerdictPath = VerdictPath.COMBINATORIAL,
                                 parallel: Optional[int] = None) -> FrobeniusFamilyResult:
    """Generalized CM ⟺ Frobenius constancy over all single-tuple assignments on (X_1..X_n)(X_{n+1}..X_{2n})"""
    if n < 2:
        reason = "n = 1: seed and every assignment are Cohen-Macaulay"
        logger.info(f"Skipping Frobenius family check: {reason}")
        return FrobeniusFamilyResult(n, bound, None, skipped_reason=reason)
    seed = product_seed(n)
    outcomes = exponent_search(seed, bound, 1, K, path, parallel)
    result = FrobeniusFamilyResult(n, bound, True, checked=len(outcomes))
    for outcome in outcomes:
        expected = is_frobenius_constant(seed, outcome.assignment)
        if outcome.verdict.gcm:
            result.positives += 1
        if outcome.verdict.gcm != expected:
            result.holds = False
            result.counterexample = outcome.assignment
            logger.warning(f"Frobenius classification fails at {outcome.ideal}")
            break
    return result
