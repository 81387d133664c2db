"""
Corpus Tasks

Reproducible random corpora of monomial ideals and batch runs of the
cross-checks over them. Every corpus is drawn from random.Random(seed), so a
(seed, count, bounds) triple always yields the same ideals in the same order.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

from app.config import settings
from app.exceptions import TheoremViolation
from app.models.field import FieldSpec
from app.models.monomial import Monomial, MonomialIdeal, minimal_generators
from app.models.simplicial_complex import dimension
from app.services.complex_service import radical_complex

logger = logging.getLogger(__name__)


def random_ideal(rng: random.Random, max_vars: Optional[int] = None, max_rho: Optional[int] = None,
                 max_gens: Optional[int] = None) -> MonomialIdeal:
    """n ≤ max_vars, exponents ≤ max_rho, at most max_gens raw generators"""
    max_vars = max_vars or settings.CORPUS_MAX_VARS
    max_rho = max_rho or settings.CORPUS_MAX_RHO
    max_gens = max_gens or settings.CORPUS_MAX_GENS
    n = rng.randint(1, max_vars)
    count = rng.randint(1, max_gens)
    raw = []
    while len(raw) < count:
        exps = tuple(rng.randint(0, max_rho) for _ in range(n))
        if any(exps):
            raw.append(Monomial(exps))
    return minimal_generators(raw, n)


def random_squarefree_ideal(rng: random.Random, max_vars: int = 6,
                            max_gens: Optional[int] = None) -> MonomialIdeal:
    return random_ideal(rng, max_vars, 1, max_gens)


def random_corpus(seed: Optional[int] = None, count: Optional[int] = None, squarefree: bool = False,
                  **bounds) -> List[MonomialIdeal]:
    seed = settings.CORPUS_SEED if seed is None else seed
    count = count or settings.CORPUS_COUNT
    rng = random.Random(seed)
    draw = random_ideal
    if squarefree:
        draw = random_squarefree_ideal
        bounds.pop("max_rho", None)
    corpus = [draw(rng, **bounds) for _ in range(count)]
    logger.info(f"Drew {len(corpus)} {'square-free ' if squarefree else ''}ideals with seed {seed}")
    return corpus


def dimension_corpus(target: int, seed: Optional[int] = None, count: Optional[int] = None,
                     max_attempts: int = 20000, **bounds) -> List[MonomialIdeal]:
    """Random ideals with dim S/I = target, drawn until `count` are found"""
    seed = settings.CORPUS_SEED if seed is None else seed
    count = count or settings.CORPUS_COUNT
    rng = random.Random(seed)
    found: List[MonomialIdeal] = []
    for _ in range(max_attempts):
        if len(found) >= count:
            break
        ideal = random_ideal(rng, **bounds)
        if dimension(radical_complex(ideal)) + 1 == target:
            found.append(ideal)
    if len(found) < count:
        logger.warning(f"Only {len(found)} of {count} ideals with dim S/I = {target} after {max_attempts} draws")
    return found


@dataclass
class CorpusRun:
    """Per-ideal outcomes of a batch task in corpus order"""
    task: str
    field: FieldSpec
    results: List[Tuple[MonomialIdeal, object]] = field(default_factory=list)
    failures: List[Tuple[MonomialIdeal, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_corpus(task: Callable[[MonomialIdeal, FieldSpec], object], ideals: List[MonomialIdeal],
               K: FieldSpec = FieldSpec(), parallel: Optional[int] = None, name: Optional[str] = None) -> CorpusRun:
    """Apply task to every ideal; TheoremViolations are collected, not raised"""
    name = name or getattr(task, "__name__", "task")
    workers = max(1, parallel or settings.PARALLEL)

    def guarded(ideal: MonomialIdeal):
        try:
            return task(ideal, K), None
        except TheoremViolation as e:
            logger.error(f"{name} failed on {ideal}: {e}")
            return None, str(e)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        outcomes = list(pool.map(guarded, ideals))

    run = CorpusRun(name, K)
    for ideal, (value, error) in zip(ideals, outcomes):
        if error is None:
            run.results.append((ideal, value))
        else:
            run.failures.append((ideal, error))
    logger.info(f"{name}: {len(run.results)} ok, {len(run.failures)} failed over {len(ideals)} ideals")
    return run
