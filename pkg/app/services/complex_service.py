"""
Complex construction

Builds the Stanley-Reisner complex Δ of a square-free ideal and the degree
complexes Δ_a whose reduced homology gives the a-graded pieces of local
cohomology.
"""

import logging
from functools import lru_cache
from itertools import product
from typing import Iterator, Tuple

from app.exceptions import LengthMismatch, NotSquareFree, TheoremViolation
from app.models.monomial import Monomial, MonomialIdeal, is_squarefree, radical
from app.models.simplicial_complex import MultiDegree, SimplicialComplex
from app.utils.bitsets import is_subset, mask_of, supersets_within

logger = logging.getLogger(__name__)


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """F ∈ Δ iff no generator's support is contained in F"""
    if not is_squarefree(ideal):
        raise NotSquareFree(f"Stanley-Reisner complex requires a square-free ideal, got {ideal}")
    supports = [u.support_mask for u in ideal.gens]
    faces = frozenset(
        f for f in range(1 << ideal.n)
        if not any(is_subset(s, f) for s in supports)
    )
    return SimplicialComplex(ideal.n, faces)


def radical_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Δ of √I"""
    return stanley_reisner_complex(radical(ideal))


def L_mask(a: Tuple[int, ...], u: Monomial) -> int:
    """L(a, u) = {i : ν_i(u) > a_i} as a bitmask"""
    return mask_of(i for i, e in enumerate(u.exponents) if e > a[i])


def admits(face: int, witness_masks: Tuple[int, ...]) -> bool:
    """F is admitted when every generator has a witness j ∉ F with ν_j(u) > a_j"""
    return all(w & ~face for w in witness_masks)


def witness_masks(ideal: MonomialIdeal, a: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(L_mask(a, u) for u in ideal.gens)


@lru_cache(maxsize=65536)
def _degree_complex(ideal: MonomialIdeal, a: Tuple[int, ...]) -> SimplicialComplex:
    negative = mask_of(j for j, x in enumerate(a) if x < 0)
    witnesses = witness_masks(ideal, a)
    faces = frozenset(
        f & ~negative
        for f in supersets_within(negative, ideal.n)
        if admits(f, witnesses)
    )
    return SimplicialComplex(ideal.n, faces)


def degree_complex(ideal: MonomialIdeal, degree: MultiDegree, verify: bool = False) -> SimplicialComplex:
    """Δ_a = {F − G_a : F ⊇ G_a, ∀u ∈ G(I) ∃ j ∉ F with ν_j(u) > a_j}"""
    if degree.n != ideal.n:
        raise LengthMismatch(f"Degree {degree} has length {degree.n}, expected {ideal.n}")
    complex_a = _degree_complex(ideal, degree.a)
    if verify:
        complex_a.assert_downward_closed()
        if any(f & degree.negative_mask for f in complex_a.faces):
            raise TheoremViolation("Δ_a has a vertex in G_a", degree=degree.a)
    return complex_a


def negative_support_is_face(ideal: MonomialIdeal, face: int) -> bool:
    """True when G_a = face can carry a non-void Δ_a, i.e. face ∈ Δ(√I)"""
    return not any(is_subset(u.support_mask, face) for u in ideal.gens)


def box_degrees(rho: Tuple[int, ...], negative_face: int, negative_value: int = -1) -> Iterator[Tuple[int, ...]]:
    """Degrees with G_a = negative_face and 0 ≤ a_j ≤ ρ_j − 1 off the face"""
    ranges = [
        (negative_value,) if negative_face >> j & 1 else range(rho[j])
        for j in range(len(rho))
    ]
    return product(*ranges)
