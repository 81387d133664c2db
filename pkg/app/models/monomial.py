"""
Monomials and monomial ideals

A Monomial is an exponent vector in N^n. A MonomialIdeal stores its minimal
generating set G(I), canonically sorted (lexicographic on exponent
sequences), and derives the rho-vector, radical, generator split and
Frobenius images from it. Indices are 0-based internally.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from app.exceptions import ConstantGenerator, LengthMismatch, NonPositiveExponent, TheoremViolation
from app.utils.bitsets import mask_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Monomial:
    """X_1^{a_1} ... X_n^{a_n}"""
    exponents: Tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"Negative exponent in {self.exponents}")

    @classmethod
    def of(cls, *exponents: int) -> "Monomial":
        return cls(tuple(exponents))

    @property
    def n(self) -> int:
        return len(self.exponents)

    def nu(self, j: int) -> int:
        return self.exponents[j]

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(j for j, e in enumerate(self.exponents) if e != 0)

    @property
    def support_mask(self) -> int:
        return mask_of(self.support)

    @property
    def is_constant(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def squarefree_part(self) -> "Monomial":
        return Monomial(tuple(1 if e else 0 for e in self.exponents))

    def __str__(self) -> str:
        factors = []
        for j, e in enumerate(self.exponents):
            if e == 1:
                factors.append(f"x{j + 1}")
            elif e > 1:
                factors.append(f"x{j + 1}^{e}")
        return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators G(I)"""
    n: int
    gens: Tuple[Monomial, ...]

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def from_exponents(cls, n: int, exponent_lists: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return minimal_generators([Monomial(tuple(e)) for e in exponent_lists], n)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def rho(self) -> Tuple[int, ...]:
        return rho(self)

    def radical(self) -> "MonomialIdeal":
        return radical(self)

    def is_squarefree(self) -> bool:
        return is_squarefree(self)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(u) for u in self.gens) + ")"


def minimal_generators(raw: Iterable[Monomial], n: int) -> MonomialIdeal:
    """Divisibility-minimal elements of raw, deduplicated and sorted"""
    candidates = []
    for u in raw:
        if u.n != n:
            raise LengthMismatch(f"Monomial {u.exponents} has length {u.n}, expected {n}")
        if u.is_constant:
            raise ConstantGenerator("The constant monomial 1 cannot be a generator")
        candidates.append(u)
    unique = sorted(set(candidates))
    minimal = [
        u for u in unique
        if not any(v != u and v.divides(u) for v in unique)
    ]
    return MonomialIdeal(n, tuple(minimal))


def rho(ideal: MonomialIdeal) -> Tuple[int, ...]:
    """rho_j = max nu_j(u) over G(I); 1 when variable j occurs in no generator"""
    values = []
    for j in range(ideal.n):
        top = max((u.nu(j) for u in ideal.gens), default=0)
        values.append(top if top > 0 else 1)
    return tuple(values)


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return minimal_generators((u.squarefree_part() for u in ideal.gens), ideal.n)


def is_squarefree(ideal: MonomialIdeal) -> bool:
    return all(e <= 1 for u in ideal.gens for e in u.exponents)


def split_generators(ideal: MonomialIdeal) -> Tuple[Dict[int, int], Tuple[Monomial, ...]]:
    """Split G(I) into pure powers {j: rho_j} and G_0(I) (support size >= 2)"""
    pure_powers: Dict[int, int] = {}
    mixed: List[Monomial] = []
    for u in ideal.gens:
        support = u.support
        if len(support) == 1:
            pure_powers[support[0]] = u.nu(support[0])
        else:
            mixed.append(u)
    return pure_powers, tuple(mixed)


def free_vertices(ideal: MonomialIdeal) -> Tuple[int, ...]:
    """The index set [m]: variables without a pure power in G(I)"""
    pure_powers, _ = split_generators(ideal)
    return tuple(j for j in range(ideal.n) if j not in pure_powers)


def frobenius_transform(ideal: MonomialIdeal, exps: Sequence[int]) -> MonomialIdeal:
    """Substitute X_j -> X_j^{exps_j} in every generator"""
    if len(exps) != ideal.n:
        raise LengthMismatch(f"Frobenius exponents have length {len(exps)}, expected {ideal.n}")
    if any(a < 1 for a in exps):
        raise NonPositiveExponent(f"Frobenius exponents must be >= 1, got {list(exps)}")
    images = [Monomial(tuple(e * a for e, a in zip(u.exponents, exps))) for u in ideal.gens]
    result = minimal_generators(images, ideal.n)
    if len(result.gens) != len(ideal.gens):
        raise TheoremViolation("Frobenius substitution did not preserve minimality")
    logger.debug(f"Frobenius image of {ideal} under {list(exps)}: {result}")
    return result
