"""
Subsets of [n] as integer bitmasks.

Bit j stands for the variable with 0-based index j. Public reports convert
to 1-based indices with `to_one_based`.
"""

from itertools import combinations
from typing import Iterable, Iterator, List, Tuple


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for j in indices:
        mask |= 1 << j
    return mask


def members(mask: int) -> Tuple[int, ...]:
    """Ascending 0-based indices set in mask"""
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def size(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def is_subset(small: int, big: int) -> bool:
    return small & ~big == 0


def subsets_of_size(ground: int, t: int) -> Iterator[int]:
    """Masks of all t-subsets of the set `ground`, in canonical order"""
    for combo in combinations(members(ground), t):
        yield mask_of(combo)


def supersets_within(base: int, n: int) -> Iterator[int]:
    """All masks F with base ⊆ F ⊆ [n]"""
    free = members(full_mask(n) & ~base)
    for k in range(len(free) + 1):
        for combo in combinations(free, k):
            yield base | mask_of(combo)


def canonical_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """Sort key: by size, then lexicographically on ascending members"""
    return (size(mask), members(mask))


def to_one_based(mask: int) -> List[int]:
    return [j + 1 for j in members(mask)]
