"""
Simplicial complexes over [n] and multidegrees in Z^n

Faces are stored explicitly as bitmasks. The void complex has no faces; the
irrelevant complex {∅} has exactly the empty face. Singletons need not be
faces, so the vertex set is derived from the faces rather than assumed to be
all of [n].
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

from app.exceptions import TheoremViolation
from app.utils.bitsets import canonical_key, is_subset, mask_of, members, size


@dataclass(frozen=True)
class SimplicialComplex:
    ground: int
    faces: FrozenSet[int]

    @classmethod
    def void(cls, ground: int) -> "SimplicialComplex":
        return cls(ground, frozenset())

    @classmethod
    def irrelevant(cls, ground: int) -> "SimplicialComplex":
        return cls(ground, frozenset({0}))

    @classmethod
    def from_facets(cls, ground: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Downward closure of the given facets (0-based vertex lists)"""
        faces = set()
        for facet in facets:
            verts = sorted(set(facet))
            for k in range(len(verts) + 1):
                for combo in combinations(verts, k):
                    faces.add(mask_of(combo))
        return cls(ground, frozenset(faces))

    @classmethod
    def simplex(cls, ground: int, vertices: Iterable[int]) -> "SimplicialComplex":
        return cls.from_facets(ground, [list(vertices)])

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def is_irrelevant(self) -> bool:
        return self.faces == frozenset({0})

    def __contains__(self, face: int) -> bool:
        return face in self.faces

    def sorted_faces(self) -> List[int]:
        return sorted(self.faces, key=canonical_key)

    def faces_of_dim(self, i: int) -> List[int]:
        """i-faces (|F| = i + 1) in canonical ascending order"""
        return sorted((f for f in self.faces if size(f) == i + 1), key=canonical_key)

    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(members(f)[0] for f in self.faces if size(f) == 1))

    def facets(self) -> List[int]:
        return sorted(
            (f for f in self.faces if not any(g != f and is_subset(f, g) for g in self.faces)),
            key=canonical_key,
        )

    def is_downward_closed(self) -> bool:
        for face in self.faces:
            for j in members(face):
                if face & ~(1 << j) not in self.faces:
                    return False
        return True

    def assert_downward_closed(self) -> None:
        if not self.is_downward_closed():
            raise TheoremViolation("face family is not downward closed")

    def f_vector(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for face in self.faces:
            counts[size(face) - 1] = counts.get(size(face) - 1, 0) + 1
        return counts


@dataclass(frozen=True)
class MultiDegree:
    """a in Z^n with G_a = {a_i < 0} and H_a = {a_i > 0}"""
    a: Tuple[int, ...]

    @classmethod
    def of(cls, *coords: int) -> "MultiDegree":
        return cls(tuple(coords))

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def negative_mask(self) -> int:
        return mask_of(j for j, x in enumerate(self.a) if x < 0)

    @property
    def positive_mask(self) -> int:
        return mask_of(j for j, x in enumerate(self.a) if x > 0)

    @property
    def total_degree(self) -> int:
        return sum(self.a)

    def shifted(self, j: int, step: int = 1) -> "MultiDegree":
        coords = list(self.a)
        coords[j] += step
        return MultiDegree(tuple(coords))

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.a) + ")"


def link(delta: SimplicialComplex, face: int) -> SimplicialComplex:
    """lk F = {G : F ∪ G ∈ Δ, F ∩ G = ∅}; void when F is not a face"""
    return SimplicialComplex(
        delta.ground,
        frozenset(g for g in delta.faces if g & face == 0 and (g | face) in delta.faces),
    )


def star(delta: SimplicialComplex, face: int) -> SimplicialComplex:
    """st F = {G ∈ Δ : G ∪ F ∈ Δ}"""
    return SimplicialComplex(
        delta.ground,
        frozenset(g for g in delta.faces if (g | face) in delta.faces),
    )


def dimension(delta: SimplicialComplex) -> int:
    if delta.is_void:
        return -1
    return max(size(f) for f in delta.faces) - 1


def is_pure(delta: SimplicialComplex) -> bool:
    dims = {size(f) for f in delta.facets()}
    return len(dims) <= 1


def one_skeleton_graph(delta: SimplicialComplex) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(delta.vertices())
    graph.add_edges_from(members(f) for f in delta.faces if size(f) == 2)
    return graph


def connected_components(delta: SimplicialComplex) -> List[Tuple[int, ...]]:
    """Vertex partition by the 1-skeleton, each block ascending, blocks by min vertex"""
    blocks = [tuple(sorted(c)) for c in nx.connected_components(one_skeleton_graph(delta))]
    return sorted(blocks)


def is_cone(delta: SimplicialComplex, v: int) -> bool:
    apex = 1 << v
    if apex not in delta.faces:
        return False
    return all((f | apex) in delta.faces for f in delta.faces)
