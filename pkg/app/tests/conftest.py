from pathlib import Path

import pytest

from app.models.field import FieldSpec
from app.models.monomial import MonomialIdeal, frobenius_transform
from app.models.simplicial_complex import SimplicialComplex

IDEALS_DIR = Path(__file__).resolve().parents[2] / "ideals"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: corpus-scale runs (deselect with -m \"not slow\")")


def ideal(n, *gens):
    return MonomialIdeal.from_exponents(n, gens)


@pytest.fixture
def Q():
    return FieldSpec.rationals()


@pytest.fixture
def GF2():
    return FieldSpec.prime(2)


@pytest.fixture
def ideals_dir():
    return IDEALS_DIR


@pytest.fixture
def I_1():
    # (x1x3, x1^2x4, x1x4^2, x2^2x3, x2x3^2, x2x4)
    return ideal(4, (1, 0, 1, 0), (2, 0, 0, 1), (1, 0, 0, 2), (0, 2, 1, 0), (0, 1, 2, 0), (0, 1, 0, 1))


@pytest.fixture
def I_2():
    return ideal(6, (3, 0, 0, 1, 0, 0), (1, 0, 0, 5, 0, 0), (1, 0, 0, 0, 1, 0), (1, 0, 0, 0, 0, 1),
                 (0, 1, 0, 1, 0, 0), (0, 1, 0, 0, 1, 0), (0, 1, 0, 0, 0, 1),
                 (0, 0, 1, 1, 0, 0), (0, 0, 1, 0, 1, 0), (0, 0, 1, 0, 0, 1))


@pytest.fixture
def I_3():
    return ideal(6, (3, 0, 0, 1, 0, 0), (2, 0, 0, 2, 0, 0), (1, 0, 0, 3, 0, 0),
                 (1, 0, 0, 0, 1, 0), (1, 0, 0, 0, 0, 1),
                 (0, 1, 0, 1, 0, 0), (0, 1, 0, 0, 1, 0), (0, 1, 0, 0, 0, 1),
                 (0, 0, 1, 1, 0, 0), (0, 0, 1, 0, 1, 0), (0, 0, 1, 0, 0, 1))


@pytest.fixture
def J_1():
    # (x1, x2)(x3, x4): Δ is two disjoint edges
    return ideal(4, (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1))


@pytest.fixture
def J_2():
    return ideal(6, *[
        tuple(1 if k in (i, j) else 0 for k in range(6))
        for i in range(3) for j in range(3, 6)
    ])


@pytest.fixture
def frob_J(J_1):
    return frobenius_transform(J_1, (2, 2, 2, 2))


@pytest.fixture
def edge_and_point():
    # (x1x3, x2x3): Δ is the edge {1,2} plus the isolated vertex 3, not generalized CM
    return ideal(3, (1, 0, 1), (0, 1, 1))


@pytest.fixture
def projective_plane():
    facets = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
              (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]
    return SimplicialComplex.from_facets(6, [[v - 1 for v in f] for f in facets])
