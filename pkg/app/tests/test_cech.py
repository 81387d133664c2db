import pytest

from app.exceptions import PreconditionViolation
from app.models.simplicial_complex import MultiDegree
from app.services.analyzer_service import degree_cohomology_dims, oracle_compare, representative_degrees
from app.services.cech_service import (
    CechOracle,
    KIndexStatus,
    cech_cohomology_dims,
    cech_degree_basis,
    cech_degree_complex,
    k_buchsbaum_index,
    multiplication_map,
)
from app.tests.conftest import ideal


def test_cech_strand_at_zero_is_shifted_complex_cohomology(J_1, Q):
    dims = cech_cohomology_dims(J_1, MultiDegree.of(0, 0, 0, 0), Q)
    assert dims == {0: 0, 1: 1, 2: 0, 3: 0, 4: 0}


def test_cech_basis_contains_negative_support(J_1):
    basis = cech_degree_basis(J_1, MultiDegree.of(-1, -1, 0, 0), 2)
    assert basis == [0b0011]
    assert cech_degree_basis(J_1, MultiDegree.of(-1, -1, 0, 0), 1) == []


def test_cech_basis_position_out_of_range(J_1):
    with pytest.raises(PreconditionViolation):
        cech_degree_basis(J_1, MultiDegree.of(0, 0, 0, 0), 5)


def test_differentials_compose_to_zero(I_1, Q, GF2):
    for rep in representative_degrees(I_1):
        cech_degree_complex(I_1, rep.degree, Q, verify=True)
        cech_degree_complex(I_1, rep.degree, GF2, verify=True)


def test_multiplication_maps_are_chain_maps(I_1, Q):
    for rep in representative_degrees(I_1):
        for j in range(I_1.n):
            multiplication_map(I_1, rep.degree, j, Q, verify=True)


def test_oracle_agrees_with_degree_complexes(I_1, frob_J, edge_and_point, Q, GF2):
    for I in (I_1, frob_J, edge_and_point):
        assert oracle_compare(I, Q).all_match
        assert oracle_compare(I, GF2).all_match


def test_oracle_piece_dimension_matches(I_1, Q):
    oracle = CechOracle(I_1, Q)
    for rep in representative_degrees(I_1):
        dims = degree_cohomology_dims(I_1, rep.degree, Q)
        for i in range(I_1.n + 1):
            assert oracle.piece(rep.degree, i).dim == dims.get(i, 0)


def test_k_index_of_product_seed_is_one(J_1, Q):
    result = k_buchsbaum_index(J_1, Q)
    assert result.status is KIndexStatus.FINITE
    assert result.index == 1
    assert not result.vacuous


def test_k_index_of_frobenius_image_reaches_bound(frob_J, Q):
    result = k_buchsbaum_index(frob_J, Q)
    assert result.status is KIndexStatus.FINITE
    assert result.index == 5
    assert result.bound == 5
    assert result.witness is not None
    i, a, b = result.witness
    assert sum(b) == 4


def test_k_index_infinite_without_finite_length(edge_and_point, Q):
    result = k_buchsbaum_index(edge_and_point, Q)
    assert result.status is KIndexStatus.INFINITE
    assert result.as_report_value() == "infinite"


def test_k_index_vacuous_for_cohen_macaulay(Q):
    result = k_buchsbaum_index(ideal(2, (1, 1)), Q)
    assert result.index == 1
    assert result.vacuous


def test_k_index_above_cap(frob_J, Q):
    result = k_buchsbaum_index(frob_J, Q, cap=3)
    assert result.status is KIndexStatus.ABOVE_CAP
    assert result.as_report_value() == "above_cap"


def test_k_index_rejects_bad_cap(J_1, Q):
    with pytest.raises(PreconditionViolation):
        k_buchsbaum_index(J_1, Q, cap=0)
