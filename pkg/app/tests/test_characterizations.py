import random

import pytest

from app.exceptions import DimensionMismatch, NotAFace, NotSquareFree, PreconditionViolation
from app.models.monomial import Monomial
from app.models.simplicial_complex import MultiDegree
from app.services.analyzer_service import (
    is_generalized_cm,
    local_cohomology_table,
    oracle_compare,
    representative_degrees,
)
from app.services.characterization_service import (
    L_set,
    admissible_degrees,
    check_dim2,
    check_dim3,
    check_necessary_condition,
    combinatorial_gcm,
    delta_a_connected_combinatorially,
    maximal_admissible_degrees,
    purity_check,
    sigma_extend,
    vertex_set_delta_a,
)
from app.services.complex_service import degree_complex
from app.services.homology_service import reduced_homology_dims
from app.tasks.corpus_tasks import dimension_corpus, random_ideal
from app.tests.conftest import ideal
from app.utils.bitsets import mask_of


def test_L_set():
    assert L_set(MultiDegree.of(0, 0, 1), Monomial.of(1, 1, 1)) == mask_of((0, 1))
    assert L_set(MultiDegree.of(2, 2, 2), Monomial.of(1, 1, 1)) == 0


def test_sigma_extend():
    assert sigma_extend((0, 1, 0), mask_of((0,)), (2, 2, 2)) == MultiDegree.of(2, 1, 0)


def test_admissible_degrees_need_a_face(J_1):
    with pytest.raises(NotAFace):
        admissible_degrees(J_1, mask_of((0, 2)))


def test_maximal_admissible_degrees_are_admissible(I_1):
    for j in range(I_1.n):
        everything = admissible_degrees(I_1, 1 << j)
        maximal = maximal_admissible_degrees(I_1, 1 << j)
        assert maximal
        assert set(maximal) <= set(everything)
        assert all(point.a[j] == 1 for point in everything)


def test_dim2_worked_example(I_1, J_1):
    assert check_dim2(I_1).holds
    assert check_dim2(J_1).holds


def test_dim2_failure_has_witness(edge_and_point):
    result = check_dim2(edge_and_point)
    assert not result
    assert result.clause == "ell"
    sigma, a = result.witness
    assert sigma == [3]


def test_dim2_refuses_other_dimensions(I_2):
    with pytest.raises(DimensionMismatch):
        check_dim2(I_2)


def test_dim3_worked_examples(I_2, I_3, J_2, Q):
    assert check_dim3(I_2).holds
    assert check_dim3(J_2).holds
    result = check_dim3(I_3)
    assert result.holds
    assert result.witness is None
    assert check_necessary_condition(I_3, 1).holds
    assert check_necessary_condition(I_3, 2).holds
    assert oracle_compare(I_3, Q).all_match


def test_dim3_refuses_other_dimensions(I_1):
    with pytest.raises(DimensionMismatch):
        check_dim3(I_1)


def test_necessary_condition_needs_positive_index(I_1):
    with pytest.raises(PreconditionViolation):
        check_necessary_condition(I_1, 0)


def test_vertex_sets_match_degree_complexes(I_1):
    for rep in representative_degrees(I_1):
        if rep.face_size != 1 or degree_complex(I_1, rep.degree).is_void:
            continue
        assert vertex_set_delta_a(I_1, rep.degree) == degree_complex(I_1, rep.degree).vertices()


def test_combinatorial_gcm_ranges(I_1):
    assert combinatorial_gcm(ideal(2, (1, 1))) is True
    assert combinatorial_gcm(I_1) is True
    # boundary of the 4-simplex has dim 3: no combinatorial test
    assert combinatorial_gcm(ideal(5, (1, 1, 1, 1, 1))) is None


def test_purity(J_1, edge_and_point, I_1):
    assert purity_check(J_1)
    assert not purity_check(edge_and_point)
    with pytest.raises(NotSquareFree):
        purity_check(I_1)


@pytest.mark.parametrize("target", [2, 3])
def test_characterizations_agree_with_homology(target, Q):
    check = check_dim2 if target == 2 else check_dim3
    corpus = dimension_corpus(target, seed=11, count=60, max_vars=5, max_rho=3, max_gens=8)
    assert len(corpus) == 60
    mixed_positives = 0
    for I in corpus:
        result = check(I)
        assert result.holds == is_generalized_cm(I, Q), str(I)
        if result.holds:
            assert check_necessary_condition(I, 1).holds
            mixed_positives += not I.is_squarefree()
    assert mixed_positives > 0


def test_necessary_condition_on_finite_length_instances(Q):
    rng = random.Random(5)
    for _ in range(20):
        I = random_ideal(rng, max_vars=4, max_rho=3, max_gens=6)
        table = local_cohomology_table(I, Q)
        for i in range(1, table.d):
            if table.finite_length(i):
                assert check_necessary_condition(I, i).holds


def test_connectivity_matches_reduced_zero_homology(I_1, I_2, Q):
    for I in (I_1, I_2):
        for rep in representative_degrees(I):
            if rep.face_size != 1:
                continue
            complex_a = degree_complex(I, rep.degree)
            if complex_a.is_void:
                continue
            j = rep.face.bit_length() - 1
            connected = reduced_homology_dims(complex_a, Q)[0] == 0
            assert delta_a_connected_combinatorially(I, rep.degree.a, j) == connected
