import random

import pytest

from app.exceptions import NotSquareFree
from app.models.cohomology_table import NEG_INF, POS_INF, format_extended
from app.models.monomial import MonomialIdeal
from app.models.simplicial_complex import MultiDegree
from app.services.analyzer_service import (
    classic_hochster_table,
    flc_clause_agreement,
    hilbert_series_report,
    hilbert_variables,
    invariants_report,
    is_cohen_macaulay,
    is_generalized_cm,
    local_cohomology_table,
    radical_compare,
    representative_degrees,
    scan_extended_box,
    table_mismatches,
)
from app.services.cech_service import cech_cohomology_dims
from app.tasks.corpus_tasks import random_ideal, random_squarefree_ideal
from app.tests.conftest import ideal


def test_representative_count(J_1, I_1):
    # squarefree: one representative per face of Δ
    assert len(list(representative_degrees(J_1))) == 7
    # faces ∅, 4 vertices, 2 edges with box sizes 16, 8 and 4
    assert len(list(representative_degrees(I_1))) == 16 + 4 * 8 + 2 * 4


def test_table_of_product_seed(J_1, Q):
    table = local_cohomology_table(J_1, Q)
    rows = [(i, rep.face_one_based, list(rep.box), dim) for i, rep, dim in table.rows()]
    assert rows == [
        (1, [], [0, 0, 0, 0], 1),
        (2, [1, 2], [0, 0], 1),
        (2, [3, 4], [0, 0], 1),
    ]
    assert table.d == 2
    assert table.depth == 1
    assert table.is_generalized_cm
    assert not table.is_cohen_macaulay


def test_invariants_of_product_seed(J_1, Q):
    report = invariants_report(local_cohomology_table(J_1, Q))
    assert report.a == [NEG_INF, 0, -2]
    assert report.b == [POS_INF, 0, NEG_INF]
    assert report.reg == 1
    assert report.total_lengths == [0, 1, None]
    assert report.k_bound == 1
    assert report.k_bound_intermediate == 1
    assert report.check("a_bound")
    assert report.check("squarefree_pure")
    assert report.check("squarefree_a_nonpositive")


def test_format_extended():
    assert format_extended(NEG_INF) == "-infinity"
    assert format_extended(POS_INF) == "infinity"
    assert format_extended(3) == 3


def test_worked_examples_generalized_cm(I_1, I_2, I_3, Q):
    assert is_generalized_cm(I_1, Q)
    assert is_generalized_cm(I_2, Q)
    assert is_generalized_cm(I_3, Q)
    assert not is_cohen_macaulay(I_1, Q)
    assert not is_cohen_macaulay(I_3, Q)


def test_depth_zero_from_socle_monomial(I_1, I_3, Q):
    # x1*x4 lies outside I_1 while every x_j*x1*x4 lies inside
    assert local_cohomology_table(I_1, Q).depth == 0
    assert cech_cohomology_dims(I_1, MultiDegree.of(1, 0, 0, 1), Q)[0] == 1
    table = local_cohomology_table(I_3, Q)
    assert table.d == 3
    assert table.flc == [True, True, True, False]
    assert table.depth == 0
    assert cech_cohomology_dims(I_3, MultiDegree.of(1, 0, 0, 1, 0, 0), Q)[0] == 1


def invert_variable(I, j):
    """I with x_j set to 1, on the remaining n - 1 variables"""
    return MonomialIdeal.from_exponents(I.n - 1, [u.exponents[:j] + u.exponents[j + 1:] for u in I.gens])


@pytest.mark.parametrize("name", ["I_1", "I_2", "I_3"])
def test_generalized_cm_ideals_are_cm_off_the_origin(name, request, Q):
    I = request.getfixturevalue(name)
    d = local_cohomology_table(I, Q).d
    for j in range(I.n):
        table = local_cohomology_table(invert_variable(I, j), Q)
        assert table.is_cohen_macaulay, j
        assert table.d == d - 1, j


def test_not_generalized_cm_skips_hypothesis_checks(edge_and_point, Q):
    table = local_cohomology_table(edge_and_point, Q)
    assert not table.is_generalized_cm
    assert table.flc == [True, False, False]
    report = invariants_report(table)
    assert report.check("b_nonnegative") is None
    assert report.check("k_bound") is None


def test_linear_resolution_check_is_reported(J_1, Q):
    report = invariants_report(local_cohomology_table(J_1, Q), linear_resolution=2)
    # J_1 has a 2-linear resolution, so H^i = 0 for 2 ≤ i < 2 holds vacuously
    assert report.check("linear_resolution_vanishing") is True
    flagged = invariants_report(local_cohomology_table(J_1, Q), linear_resolution=1)
    assert flagged.check("linear_resolution_vanishing") is False


def test_field_dependence_of_table(Q, GF2):
    # Stanley-Reisner ideal of the 6-vertex projective plane (its minimal non-faces)
    non_faces = [(1, 2, 4), (1, 3, 5), (1, 3, 6), (1, 4, 6), (1, 2, 5),
                 (2, 3, 4), (2, 3, 6), (2, 5, 6), (3, 4, 5), (4, 5, 6)]
    I = ideal(6, *[tuple(1 if k + 1 in f else 0 for k in range(6)) for f in non_faces])
    assert is_cohen_macaulay(I, Q)
    assert not is_cohen_macaulay(I, GF2)


def test_hilbert_series_of_product_seed(J_1, Q):
    t1, t2, t3, t4 = hilbert_variables(4)
    report = hilbert_series_report(local_cohomology_table(J_1, Q))
    assert report.series(1) == 1
    expected = (1 / t1) / (1 - 1 / t1) * (1 / t2) / (1 - 1 / t2) + (1 / t3) / (1 - 1 / t3) * (1 / t4) / (1 - 1 / t4)
    assert (report.series(2) - expected).simplify() == 0
    assert [term.face for term in report.terms] == [(), (1, 2), (3, 4)]


def test_radical_comparison(I_1, I_3, Q):
    comparison = radical_compare(I_1, Q)
    assert comparison.dims_agree
    assert comparison.gcm and comparison.radical_gcm
    assert comparison.gcm_implication_holds
    assert comparison.non_cm_inherited_holds
    assert radical_compare(I_3, Q).gcm_implication_holds


def test_classic_formula_requires_squarefree(I_1, Q):
    with pytest.raises(NotSquareFree):
        classic_hochster_table(I_1, Q)


@pytest.mark.slow
def test_classic_formula_matches_on_random_squarefree(Q, GF2):
    rng = random.Random(7)
    for _ in range(100):
        I = random_squarefree_ideal(rng, max_vars=6)
        for K in (Q, GF2):
            assert table_mismatches(local_cohomology_table(I, K), classic_hochster_table(I, K)) == []


def test_bound_checks_on_random_corpus(Q):
    rng = random.Random(3)
    for _ in range(25):
        I = random_ideal(rng, max_vars=4, max_rho=3, max_gens=6)
        report = invariants_report(local_cohomology_table(I, Q))
        assert report.check("a_bound")
        assert report.check("b_nonnegative") in (True, None)
        assert report.check("regularity_vanishing") in (True, None)


def test_flc_clauses_agree(I_1, edge_and_point, Q):
    for I in (I_1, edge_and_point):
        assert flc_clause_agreement(I, Q).agrees


def test_extended_box_scan(I_1, frob_J, Q):
    for I in (I_1, frob_J):
        scan = scan_extended_box(I, Q)
        assert scan.matches
        assert scan.pruned > 0
