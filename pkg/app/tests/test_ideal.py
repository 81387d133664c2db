import pytest

from app.exceptions import ConstantGenerator, InputError, LengthMismatch, NonPositiveExponent
from app.models.field import FieldSpec
from app.models.monomial import (
    Monomial,
    MonomialIdeal,
    free_vertices,
    frobenius_transform,
    is_squarefree,
    radical,
    split_generators,
)
from app.tests.conftest import ideal


def test_minimal_generators_drop_multiples_and_duplicates():
    I = ideal(2, (1, 1), (2, 1), (1, 1), (0, 3))
    assert I.gens == (Monomial.of(0, 3), Monomial.of(1, 1))


def test_constant_generator_rejected():
    with pytest.raises(ConstantGenerator):
        ideal(2, (0, 0))


def test_length_mismatch_rejected():
    with pytest.raises(LengthMismatch):
        MonomialIdeal.from_exponents(3, [(1, 1)])


def test_zero_ideal():
    assert MonomialIdeal.zero(3).is_zero
    assert str(MonomialIdeal.zero(3)) == "(0)"


def test_rho(I_1):
    assert I_1.rho() == (2, 2, 2, 2)
    # a variable occurring in no generator has rho 1
    assert ideal(3, (2, 1, 0)).rho() == (2, 1, 1)


def test_radical(I_1, J_1, I_2, I_3, J_2):
    assert radical(I_1) == J_1
    assert radical(I_2) == J_2
    assert radical(I_3) == J_2
    assert is_squarefree(J_1)
    assert not is_squarefree(I_1)


def test_split_generators_and_free_vertices():
    I = ideal(3, (2, 0, 0), (1, 1, 0), (0, 1, 1))
    pure, mixed = split_generators(I)
    assert pure == {0: 2}
    assert mixed == (Monomial.of(0, 1, 1), Monomial.of(1, 1, 0))
    assert free_vertices(I) == (1, 2)


def test_frobenius_transform(J_1, frob_J):
    assert frob_J.rho() == (2, 2, 2, 2)
    assert radical(frob_J) == J_1
    assert Monomial.of(2, 0, 2, 0) in frob_J.gens


def test_frobenius_rejects_bad_exponents(J_1):
    with pytest.raises(LengthMismatch):
        frobenius_transform(J_1, (2, 2))
    with pytest.raises(NonPositiveExponent):
        frobenius_transform(J_1, (1, 0, 1, 1))


def test_monomial_text():
    assert str(Monomial.of(2, 0, 1)) == "x1^2*x3"
    assert str(Monomial.of(0, 0)) == "1"


def test_field_spec_parse():
    assert FieldSpec.parse("Q").is_rational
    assert FieldSpec.parse("gf:2").label == "GF(2)"
    assert FieldSpec.parse("GF:7").spec == "gf:7"
    with pytest.raises(InputError):
        FieldSpec.parse("gf:4")
    with pytest.raises(InputError):
        FieldSpec.parse("r")
