import random

import pytest

from app.exceptions import IdealParseError, IndexOutOfRange, ZeroExponent
from app.schemas.ideal_document import IdealDocument, IdealRequest, parse_ideal
from app.tasks.corpus_tasks import random_ideal
from app.utils.ideal_parser import format_ideal, parse_ideal_text
from app.tests.conftest import ideal


def test_parse_block_form():
    doc = parse_ideal("ring n=2\ngens\nx1*x2\n")
    assert doc.to_ideal() == ideal(2, (1, 1))


def test_parse_compact_form(I_1):
    doc = parse_ideal("ring n=4\ngens: x1*x3, x1^2*x4, x1*x4^2, x2^2*x3, x2*x3^2, x2*x4")
    assert doc.to_ideal() == I_1


def test_parse_metadata_and_comments():
    text = "# a comment\nring n=3\nname edge\nfield gf:3\nlinear_resolution 2\n\ngens\nx1*x3  # trailing\nx2*x3\n"
    doc = parse_ideal(text)
    assert doc.name == "edge"
    assert doc.field == "gf:3"
    assert doc.linear_resolution == 2
    assert doc.field_spec().characteristic == 3
    assert doc.field_spec("q").is_rational


def test_zero_exponent_rejected():
    with pytest.raises(ZeroExponent) as exc:
        parse_ideal("ring n=2\ngens\nx1^0")
    assert exc.value.line == 3


def test_index_out_of_range_is_positioned():
    with pytest.raises(IndexOutOfRange) as exc:
        parse_ideal_text("ring n=2\ngens: x1*x2, x3")
    assert exc.value.line == 2
    assert exc.value.column == 14


def test_syntax_errors():
    with pytest.raises(IdealParseError):
        parse_ideal("gens\nx1")
    with pytest.raises(IdealParseError):
        parse_ideal("ring n=2\nx1")
    with pytest.raises(IdealParseError):
        parse_ideal("ring n=2\ngens\ny1")
    with pytest.raises(IdealParseError):
        parse_ideal("ring n=2\n")


def test_format_round_trips_on_random_corpus():
    rng = random.Random(1)
    for _ in range(50):
        I = random_ideal(rng)
        assert parse_ideal(format_ideal(I)).to_ideal() == I


def test_document_render(I_1):
    doc = IdealDocument.from_ideal(I_1, name="I_1", field="q")
    rendered = doc.render()
    assert rendered.startswith("ring n=4\nname I_1\nfield q\ngens\n")
    assert parse_ideal(rendered).to_ideal() == I_1


def test_request_accepts_text_or_generators(J_1):
    by_text = IdealRequest(text="ring n=4\ngens: x1*x3, x1*x4, x2*x3, x2*x4")
    by_gens = IdealRequest(n=4, gens=["x1*x3", "x1*x4", "x2*x3", "x2*x4"], field="gf:2")
    assert by_text.document().to_ideal() == J_1
    assert by_gens.document().to_ideal() == J_1
    assert by_gens.document().field == "gf:2"
    with pytest.raises(ValueError):
        IdealRequest()


def test_file_documents_remember_generator_positions():
    doc = parse_ideal("# header\nring n=3\ngens\nx1*x3\n  x2*x3\n")
    assert doc.positions == [(4, 1), (5, 3)]
    assert "positions" not in doc.model_dump()


def test_request_generators_are_reported_by_ordinal():
    doc = IdealRequest(n=2, gens=["x1", "x1*x3"]).document()
    with pytest.raises(IndexOutOfRange) as exc:
        doc.to_ideal()
    assert exc.value.line == 0
    assert exc.value.column == 4
    assert str(exc.value).startswith("generator 2 'x1*x3': variable index 3")
    assert "line" not in str(exc.value)
