import pytest
from hypothesis import given, strategies as st

from cwlinear.algebra import Polynomial, PrimeField
from cwlinear.corpus import (HEIGHT_TWO_MATRIX, MINORS_2X4, QUADRIC_MATRIX, RP2_IDEAL, SYMMETRIC_3,
                             ideal_text)
from cwlinear.textio import ParseError, format_document, format_polynomial, parse_document, parse_polynomial

F = PrimeField(31013)

CORPUS = [
    MINORS_2X4,
    HEIGHT_TWO_MATRIX,
    QUADRIC_MATRIX,
    SYMMETRIC_3,
    ideal_text(RP2_IDEAL, 2, 6),
    "complex 6 facets: 123 124 135 146 156 236 245 256 345 346\n",
    "complex 11 facets: 1,2,11 3,10\n",
    "ring 31013 4\ndegrees 3 2: 1 0 / 2 1 / 2 1\n",
    "ring 31013 3\nsymdegrees 3: 1/2 1/2 1/2\n",
    "ring 3 3\nideal x1^2 - x2*x3, 2*x1*x2\n",
]


def reparse(text):
    doc = parse_document(text)
    return doc, parse_document(format_document(doc))


@pytest.mark.parametrize("text", CORPUS)
def test_round_trip(text):
    doc, again = reparse(text)
    assert format_document(again) == format_document(doc)
    assert again.field.p == doc.field.p and again.nvars == doc.nvars
    if doc.ideal is not None:
        assert [g.as_dict() for g in again.ideal] == [g.as_dict() for g in doc.ideal]
    if doc.matrix is not None:
        assert again.matrix.row_degrees == doc.matrix.row_degrees
        assert [[e.as_dict() for e in r] for r in again.matrix.entries] == \
            [[e.as_dict() for e in r] for r in doc.matrix.entries]
    if doc.complex is not None:
        assert sorted(map(sorted, again.complex.facets)) == sorted(map(sorted, doc.complex.facets))
    if doc.degree_matrix is not None:
        assert again.degree_matrix.rows == doc.degree_matrix.rows


def test_minors_document():
    doc = parse_document(MINORS_2X4)
    assert doc.field.p == 31013 and doc.nvars == 8 and len(doc.ideal) == 6


def test_rp2_complex_has_ten_triangles():
    doc = parse_document(CORPUS[5])
    assert len(doc.complex.facets) == 10 and doc.nvars == 6


def test_height_two_matrix_entries():
    A = parse_document(HEIGHT_TWO_MATRIX).matrix
    assert A.shape == (3, 2)
    assert format_polynomial(A.entries[1][1]) == "x2^2"
    assert A.entries[0][1].is_zero()


terms = st.dictionaries(st.tuples(*[st.integers(0, 3)] * 3), st.integers(1, 31012), min_size=1, max_size=5)


@given(terms)
def test_polynomial_print_parse(t):
    f = Polynomial(F, 3, t)
    assert parse_polynomial(format_polynomial(f), F, 3).as_dict() == f.as_dict()


def test_implicit_products_and_parentheses():
    f = parse_polynomial("2x1x2 - (x1 + x3)^2", F, 3)
    g = parse_polynomial("-x1^2 - 2*x1*x3 - x3^2 + 2*x1*x2", F, 3)
    assert f.as_dict() == g.as_dict()


@pytest.mark.parametrize("text, line", [
    ("ring 31013 2\nideal x1^2 + x2", 2),
    ("ring 31013 2\nideal x1 +* x2", 2),
    ("ring 31013 2\nfrobnicate x1", 2),
    ("ring 12 2\nideal x1", 1),
    ("ring 31013 2\nmatrix 2 2 rowdeg 0 0 coldeg 1 1 entries: x1 x2 / x2", 2),
    ("ring 31013 2\nmatrix 2 1 rowdeg 0 0 coldeg 1 entries: x1 / x2^2", 2),
    ("ring 31013 3\nsymdegrees 3: 1/3 1 1", 2),
    ("ring 31013 3\ndegrees 2 2: 1 0 / 0 0", 2),
])
def test_errors_carry_positions(text, line):
    with pytest.raises(ParseError) as info:
        parse_document(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_syntax_error_has_a_column():
    with pytest.raises(ParseError) as info:
        parse_document("ring 31013 2\nideal x1, x2 + + x1")
    assert info.value.col is not None and info.value.col > 6


def test_variable_out_of_range():
    with pytest.raises(ParseError):
        parse_document("ring 31013 2\nideal x3")
