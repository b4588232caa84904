import pytest
from hypothesis import given, strategies as st

from cwlinear.algebra import (DEGREVLEX, LEX, DegreeMatrix, HomogeneousMatrix, MonomialCodec,
                              MonomialOrder, Polynomial, PrimeField, linearize, mono_divides,
                              mono_lcm, monomials_of_degree, normalize_degree_matrix)
from cwlinear.textio import parse_document, parse_polynomial
from oracles import lex_key, monomials, revlex_key

F = PrimeField(31013)
exps = st.lists(st.integers(0, 5), min_size=3, max_size=3).map(tuple)


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(15)
    assert PrimeField(7).inv(3) * 3 % 7 == 1
    assert PrimeField(7).signed(6) == -1


@given(exps, exps)
def test_codec_compares_like_the_order(a, b):
    for order, key in ((DEGREVLEX, revlex_key), (LEX, lex_key)):
        codec = MonomialCodec(3, order)
        assert (codec.encode(a) < codec.encode(b)) == (key(a) < key(b))
        assert codec.decode(codec.encode(a)) == a


@given(exps, exps)
def test_codec_divisibility_and_lcm(a, b):
    codec = MonomialCodec(3, DEGREVLEX)
    pa, pb = codec.encode(a), codec.encode(b)
    assert codec.divides(pb, pa) == mono_divides(b, a)
    assert codec.decode(codec.lcm(pa, pb)) == mono_lcm(a, b)
    assert codec.decode(pa + pb) == tuple(x + y for x, y in zip(a, b))


def test_monomials_of_degree_matches_enumeration():
    for n in range(1, 4):
        for d in range(4):
            assert sorted(monomials_of_degree(n, d)) == sorted(monomials(n, d))


polys = st.dictionaries(exps, st.integers(-5, 5), max_size=4).map(lambda t: Polynomial(F, 3, t))


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - f).is_zero()
    assert (f * g) * h == f * (g * h)


@given(polys)
def test_pack_roundtrip(f):
    codec = MonomialCodec(3, LEX)
    assert Polynomial.unpack(F, codec, f.pack(codec)) == f


def test_polynomial_parse_and_degree():
    f = parse_polynomial("x1^2*x2 - 3x3^3", F, 3)
    assert f.is_homogeneous() and f.degree == 3
    assert f.leading_monomial(LEX) == (2, 1, 0)
    assert f.leading_monomial(DEGREVLEX) == (2, 1, 0)
    assert parse_polynomial("x1*x2 + x3^2", F, 3).leading_monomial(DEGREVLEX) == (1, 1, 0)


def test_degree_matrix_normalization_of_the_height_two_example():
    D = DegreeMatrix.from_degrees([0, 0, 1], [1, 2])
    N, rows, cols = normalize_degree_matrix(D)
    assert N == [[1, 0], [2, 1], [2, 1]]
    assert rows == [2, 0, 1] and cols == [1, 0]
    assert N.is_normalized() and not D.is_normalized()


def test_degree_matrix_rejects_inhomogeneous_grid():
    with pytest.raises(ValueError):
        DegreeMatrix([[1, 1], [1, 2], [2, 1]])


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=4),
       st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_normalization_is_a_permutation_with_monotone_result(g, f):
    D = DegreeMatrix.from_degrees(g, f)
    N, rows, cols = normalize_degree_matrix(D)
    assert N.is_normalized()
    assert sorted(rows) == list(range(len(g))) and sorted(cols) == list(range(len(f)))
    assert N == D.permuted(rows, cols)


def test_symmetric_degree_matrix():
    D = DegreeMatrix.symmetric([0, 2, 2])
    assert D == [[0, 1, 1], [1, 2, 2], [1, 2, 2]]
    with pytest.raises(ValueError):
        DegreeMatrix.symmetric([0, 1, 2])


def test_homogeneous_matrix_checks_entry_degrees():
    x = [Polynomial.variable(F, 2, i) for i in (1, 2)]
    with pytest.raises(ValueError):
        HomogeneousMatrix([[x[0], x[1] ** 2]], [0], [1, 1], F, 2)
    A = parse_document("ring 31013 2\nmatrix 3 2 rowdeg 0 0 1 coldeg 1 2 entries: x2 0 / -x1 x2^2 / 0 -x1").matrix
    An = A.normalized()[0]
    assert [[str(e) for e in row] for row in An.entries] == [["-x1", "0"], ["0", "x2"], ["x2^2", "-x1"]]
    lin = linearize(An)
    assert sorted(str(m) for m in lin.maximal_minors()) == sorted(["x1^2", "-x1*x2"])
    assert A.transpose().transpose() == A


def test_order_parsing():
    assert MonomialOrder.parse("lex") is LEX
    assert MonomialOrder.parse("grevlex") is DEGREVLEX
    with pytest.raises(ValueError):
        MonomialOrder.parse("elimination")
