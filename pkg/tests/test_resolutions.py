import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from cwlinear.algebra import Polynomial, PrimeField
from cwlinear.corpus import minors_2x4, rp2
from cwlinear.groebner import GradedIdeal
from cwlinear.resolutions import (betti_table, is_acyclic, linear_part, minimal_resolution,
                                  regularity)
from cwlinear.textio import parse_document
from oracles import koszul_betti, monomials


def ideal(text, n, p=31013):
    return parse_document(f"ring {p} {n}\nideal {text}").graded_ideal()


@st.composite
def small_ideals(draw):
    rng = random.Random(draw(st.integers(0, 10 ** 6)))
    n = draw(st.integers(2, 3))
    p = draw(st.sampled_from([2, 3, 31013]))
    F = PrimeField(p)
    gens = []
    for _ in range(draw(st.integers(1, 3))):
        d = rng.randint(1, 3)
        terms = {rng.choice(monomials(n, d)): rng.randrange(1, p) for _ in range(rng.randint(1, 3))}
        g = Polynomial(F, n, terms)
        if g:
            gens.append(g)
    return GradedIdeal(gens or [Polynomial.variable(F, n, 1)], F, n)


@given(small_ideals())
def test_betti_numbers_agree_with_koszul_homology(I):
    F = minimal_resolution(I)
    table = betti_table(F)
    top = max(j for _, j in table.entries) + 1
    assert koszul_betti([g.as_dict() for g in I.generators], I.nvars, I.p, top) == table.entries


@given(small_ideals())
def test_resolution_is_a_minimal_complex(I):
    F = minimal_resolution(I)
    assert F.squares_to_zero() and F.is_minimal()
    assert F.length <= I.nvars
    assert F.rank(1) == I.beta0()


@given(small_ideals())
def test_euler_characteristic_gives_the_hilbert_numerator(I):
    table = betti_table(minimal_resolution(I))
    num = {}
    for (i, j), b in table.items():
        num[j] = num.get(j, 0) + (-1) ** i * b
    expected = list(I.hilbert_numerator())
    got = [num.get(j, 0) for j in range(max(len(expected), max(num) + 1))]
    assert got[:len(expected)] == expected and not any(got[len(expected):])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_koszul_complex_on_variables(n):
    I = ideal(", ".join(f"x{i}" for i in range(1, n + 1)), n)
    table = betti_table(minimal_resolution(I))
    assert table.entries == {(i, i): comb(n, i) for i in range(n + 1)}


def test_eagon_northcott_for_the_minors():
    table = betti_table(minimal_resolution(minors_2x4()), "I")
    assert table.entries == {(0, 2): 6, (1, 3): 8, (2, 4): 3}
    assert regularity(minimal_resolution(minors_2x4())) == 2


@pytest.mark.parametrize("p, extra", [(2, True), (3, False), (31013, False)])
def test_rp2_resolution_depends_on_characteristic(p, extra):
    table = betti_table(minimal_resolution(rp2(p)), "I")
    assert table[(0, 3)] == 10 and table[(1, 4)] == 15 and table[(2, 5)] == 6
    assert (table[(2, 6)] == 1) == extra
    assert (table[(3, 6)] == 1) == extra


def test_linear_part_acyclicity():
    F = minimal_resolution(ideal("x1^2, x1*x2, x2^3", 2)).drop_first()
    assert is_acyclic(linear_part(F))
    G = minimal_resolution(ideal("x1^2, x2^2", 3)).drop_first()
    assert not is_acyclic(linear_part(G))


def test_zero_ideal_is_rejected():
    with pytest.raises(ValueError):
        minimal_resolution(GradedIdeal([], 31013, 2))
