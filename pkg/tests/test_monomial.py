import random

import pytest
from hypothesis import given, strategies as st

from cwlinear.betti import BettiTable
from cwlinear.corpus import rp2_complex, rp2_monomial
from cwlinear.monomial import (MonomialIdeal, NotStableError, SimplicialComplex, alexander_dual,
                               complex_from_squarefree, eliahou_kervaire, stanley_reisner)
from cwlinear.resolutions import resolution_betti
from oracles import brute_force_stable, monomials, random_stable_ideal

mono3 = st.lists(st.integers(0, 3), min_size=3, max_size=3).map(tuple)
ideals3 = st.lists(mono3, min_size=1, max_size=4).map(lambda g: MonomialIdeal(3, g))


@given(ideals3)
def test_stability_predicates_match_brute_force(I):
    if I.degrees() == [0]:
        return
    assert I.is_stable() == brute_force_stable(I)
    assert I.is_strongly_stable() == brute_force_stable(I, strong=True)


@given(ideals3, st.integers(0, 6))
def test_hilbert_function_counts_standard_monomials(I, d):
    assert I.hilbert_function(d) == sum(1 for m in monomials(3, d) if m not in I)


@given(ideals3)
def test_dimension_by_coordinate_subspaces(I):
    import itertools
    if I.degrees() == [0]:
        assert I.dimension() == -1
        return
    best = 0
    for k in range(4):
        for ys in itertools.combinations(range(3), k):
            if all(any(g[i] and i not in ys for i in range(3)) for g in I):
                best = max(best, k)
    assert I.dimension() == best


@given(st.integers(0, 10 ** 6))
def test_eliahou_kervaire_matches_resolution(seed):
    J = random_stable_ideal(random.Random(seed), n_max=4, deg_max=3)
    assert J.ek_betti() == resolution_betti(J.to_ideal(31013))


def test_eliahou_kervaire_small_cases():
    J = MonomialIdeal(2, [(2, 0), (1, 1), (0, 3)])
    t = J.ek_betti().to_ideal()
    assert t.totals() == (3, 2)
    assert t.shifts(0) == [2, 2, 3] and t.shifts(1) == [3, 4]
    square = MonomialIdeal.maximal(3, 2)
    assert square.ek_betti().to_ideal().totals() == (6, 8, 3)
    assert eliahou_kervaire(square.gens) == square.ek_betti()


def test_ek_requires_stability():
    with pytest.raises(NotStableError):
        MonomialIdeal(2, [(0, 1)]).ek_betti()


def test_ideal_arithmetic():
    m = MonomialIdeal.maximal(3)
    assert m ** 2 == MonomialIdeal.maximal(3, 2)
    assert (m ** 0).degrees() == [0]
    I = MonomialIdeal(3, [(2, 0, 0), (1, 1, 0)])
    assert I.quotient((1, 0, 0)) == MonomialIdeal(3, [(1, 0, 0), (0, 1, 0)])
    assert I.truncation(3) == I * m
    assert I.component(2) == I
    assert len(MonomialIdeal(2, [(1, 0), (2, 0), (1, 1)])) == 1


def test_rp2_is_self_dual():
    delta = rp2_complex()
    assert stanley_reisner(delta) == rp2_monomial()
    assert alexander_dual(delta) == delta
    assert stanley_reisner(alexander_dual(delta)) == rp2_monomial()
    assert len(delta.facets) == 10 and all(len(f) == 3 for f in delta.facets)


@given(st.sets(st.frozensets(st.integers(1, 4), min_size=1), min_size=1, max_size=5))
def test_alexander_duality_is_an_involution(facets):
    delta = SimplicialComplex(4, facets)
    assert alexander_dual(alexander_dual(delta)) == delta
    I = stanley_reisner(delta)
    if len(I):
        assert complex_from_squarefree(I) == delta


def test_betti_table_conversions_and_json():
    t = BettiTable({(0, 0): 1, (1, 2): 3, (2, 3): 2})
    assert t.to_ideal().to_quotient() == t
    assert BettiTable.from_json(t.to_json()) == t
    assert t.regularity() == 1 and t.to_ideal().regularity() == 2
    assert t.to_ideal().is_linear(2)
    with pytest.raises(ValueError):
        BettiTable({(0, 0): -1})
