"""The ten end-to-end acceptance checks, each with its time limit.

Every check prints one PASS/FAIL line to the terminal (also without -s).
"""
import random
import time
from itertools import combinations

import pytest

from cwlinear.algebra import PrimeField, linearize
from cwlinear.classifiers import (classify_gorenstein, compute_tr, jozefiak_betti,
                                  test_cwl_determinantal)
from cwlinear.corpus import (HEIGHT_TWO_MATRIX, lex_gin_minors_2x4, method_corpus, minors_2x4,
                             rp2, rp2_complex)
from cwlinear.criteria import NO, YES, test_cwl, test_cwl_direct, test_cwl_gin, test_cwl_linear_part
from cwlinear.groebner import GradedIdeal, gin_sample
from cwlinear.monomial import MonomialIdeal, alexander_dual, stanley_reisner
from cwlinear.resolutions import betti_table, minimal_resolution
from cwlinear.textio import parse_document

from oracles import random_stable_ideal

F = PrimeField(31013)


@pytest.fixture
def report(capsys, request):
    def emit(number, ok, detail, elapsed, limit):
        ok = ok and elapsed < limit
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail} "
                  f"[{elapsed:.2f}s, limit {limit}s]")
        assert ok, detail
    return emit


def resolve(I, module="S/I"):
    return betti_table(minimal_resolution(I), module)


def test_criterion_01_lex_gin_of_the_minors(report):
    I = minors_2x4()
    target = lex_gin_minors_2x4()
    hits, slowest = 0, 0.0
    for seed in range(10):
        t0 = time.perf_counter()
        G, _, _ = gin_sample(I, "lex", seed=seed, trials=1)
        slowest = max(slowest, time.perf_counter() - t0)
        hits += G == target
    ok = hits >= 9 and len(target) == 11 and I.beta0() == 6 and target.is_stable()
    report(1, ok, f"{hits}/10 seeds give the 11-generator lex gin; beta0(I) = {I.beta0()}",
           slowest, 10)


def test_criterion_02_revlex_gin_of_the_minors(report):
    t0 = time.perf_counter()
    I = minors_2x4()
    v = test_cwl_gin(I)
    G, _, _ = gin_sample(I, "degrevlex", seed=0, trials=1)
    table = resolve(I, "I")
    gin_table = resolve(G.to_ideal(F), "I")
    ok = (v.decision == YES and table == gin_table and table.totals() == (6, 8, 3)
          and table.is_linear(2) and G.ek_betti() == gin_table)
    report(2, ok, f"verdict {v.decision}; totals {table.totals()} vs {gin_table.totals()}",
           time.perf_counter() - t0, 30)


def test_criterion_03_projective_plane(report):
    t0 = time.perf_counter()
    verdicts = {p: test_cwl(rp2(p)).decision for p in (2, 3, 31013)}
    delta = rp2_complex()
    self_dual = stanley_reisner(delta) == stanley_reisner(alexander_dual(delta))
    ok = verdicts == {2: NO, 3: YES, 31013: YES} and self_dual
    report(3, ok, f"verdicts {verdicts}; self dual {self_dual}", time.perf_counter() - t0, 120)


def test_criterion_04_height_two_matrix(report):
    t0 = time.perf_counter()
    A = parse_document(HEIGHT_TWO_MATRIX).matrix.normalized()[0]
    h = GradedIdeal(linearize(A).maximal_minors(), A.field, A.nvars).height()
    v = test_cwl_determinantal(A, c=2)
    J = MonomialIdeal(2, [(2, 0), (1, 1), (0, 3)])
    ek = J.ek_betti().to_ideal()
    engine = resolve(GradedIdeal(A.maximal_minors(), A.field, A.nvars), "I")
    ok = (h == 1 and v.decision == YES and ek == engine and ek.totals() == (3, 2)
          and ek.shifts(0) == [2, 2, 3] and ek.shifts(1) == [3, 4])
    report(4, ok, f"height {h}; verdict {v.decision}; shifts {ek.shifts(0)}; {ek.shifts(1)}",
           time.perf_counter() - t0, 5)


def test_criterion_05_gorenstein(report):
    t0 = time.perf_counter()
    cases = {"x1, x2, x3^2": YES, "x1^2, x2^2": NO}
    seen = {}
    for gens, want in cases.items():
        I = parse_document(f"ring 31013 3\nideal {gens}").graded_ideal()
        got = (classify_gorenstein(I).decision, test_cwl_gin(I).decision,
               test_cwl_linear_part(I).decision)
        seen[gens] = got
    ok = all(seen[g] == (w, w, w) for g, w in cases.items())
    report(5, ok, f"{seen}", time.perf_counter() - t0, 30)


def test_criterion_06_companion_of_the_minors(report):
    t0 = time.perf_counter()
    ek = MonomialIdeal.maximal(3, 2).ek_betti()
    engine = resolve(minors_2x4())
    report(6, ek == engine, f"EK {ek.totals()} vs engine {engine.totals()}", time.perf_counter() - t0, 30)


def test_criterion_07_tr_table(report):
    t0 = time.perf_counter()
    bad = []
    for s in range(1, 101):
        t, r = compute_tr(s)
        target = s * (s - 1) // 2
        if r + sum(range(2 * s - t, 2 * s + 1)) != target:
            bad.append((s, "identity"))
        if t < -1 or not 0 <= r <= 2 * s - 2 - t:
            bad.append((s, "bounds"))
        if s >= 2 and t > s - 3:
            bad.append((s, "t <= s-3"))
        if s <= 30:
            sols = [(tt, rr) for tt in range(-1, 2 * s) for rr in range(0, 2 * s - 1 - tt)
                    if rr + sum(range(2 * s - tt, 2 * s + 1)) == target]
            if sols != [(t, r)]:
                bad.append((s, "uniqueness"))
    ok = not bad and compute_tr(2) == (-1, 1)
    report(7, ok, f"violations {bad[:5]}", time.perf_counter() - t0, 1)


def test_criterion_08_jozefiak_linear_case(report):
    t0 = time.perf_counter()
    results = {m: jozefiak_betti(m, 1) == MonomialIdeal.maximal(3, m - 1).ek_betti().to_ideal()
               for m in (3, 5, 7)}
    report(8, all(results.values()), f"{results}", time.perf_counter() - t0, 5)


def test_criterion_09_ek_against_the_engine(report):
    t0 = time.perf_counter()
    rng = random.Random(2024)
    agree = 0
    for _ in range(20):
        J = random_stable_ideal(rng, n_max=4, deg_max=4)
        agree += J.ek_betti() == resolve(J.to_ideal(F))
    report(9, agree == 20, f"{agree}/20 stable ideals agree", time.perf_counter() - t0, 120)


def test_criterion_10_methods_agree(report):
    t0 = time.perf_counter()
    corpus = method_corpus()
    disagree, not_dominated = [], []
    for name, I in corpus:
        verdicts = {test_cwl_gin(I).decision, test_cwl_linear_part(I).decision,
                    test_cwl_direct(I).decision}
        if len(verdicts) != 1 or not verdicts <= {YES, NO}:
            disagree.append((name, verdicts))
        field = PrimeField(I.p)
        if not resolve(I).dominated_by(resolve(I.initial_ideal().to_ideal(field))):
            not_dominated.append(name)
    ok = len(corpus) == 12 and not disagree and not not_dominated
    report(10, ok, f"{len(corpus)} ideals; disagreements {disagree}; semicontinuity failures {not_dominated}",
           time.perf_counter() - t0, float("inf"))
