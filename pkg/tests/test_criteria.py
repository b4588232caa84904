import pytest

from cwlinear.budget import Budget
from cwlinear.corpus import method_corpus, minors_2x4, rp2
from cwlinear.criteria import (INCONCLUSIVE, NO, YES, has_linear_resolution, test_cwl,
                               test_cwl_direct, test_cwl_gin, test_cwl_initial,
                               test_cwl_initial_components, test_cwl_linear_part)
from cwlinear.textio import parse_document

# frozen verdicts, confirmed by three independent methods
EXPECTED = {
    "minors-2x4": YES, "rp2-char-2": NO, "rp2-char-3": YES, "rp2-char-31013": YES,
    "x2-xy-y3": YES, "gorenstein-cwl": YES, "gorenstein-not-cwl": NO, "x1sq-x2": YES,
    "koszul-tail": YES, "maximal-squared": YES, "quadric-determinantal": NO, "symmetric-3": YES,
}
CORPUS = method_corpus()


def ideal(text, n, p=31013):
    return parse_document(f"ring {p} {n}\nideal {text}").graded_ideal()


@pytest.mark.parametrize("name, I", CORPUS, ids=[c[0] for c in CORPUS])
@pytest.mark.parametrize("method", ["gin", "linear-part", "direct"])
def test_methods_reach_the_expected_verdict(name, I, method):
    assert test_cwl(I, method).decision == EXPECTED[name]


def test_initial_method_is_sound():
    for name, I in CORPUS:
        v = test_cwl_initial(I)
        assert v.decision in (EXPECTED[name], INCONCLUSIVE)
    assert test_cwl_initial(ideal("x1^2, x1*x2, x2^3", 2)).decision == YES
    # (x2, x3, x4) is its own initial ideal but not stable
    assert test_cwl_initial(ideal("x2, x3, x4", 4)).decision == INCONCLUSIVE


def test_initial_components_is_marked_experimental():
    v = test_cwl_initial_components(ideal("x1^2, x1*x2, x2^3", 2))
    assert v.witness["experimental"] and v.decision == YES


def test_gin_verdict_is_seeded_and_reports_its_field():
    a = test_cwl_gin(rp2(3), seed=5, trials=2)
    b = test_cwl_gin(rp2(3), seed=5, trials=2)
    assert a.to_json() == b.to_json()
    assert a.probabilistic and a.seed == 5
    assert a.witness["coordinates_over"].startswith("GF(3^")


def test_gin_full_tables_on_the_minors():
    v = test_cwl_gin(minors_2x4(), seed=0, trials=2, full_tables=True)
    assert v.decision == YES and v.witness["tables_agree"]


def test_budget_exhaustion_is_inconclusive():
    for method in ("gin", "linear-part", "direct"):
        assert test_cwl(minors_2x4(), method, budget=Budget(3)).decision == INCONCLUSIVE


def test_direct_method_reports_the_failing_degree():
    v = test_cwl_direct(ideal("x1^2, x2^2", 3))
    assert v.decision == NO and v.witness["failing_degree"] == 2


def test_linear_part_shortcut_and_witness():
    v = test_cwl_linear_part(minors_2x4())
    assert v.decision == YES and v.witness["ranks"] == [6, 8, 3]


def test_has_linear_resolution():
    assert has_linear_resolution(minors_2x4(), 2)
    assert not has_linear_resolution(ideal("x1^2, x1*x2, x2^3", 2))
    with pytest.raises(ValueError):
        has_linear_resolution(minors_2x4(), 3)


def test_unknown_method():
    with pytest.raises(ValueError):
        test_cwl(minors_2x4(), "oracle")
