import json

import pytest

from cwlinear.cli import main
from cwlinear.corpus import HEIGHT_TWO_MATRIX, MINORS_2X4, MINORS_2X4_LEX_GIN, QUADRIC_MATRIX, SYMMETRIC_3

RP2_COMPLEX = "complex 6 facets: 123 124 135 146 156 236 245 256 345 346\n"


def run(capsys, tmp_path, argv, text=None):
    if text is not None:
        path = tmp_path / "input.txt"
        path.write_text(text)
        argv = argv + [str(path)]
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, tmp_path, argv, text=None):
    code, out, err = run(capsys, tmp_path, argv + ["--json"], text)
    return code, json.loads(out) if out.strip() else None


def test_gin_method_on_the_minors(capsys, tmp_path):
    code, data = run_json(capsys, tmp_path, ["cwl-test", "--method", "gin"], MINORS_2X4)
    assert code == 0 and data["decision"] == "yes"


def test_lex_gin_of_the_minors(capsys, tmp_path):
    code, data = run_json(capsys, tmp_path, ["gin", "--order", "lex", "--char", "31013"], MINORS_2X4)
    assert code == 0
    assert data["generators"] == 11
    assert sorted(data["gin"].strip("()").split(", ")) == sorted(MINORS_2X4_LEX_GIN.split(", "))


def test_json_is_byte_identical(capsys, tmp_path):
    outs = [run(capsys, tmp_path, ["gin", "--json", "--seed", "7"], MINORS_2X4)[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_complex_runs_three_characteristics(capsys, tmp_path):
    code, data = run_json(capsys, tmp_path, ["cwl-test"], RP2_COMPLEX)
    assert code == 0
    assert [(r["characteristic"], r["decision"]) for r in data["results"]] == \
        [(2, "no"), (3, "yes"), (31013, "yes")]


def test_alexander_dual_of_rp2(capsys, tmp_path):
    code, data = run_json(capsys, tmp_path, ["alexander-dual"], RP2_COMPLEX)
    assert code == 0 and data["self_dual"] is True


def test_betti_json_schema(capsys, tmp_path):
    code, data = run_json(capsys, tmp_path, ["betti", "--module", "I"], MINORS_2X4)
    assert code == 0 and data["module"] == "I"
    keys = [(e["i"], e["j"]) for e in data["entries"]]
    assert keys == sorted(keys)
    assert {(e["i"], e["j"]): e["beta"] for e in data["entries"]} == {(0, 2): 6, (1, 3): 8, (2, 4): 3}


def test_hilbert_and_dim(capsys, tmp_path):
    code, data = run_json(capsys, tmp_path, ["hilbert", "--degree", "3"], MINORS_2X4)
    assert code == 0 and data["numerator"] == [1, 0, -6, 8, -3]
    assert data["hilbert_function"][:3] == [1, 8, 30]
    code, data = run_json(capsys, tmp_path, ["dim"], MINORS_2X4)
    assert data == {"dimension": 5, "height": 3}


def test_gb_and_initial(capsys, tmp_path):
    code, data = run_json(capsys, tmp_path, ["gb"], "ring 31013 2\nideal x1^2, x1*x2 + x2^2\n")
    assert code == 0 and "x2^3" in data["groebner_basis"]
    code, data = run_json(capsys, tmp_path, ["initial"], "ring 31013 2\nideal x1^2, x1*x2 + x2^2\n")
    assert data["generators"] == 3


def test_classify_height_two_matrix(capsys, tmp_path):
    code, data = run_json(capsys, tmp_path, ["classify", "determinantal"], HEIGHT_TWO_MATRIX)
    assert code == 0 and data["decision"] == "yes"
    code, data = run_json(capsys, tmp_path, ["classify", "determinantal"], QUADRIC_MATRIX)
    assert code == 0 and data["decision"] == "no"


def test_classify_symmetric(capsys, tmp_path):
    code, data = run_json(capsys, tmp_path, ["classify", "symmetric"], SYMMETRIC_3)
    assert code == 0 and data["decision"] == "yes"
    code, data = run_json(capsys, tmp_path, ["classify", "symmetric"], "ring 31013 3\nsymdegrees 4: 0 0 1 1\n")
    assert data["decision"] == "no"


def test_classify_gorenstein(capsys, tmp_path):
    code, data = run_json(capsys, tmp_path, ["classify", "gorenstein"], "ring 31013 3\nideal x1, x2, x3^2\n")
    assert data["decision"] == "yes"
    code, data = run_json(capsys, tmp_path, ["classify", "gorenstein"], "ring 31013 3\nideal x1^2, x2^2\n")
    assert data["decision"] == "no"


def test_companions(capsys, tmp_path):
    code, data = run_json(capsys, tmp_path, ["companion", "gorenstein", "--c", "3", "--e", "2"])
    assert code == 0 and data["strongly_stable"]
    code, data = run_json(capsys, tmp_path, ["companion", "symmetric", "--m", "3", "--e", "1"])
    assert code == 0 and data["ideal"].count("x") > 0
    heavy = ("ring 31013 5\nmatrix 4 2 rowdeg 0 0 0 -1 coldeg 1 1 entries: "
             "x1 x2 / x2 x3 / x3 x4 / x5^2 x1^2\n")
    code, data = run_json(capsys, tmp_path, ["companion", "determinantal"], heavy)
    assert code == 1 and data["details"]["e"] == 2
    code, data = run_json(capsys, tmp_path, ["companion", "determinantal", "--stable-model"], heavy)
    assert code == 0 and data["betti"]["entries"][0] == {"i": 0, "j": 2, "beta": 3}


def test_symmetric_companion_mismatch_is_an_error(capsys, tmp_path):
    code, _, err = run(capsys, tmp_path, ["companion", "symmetric", "--m", "5", "--e", "2"])
    assert code == 1 and "error" in err


def test_budget_exhaustion_is_inconclusive(capsys, tmp_path):
    code, data = run_json(capsys, tmp_path, ["cwl-test", "--budget", "1"], MINORS_2X4)
    assert code == 2 and data["decision"] == "inconclusive"


@pytest.mark.parametrize("text", ["ring 31013 2\nideal x1^2 + x2\n", "ring 31013 2\nideal x1 +\n", ""])
def test_bad_input_exits_one(capsys, tmp_path, text):
    code, out, err = run(capsys, tmp_path, ["betti"], text)
    assert code == 1 and err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, tmp_path, ["betti", str(tmp_path / "nope.txt")])
    assert code == 1 and "error" in err


def test_paper_examples_pass(capsys, tmp_path):
    code, data = run_json(capsys, tmp_path, ["paper-examples"])
    assert code == 0
    assert all(s["ok"] for s in data["scenarios"])
    assert len(data["scenarios"]) >= 9
