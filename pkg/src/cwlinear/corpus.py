"""Named example inputs shared by the command line scenarios and the tests."""
from __future__ import annotations

from .groebner import GradedIdeal
from .monomial import MonomialIdeal, complex_from_squarefree
from .textio import parse_document

# 2-minors of the generic 2 x 4 matrix [[x1 x2 x3 x4], [x5 x6 x7 x8]]
MINORS_2X4 = """ring 31013 8
ideal x1*x6-x2*x5, x1*x7-x3*x5, x1*x8-x4*x5,
      x2*x7-x3*x6, x2*x8-x4*x6, x3*x8-x4*x7
"""

# its lex initial ideal after a random change of coordinates
MINORS_2X4_LEX_GIN = ("x1^2, x1*x2, x1*x3, x1*x4, x1*x5, x2^2, x2*x3^2, x2*x3*x4, "
                      "x2*x3*x5, x2*x4^3, x3^4")

# Stanley-Reisner ideal of the six-vertex triangulation of the real projective plane
RP2_IDEAL = ("x1*x2*x3, x1*x2*x4, x1*x3*x5, x1*x4*x6, x1*x5*x6, x2*x3*x6, x2*x4*x5, "
             "x2*x5*x6, x3*x4*x5, x3*x4*x6")

# (x^2, xy, y^3) as maximal minors of a 3 x 2 matrix, x = x1, y = x2
HEIGHT_TWO_MATRIX = "ring 31013 2\nmatrix 3 2 rowdeg 0 0 1 coldeg 1 2 entries: x2 0 / -x1 x2^2 / 0 -x1\n"

# a 3 x 2 matrix with quadric entries on the diagonal: height two, not componentwise linear
QUADRIC_MATRIX = ("ring 31013 3\nmatrix 3 2 rowdeg 0 0 0 coldeg 2 2 entries: "
                  "x1^2 x2^2 / x2^2 x3^2 / x3^2 x1^2\n")

# symmetric 3 x 3 matrix with 2d = (0, 2, 2)
SYMMETRIC_3 = ("ring 31013 3\nmatrix 3 3 rowdeg 0 -1 -1 coldeg 0 1 1 entries: "
               "0 x1 x2 / x1 x3^2 0 / x2 0 x3^2\n")


def ideal_text(gens: str, p: int, n: int) -> str:
    return f"ring {p} {n}\nideal {gens}\n"


def minors_2x4(p: int = 31013):
    return parse_document(MINORS_2X4.replace("ring 31013", f"ring {p}")).graded_ideal()


def lex_gin_minors_2x4() -> MonomialIdeal:
    doc = parse_document(ideal_text(MINORS_2X4_LEX_GIN, 31013, 8))
    return MonomialIdeal(8, [next(iter(g.as_dict())) for g in doc.ideal])


def rp2_monomial() -> MonomialIdeal:
    doc = parse_document(ideal_text(RP2_IDEAL, 31013, 6))
    return MonomialIdeal(6, [next(iter(g.as_dict())) for g in doc.ideal])


def rp2_complex():
    return complex_from_squarefree(rp2_monomial())


def rp2(p: int):
    return parse_document(ideal_text(RP2_IDEAL, p, 6)).graded_ideal()


def method_corpus():
    """(name, ideal) pairs used to compare the decision methods."""
    docs = [
        ("minors-2x4", MINORS_2X4),
        ("rp2-char-2", ideal_text(RP2_IDEAL, 2, 6)),
        ("rp2-char-3", ideal_text(RP2_IDEAL, 3, 6)),
        ("rp2-char-31013", ideal_text(RP2_IDEAL, 31013, 6)),
        ("x2-xy-y3", ideal_text("x1^2, x1*x2, x2^3", 31013, 2)),
        ("gorenstein-cwl", ideal_text("x1, x2, x3^2", 31013, 3)),
        ("gorenstein-not-cwl", ideal_text("x1^2, x2^2", 31013, 3)),
        ("x1sq-x2", ideal_text("x1^2, x2", 31013, 2)),
        ("koszul-tail", ideal_text("x2, x3, x4", 31013, 4)),
        ("maximal-squared", ideal_text("x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2", 31013, 3)),
    ]
    out = [(name, parse_document(text).graded_ideal()) for name, text in docs]
    for name, text, k in (("quadric-determinantal", QUADRIC_MATRIX, 2), ("symmetric-3", SYMMETRIC_3, 2)):
        doc = parse_document(text)
        out.append((name, GradedIdeal(doc.matrix.minors(k), doc.field, doc.nvars)))
    return out
