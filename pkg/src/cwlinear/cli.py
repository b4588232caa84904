"""Command line front end.

Reads one input text (file argument or stdin) in the format described in
``cwlinear.textio`` and runs a single command on it.  Exit status is 0 for a
result, 2 for an inconclusive verdict or exhausted budget, 1 for errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .algebra import DEFAULT_PRIME, HomogeneousMatrix, MonomialOrder, Polynomial, PrimeField
from .budget import Budget, BudgetExceeded
from .classifiers import (ConstructionMismatch, classify_determinantal, classify_gorenstein,
                          classify_symmetric, compute_tr, determinantal_companion,
                          determinantal_stable_model,
                          gorenstein_companion, jozefiak_betti, symmetric_companion,
                          test_cwl_determinantal, test_cwl_symmetric)
from .criteria import INCONCLUSIVE, NO, YES, test_cwl
from .groebner import GradedIdeal, gin_field, gin_sample
from .monomial import MonomialIdeal, alexander_dual, complex_from_squarefree, stanley_reisner
from .resolutions import betti_table, minimal_resolution, regularity
from .textio import ParseError, format_polynomial, parse_document

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2
COMPLEX_CHARACTERISTICS = (2, 3, DEFAULT_PRIME)


class CliError(Exception):
    pass


# ---------------------------------------------------------------------------
# input handling


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _retarget(doc, p):
    """Move everything in the document to characteristic p."""
    field = PrimeField(p)
    if doc.ideal is not None:
        doc.ideal = [Polynomial(field, doc.nvars, g.as_dict()) for g in doc.ideal]
    if doc.matrix is not None:
        A = doc.matrix
        doc.matrix = HomogeneousMatrix([[Polynomial(field, A.nvars, e.as_dict()) for e in row]
                                        for row in A.entries],
                                       A.row_degrees, A.col_degrees, field, A.nvars)
    doc.field = field
    return doc


def load(args):
    text = _read(args.input)
    doc = parse_document(text, default_char=args.char or DEFAULT_PRIME)
    if args.char and doc.field.p != args.char:
        doc = _retarget(doc, args.char)
    return doc


def ideal_of(doc, p=None) -> GradedIdeal:
    field = PrimeField(p) if p else doc.field
    if doc.ideal is not None:
        if p and p != doc.field.p:
            return GradedIdeal([Polynomial(field, doc.nvars, g.as_dict()) for g in doc.ideal],
                               field, doc.nvars)
        return doc.graded_ideal()
    if doc.complex is not None:
        return stanley_reisner(doc.complex).to_ideal(field)
    raise CliError("input declares no ideal or simplicial complex")


def _budget(args):
    return Budget(args.budget) if args.budget else None


def _polys(gens, order=None):
    return [format_polynomial(g, order) if order else format_polynomial(g) for g in gens]


# ---------------------------------------------------------------------------
# commands; each returns (payload dict, human readable text, exit code)


def cmd_gb(args):
    I = ideal_of(load(args))
    gb = I.groebner_basis(args.order, _budget(args))
    order = MonomialOrder.parse(args.order)
    lines = _polys(gb, order)
    return {"order": str(order), "groebner_basis": lines}, "\n".join(lines), EXIT_OK


def cmd_initial(args):
    I = ideal_of(load(args))
    J = I.initial_ideal(args.order, _budget(args))
    payload = {"order": str(MonomialOrder.parse(args.order)), "initial_ideal": str(J),
               "generators": len(J), "stable": J.is_stable(),
               "strongly_stable": J.is_strongly_stable()}
    return payload, str(J), EXIT_OK


def cmd_gin(args):
    I = ideal_of(load(args))
    G, agreed, samples = gin_sample(I, args.order, args.seed, args.trials, _budget(args))
    payload = {"order": str(MonomialOrder.parse(args.order)), "gin": str(G), "generators": len(G),
               "agreed": agreed, "samples": [str(J) for J in samples], "seed": args.seed,
               "trials": args.trials, "coordinates_over": gin_field(I.p), "stable": G.is_stable()}
    text = str(G) + ("" if agreed else "\n(samples disagree; majority shown)")
    return payload, text, EXIT_OK


def cmd_betti(args):
    I = ideal_of(load(args))
    F = minimal_resolution(I, _budget(args))
    table = betti_table(F, args.module)
    payload = table.to_json()
    payload["regularity"] = regularity(F, "I")
    return payload, table.format(), EXIT_OK


def cmd_hilbert(args):
    I = ideal_of(load(args))
    num = list(I.hilbert_numerator(_budget(args)))
    values = I.hilbert_function(args.degree)
    text = f"numerator: {num}\nhilbert function: {values}"
    return {"numerator": num, "hilbert_function": values, "nvars": I.nvars}, text, EXIT_OK


def cmd_dim(args):
    I = ideal_of(load(args))
    dim, height = I.dimension(_budget(args)), I.height(_budget(args))
    return {"dimension": dim, "height": height}, f"dim {dim}\nheight {height}", EXIT_OK


def cmd_alexander_dual(args):
    doc = load(args)
    if doc.complex is not None:
        delta = doc.complex
    elif doc.ideal is not None:
        mono = []
        for g in doc.ideal:
            terms = g.as_dict()
            if len(terms) != 1:
                raise CliError("alexander-dual needs a monomial ideal or a complex")
            mono.append(next(iter(terms)))
        delta = complex_from_squarefree(MonomialIdeal(doc.nvars, mono))
    else:
        raise CliError("alexander-dual needs a simplicial complex or a squarefree monomial ideal")
    dual = alexander_dual(delta)
    I, I_dual = stanley_reisner(delta), stanley_reisner(dual)
    payload = {"facets": [sorted(f) for f in delta.facets], "dual_facets": [sorted(f) for f in dual.facets],
               "ideal": str(I), "dual_ideal": str(I_dual), "self_dual": I == I_dual}
    text = (f"dual facets: {' '.join(''.join(map(str, sorted(f))) for f in dual.facets)}\n"
            f"I_dual = {I_dual}\nself dual: {I == I_dual}")
    return payload, text, EXIT_OK


def _verdict_exit(decisions):
    return EXIT_INCONCLUSIVE if INCONCLUSIVE in decisions else EXIT_OK


def cmd_cwl_test(args):
    doc = load(args)
    chars = [None]
    if doc.complex is not None and args.char is None and not doc.char_given:
        chars = list(COMPLEX_CHARACTERISTICS)
    results = []
    for p in chars:
        I = ideal_of(doc, p)
        v = test_cwl(I, args.method, seed=args.seed, trials=args.trials, order=args.order,
                     budget=_budget(args))
        data = v.to_json()
        data["characteristic"] = I.p
        results.append(data)
    text = "\n".join(f"char {r['characteristic']}: {r['decision']} ({r['method']})" for r in results)
    payload = results[0] if len(results) == 1 else {"results": results}
    return payload, text, _verdict_exit([r["decision"] for r in results])


def _classify_determinantal(doc, args):
    if doc.matrix is not None:
        A, rp, cp = doc.matrix.normalized()
        degree_verdict = classify_determinantal(A)
        minors_verdict = test_cwl_determinantal(A, budget=_budget(args))
        payload = {"row_permutation": rp, "column_permutation": cp,
                   "degree_verdict": degree_verdict.to_json(), "minors_verdict": minors_verdict.to_json(),
                   "decision": degree_verdict.decision}
        if degree_verdict.decision != minors_verdict.decision:
            raise CliError("degree data and minors disagree: "
                           f"{degree_verdict.decision} vs {minors_verdict.decision}")
        return payload
    if doc.degree_matrix is not None:
        from .algebra import normalize_degree_matrix
        D, rp, cp = normalize_degree_matrix(doc.degree_matrix)
        v = classify_determinantal(D)
        return {"row_permutation": rp, "column_permutation": cp, "degree_verdict": v.to_json(),
                "decision": v.decision}
    raise CliError("classify determinantal needs a matrix or a degrees statement")


def _twice_d_of_matrix(A):
    return [A.formal_degree(i, i) for i in range(A.shape[0])]


def _classify_symmetric(doc, args):
    if doc.matrix is not None:
        A = doc.matrix
        degree_verdict = classify_symmetric(_twice_d_of_matrix(A))
        minors_verdict = test_cwl_symmetric(A, budget=_budget(args))
        if degree_verdict.decision != minors_verdict.decision:
            raise CliError("degree data and minors disagree: "
                           f"{degree_verdict.decision} vs {minors_verdict.decision}")
        return {"degree_verdict": degree_verdict.to_json(), "minors_verdict": minors_verdict.to_json(),
                "decision": degree_verdict.decision}
    if doc.degree_matrix is not None and doc.degree_matrix.twice_d is not None:
        v = classify_symmetric(doc.degree_matrix.twice_d)
        return {"degree_verdict": v.to_json(), "decision": v.decision}
    raise CliError("classify symmetric needs a symmetric matrix or a symdegrees statement")


def cmd_classify(args):
    doc = load(args)
    if args.family == "gorenstein":
        v = classify_gorenstein(ideal_of(doc), _budget(args))
        payload = {"degree_verdict": v.to_json(), "decision": v.decision}
    elif args.family == "determinantal":
        payload = _classify_determinantal(doc, args)
    else:
        payload = _classify_symmetric(doc, args)
    payload["family"] = args.family
    return payload, f"{args.family}: {payload['decision']}", _verdict_exit([payload["decision"]])


def cmd_companion(args):
    if args.family == "gorenstein":
        if args.c is None or args.e is None:
            raise CliError("companion gorenstein needs --c and --e")
        J = gorenstein_companion(args.c, args.e)
    elif args.family == "determinantal":
        doc = load(args)
        if doc.matrix is not None:
            D = doc.matrix.normalized()[0].degree_matrix()
        elif doc.degree_matrix is not None:
            from .algebra import normalize_degree_matrix
            D = normalize_degree_matrix(doc.degree_matrix)[0]
        else:
            raise CliError("companion determinantal needs a matrix or a degrees statement")
        J = determinantal_stable_model(D) if args.stable_model else determinantal_companion(D)
    else:
        if args.m is None or args.e is None:
            raise CliError("companion symmetric needs --m and --e")
        J = symmetric_companion(args.m, args.e)
    table = J.ek_betti().to_ideal()
    payload = {"family": args.family, "ideal": str(J), "strongly_stable": J.is_strongly_stable(),
               "betti": table.to_json()}
    return payload, f"{J}\n{table.format()}", EXIT_OK


# ---------------------------------------------------------------------------
# reproduction scenarios


def _scenario_minors_lex_gin():
    from .corpus import lex_gin_minors_2x4, minors_2x4
    I = minors_2x4()
    target = lex_gin_minors_2x4()
    hits = 0
    for seed in range(3):
        G, _, _ = gin_sample(I, "lex", seed=seed, trials=1)
        hits += G == target
    ok = hits == 3 and target.is_stable() and I.beta0() == 6 and len(target) == 11
    return ok, f"lex gin matched the 11-generator ideal for {hits}/3 seeds; beta0(I) = {I.beta0()}"


def _scenario_minors_revlex():
    from .corpus import minors_2x4
    I = minors_2x4()
    v = test_cwl(I, "gin", seed=0, trials=2)
    table = betti_table(minimal_resolution(I), "I")
    ok = v.decision == YES and table.totals() == (6, 8, 3) and table.is_linear(2)
    return ok, f"gin verdict {v.decision}; totals {table.totals()}"


def _scenario_rp2():
    from .corpus import rp2, rp2_complex, rp2_monomial
    decisions = {p: test_cwl(rp2(p), "direct").decision for p in COMPLEX_CHARACTERISTICS}
    self_dual = stanley_reisner(alexander_dual(rp2_complex())) == rp2_monomial()
    ok = decisions == {2: NO, 3: YES, DEFAULT_PRIME: YES} and self_dual
    return ok, f"verdicts {decisions}; self dual {self_dual}"


def _scenario_height_two():
    from .corpus import HEIGHT_TWO_MATRIX
    from .algebra import linearize
    A = parse_document(HEIGHT_TWO_MATRIX).matrix.normalized()[0]
    lin = linearize(A).maximal_minors()
    h = GradedIdeal(lin, A.field, A.nvars).height()
    v = test_cwl_determinantal(A)
    mono = MonomialIdeal(2, [(2, 0), (1, 1), (0, 3)])
    I = GradedIdeal(A.maximal_minors(), A.field, A.nvars)
    agree = mono.ek_betti() == betti_table(minimal_resolution(I), "S/I")
    ok = h == 1 and v.decision == YES and agree
    return ok, f"height of linear minors {h}; verdict {v.decision}; tables agree {agree}"


def _scenario_gorenstein():
    J = gorenstein_companion(3, 2)
    ok = J == MonomialIdeal.variables(3, [1, 2, 3], [1, 1, 2]) and J.is_strongly_stable()
    I = J.to_ideal(DEFAULT_PRIME)
    ok = ok and J.ek_betti() == betti_table(minimal_resolution(I), "S/I")
    return ok, f"companion {J}"


def _scenario_determinantal_companion():
    from .corpus import minors_2x4
    J = determinantal_companion([[1, 1], [1, 1], [1, 1], [1, 1]])
    ek = J.ek_betti().to_ideal()
    res = betti_table(minimal_resolution(minors_2x4()), "I")
    return ek == res, f"companion {J}; tables agree {ek == res}"


def _scenario_tr_table():
    rows = [(s,) + compute_tr(s) for s in range(1, 11)]
    ok = rows[1][1:] == (-1, 1) and all(t <= s - 3 for s, t, _ in rows if s >= 2)
    return ok, " ".join(f"s={s}:(t={t},r={r})" for s, t, r in rows)


def _scenario_symmetric_betti():
    table = jozefiak_betti(5, 2)
    gens = {j: table[0, j] for j in (4, 5, 6)}
    ok = gens == {4: 6, 5: 6, 6: 3} and table.totals() == (15, 24, 10)
    return ok, f"generator degrees {gens}; totals {table.totals()}"


def _scenario_symmetric_companion():
    outcomes = []
    for m, e in ((3, 1), (3, 2), (5, 2), (11, 2)):
        try:
            symmetric_companion(m, e)
            outcomes.append(f"m={m},e={e}:match")
        except ConstructionMismatch:
            outcomes.append(f"m={m},e={e}:mismatch")
    # informational: only the e = 1 branch is required to succeed
    return outcomes[0].endswith("match") and "mismatch" not in outcomes[0], " ".join(outcomes)


SCENARIOS = [
    ("minors-2x4-lex-gin", _scenario_minors_lex_gin),
    ("minors-2x4-revlex-gin", _scenario_minors_revlex),
    ("rp2-characteristic", _scenario_rp2),
    ("determinantal-height-two", _scenario_height_two),
    ("gorenstein-companion", _scenario_gorenstein),
    ("determinantal-companion", _scenario_determinantal_companion),
    ("tr-table", _scenario_tr_table),
    ("symmetric-betti-5-2", _scenario_symmetric_betti),
    ("symmetric-companion", _scenario_symmetric_companion),
]


def cmd_paper_examples(args):
    results = []
    for name, run in SCENARIOS:
        t0 = time.perf_counter()
        try:
            ok, detail = run()
        except Exception as exc:  # a crashing scenario is a failed scenario
            ok, detail = False, f"error: {exc}"
        results.append({"scenario": name, "ok": bool(ok), "detail": detail,
                        "seconds": round(time.perf_counter() - t0, 3)})
    text = "\n".join(f"{'PASS' if r['ok'] else 'FAIL'} {r['scenario']}: {r['detail']}" for r in results)
    code = EXIT_OK if all(r["ok"] for r in results) else EXIT_ERROR
    for r in results:
        r.pop("seconds")  # keep JSON output deterministic
    return {"scenarios": results}, text, code


# ---------------------------------------------------------------------------
# argument parsing


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=None, help="field characteristic (prime)")
    common.add_argument("--order", default="degrevlex", help="degrevlex or lex")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=3)
    common.add_argument("--budget", type=int, default=None, help="step budget for long computations")
    common.add_argument("--json", action="store_true", help="print JSON")

    parser = argparse.ArgumentParser(prog="cwlinear",
                                     description="Componentwise linearity toolkit over prime fields")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, takes_input=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if takes_input:
            p.add_argument("input", nargs="?", default="-", help="input file (default stdin)")
        p.set_defaults(func=func)
        return p

    add("gb", cmd_gb, "reduced Groebner basis")
    add("initial", cmd_initial, "initial ideal")
    add("gin", cmd_gin, "sampled generic initial ideal")
    p = add("betti", cmd_betti, "graded Betti numbers from the minimal resolution")
    p.add_argument("--module", choices=["S/I", "I"], default="S/I")
    p = add("hilbert", cmd_hilbert, "Hilbert series numerator and function")
    p.add_argument("--degree", type=int, default=10, help="last degree of the Hilbert function")
    add("dim", cmd_dim, "Krull dimension and height")
    add("alexander-dual", cmd_alexander_dual, "Alexander dual of a simplicial complex")
    p = add("cwl-test", cmd_cwl_test, "decide componentwise linearity")
    p.add_argument("--method", choices=["initial", "gin", "linear-part", "direct", "initial-components"],
                   default="direct")
    for name, func in (("classify", cmd_classify), ("companion", cmd_companion)):
        p = sub.add_parser(name, parents=[common], help=f"{name} for a family of ideals")
        p.add_argument("family", choices=["gorenstein", "determinantal", "symmetric"])
        p.add_argument("input", nargs="?", default="-")
        p.set_defaults(func=func)
        if name == "companion":
            p.add_argument("--c", type=int, help="height (gorenstein)")
            p.add_argument("--e", type=int, help="degree parameter e")
            p.add_argument("--m", type=int, help="matrix size (symmetric)")
            p.add_argument("--stable-model", action="store_true",
                           help="determinantal: use (x1..x_{c-1})^m + x_c^e (x1..xc)^(m-1), valid for every e")
    add("paper-examples", cmd_paper_examples, "run the reproduction scenarios", takes_input=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # argparse fills an optional positional early; accept the file after the flags too
    if len(extra) == 1 and not extra[0].startswith("-") and getattr(args, "input", None) == "-":
        args.input = extra[0]
    elif extra:
        parser.error("unrecognized arguments: " + " ".join(extra))
    try:
        payload, text, code = args.func(args)
    except BudgetExceeded as exc:
        payload, text, code = {"decision": INCONCLUSIVE, "reason": str(exc)}, f"inconclusive: {exc}", EXIT_INCONCLUSIVE
    except ConstructionMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        if args.json:
            print(json.dumps({"error": str(exc), "details": exc.details}, sort_keys=True, indent=2))
        return EXIT_ERROR
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (CliError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
