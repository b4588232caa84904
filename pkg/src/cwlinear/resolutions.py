"""Minimal graded free resolutions, Betti tables, linear parts and acyclicity.

Resolutions are built as Schreyer frames: the syzygies read off from the
S-pairs of a Groebner basis are a Groebner basis of the syzygy module for the
induced (Schreyer) order, so the construction iterates without further
Buchberger runs.  Module terms x^a e_u are packed into integers

    key(x^a e_u) = base_u + P(a) * M

where P is the packed degrevlex monomial, so comparing keys is comparing
terms in the Schreyer order and multiplying by x^c adds P(c) * M.  Sorting
the elements of each level lex-descending inside a component keeps the frame
length at most n.  The frame is then minimized by cancelling unit entries.
"""
from __future__ import annotations

import itertools
import random
from math import comb

from .algebra import (DEGREVLEX, HomogeneousMatrix, MonomialCodec, Polynomial, PrimeField,
                      linearize)
from .betti import BettiTable
from .budget import BudgetExceeded, as_budget
from .linalg import evaluated_rank, padd_scaled, pmul, polynomial_rank


class ResolutionError(RuntimeError):
    pass


class UndecidedError(RuntimeError):
    """A check that could not be completed within its resource limits."""


# ---------------------------------------------------------------------------
# Schreyer frame


class _FreeModule:
    """Key bookkeeping for one free module of the frame."""

    def __init__(self, base, M, R, degs):
        self.base = base
        self.M = M
        self.R = R
        self.degs = degs
        self.t = len(base)

    def split(self, K):
        """(basis index, packed monomial) of the term with key K."""
        if self.R == 1:
            return 0, K
        u = self.t - K % self.R
        return u, (K - self.base[u]) // self.M


def _lex_desc(codec, P):
    return tuple(-e for e in codec.decode(P))


def schreyer_frame(gb, codec: MonomialCodec, p: int, budget=None):
    """Free resolution of S/I from a Groebner basis of I (packed, degrevlex).

    Returns (shifts per index, differentials) where differential k is a
    dict {column u: {row c: packed polynomial}} describing F_k -> F_{k-1}.
    """
    budget = as_budget(budget)
    prev = _FreeModule([0], 1, 1, [0])
    elems = [dict(g) for g in gb]
    shifts = [[0]]
    diffs = []
    while elems:
        leads = [max(h) for h in elems]
        info = [prev.split(L) for L in leads]
        order = sorted(range(len(elems)), key=lambda i: (info[i][0], _lex_desc(codec, info[i][1])))
        elems = [elems[i] for i in order]
        leads = [leads[i] for i in order]
        info = [info[i] for i in order]
        t = len(elems)
        R = t + 1
        base = [leads[u] * R + (t - u) for u in range(t)]
        degs = [prev.degs[c] + codec.degree(P) for c, P in info]
        mod = _FreeModule(base, prev.M * R, R, degs)
        shifts.append(degs)
        cols = {}
        for u, h in enumerate(elems):
            col = {}
            for K, c in h.items():
                r, P = prev.split(K)
                col.setdefault(r, {})[P] = c
            cols[u] = col
        diffs.append(cols)

        # reducers grouped by component of F_{k-1}
        by_comp = {}
        for u, (c, P) in enumerate(info):
            by_comp.setdefault(c, []).append(u)
        lead_fields = [codec.fields(P) for _, P in info]
        guard = codec.guard

        def reduce_to_syzygy(S):
            syz = {}
            while S:
                K = max(S)
                c, P = prev.split(K)
                fP = codec.fields(P) | guard
                for l in by_comp.get(c, ()):
                    if (fP - lead_fields[l]) & guard == guard:
                        break
                else:
                    raise ResolutionError("S-vector does not reduce to zero; input is not a Groebner basis")
                budget.tick()
                coef = S[K]
                shift = P - info[l][1]
                padd_scaled(S, elems[l], p - coef, shift * prev.M, p)
                key = base[l] + shift * mod.M
                syz[key] = (syz.get(key, 0) - coef) % p
            return {k: v for k, v in syz.items() if v}

        new_elems = []
        for c, idxs in sorted(by_comp.items()):
            for a, i in enumerate(idxs):
                Pi = info[i][1]
                cands = []
                for j in idxs[a + 1:]:
                    m = codec.lcm(Pi, info[j][1]) - Pi
                    cands.append((m, j))
                kept = []
                for m, j in cands:
                    if any(codec.divides(m2, m) for m2, _ in kept):
                        continue
                    kept = [(m2, j2) for m2, j2 in kept if not codec.divides(m, m2)]
                    kept.append((m, j))
                for m, j in kept:
                    mj = codec.lcm(Pi, info[j][1]) - info[j][1]
                    S = {}
                    padd_scaled(S, elems[i], 1, m * prev.M, p)
                    padd_scaled(S, elems[j], p - 1, mj * prev.M, p)
                    sigma = reduce_to_syzygy(S)
                    k1, k2 = base[i] + m * mod.M, base[j] + mj * mod.M
                    sigma[k1] = (sigma.get(k1, 0) + 1) % p
                    sigma[k2] = (sigma.get(k2, 0) - 1) % p
                    sigma = {k: v for k, v in sigma.items() if v}
                    new_elems.append(sigma)
        prev = mod
        elems = new_elems
    return shifts, diffs


# ---------------------------------------------------------------------------
# minimization


def minimize(shifts, diffs, p: int, budget=None):
    """Cancel unit entries until the complex is minimal (modifies copies)."""
    budget = as_budget(budget)
    shifts = [list(s) for s in shifts]
    diffs = [{u: {r: dict(e) for r, e in col.items()} for u, col in d.items()} for d in diffs]
    L = len(diffs)
    for k in range(1, L + 1):
        d = diffs[k - 1]
        while True:
            units = [(r, u) for u, col in d.items() for r, e in col.items()
                     if e and shifts[k][u] == shifts[k - 1][r]]
            unit = min(units) if units else None
            if unit is None:
                break
            budget.tick()
            r, c = unit
            col_c = d[c]
            a = col_c[r][0]
            inv = pow(a, -1, p)
            for u, col in d.items():
                if u == c or r not in col:
                    continue
                b = col[r]
                factor = {m: v * inv % p for m, v in b.items()}
                for r2, e in col_c.items():
                    prod = pmul(factor, e, p)
                    target = col.setdefault(r2, {})
                    padd_scaled(target, prod, p - 1, 0, p)
                    if not target:
                        del col[r2]
            # drop row r and column c of d_k
            del d[c]
            for col in d.values():
                col.pop(r, None)
            # column r of d_{k-1} and row c of d_{k+1}
            if k >= 2:
                diffs[k - 2].pop(r, None)
            if k < L:
                for col in diffs[k].values():
                    col.pop(c, None)
            # mark removed basis elements
            shifts[k][c] = None
            shifts[k - 1][r] = None
    # reindex surviving basis elements, sorted by degree
    new_shifts, maps = [], []
    for s in shifts:
        alive = sorted((deg, i) for i, deg in enumerate(s) if deg is not None)
        maps.append({i: pos for pos, (_, i) in enumerate(alive)})
        new_shifts.append([deg for deg, _ in alive])
    new_diffs = []
    for k, d in enumerate(diffs, start=1):
        nd = {}
        for u, col in d.items():
            if u not in maps[k]:
                continue
            nd[maps[k][u]] = {maps[k - 1][r]: e for r, e in col.items() if r in maps[k - 1] and e}
        new_diffs.append(nd)
    while new_shifts and len(new_shifts) > 1 and not new_shifts[-1]:
        new_shifts.pop()
        new_diffs.pop()
    return new_shifts, new_diffs


# ---------------------------------------------------------------------------
# complexes


class GradedFreeComplex:
    """F_l -> ... -> F_1 -> F_0 with homogeneous differentials.

    ``shifts[k]`` lists the generator degrees of F_k; ``differentials[k-1]``
    is the matrix of d_k : F_k -> F_{k-1} (rows indexed by F_{k-1}).
    """

    def __init__(self, shifts, differentials, field, nvars, minimal=False):
        self.shifts = [tuple(s) for s in shifts]
        self.differentials = list(differentials)
        self.field = field
        self.nvars = nvars
        self.minimal = minimal
        if len(self.differentials) != len(self.shifts) - 1:
            raise ValueError("need one differential per consecutive pair of free modules")

    @property
    def length(self) -> int:
        return len(self.shifts) - 1

    def rank(self, k) -> int:
        return len(self.shifts[k]) if 0 <= k < len(self.shifts) else 0

    def differential(self, k) -> HomogeneousMatrix:
        return self.differentials[k - 1]

    def squares_to_zero(self) -> bool:
        for k in range(1, self.length):
            prod = self.differential(k) @ self.differential(k + 1)
            if any(e for row in prod for e in row):
                return False
        return True

    def is_minimal(self) -> bool:
        return all(e.is_zero() or e.degree > 0 for d in self.differentials
                   for row in d.entries for e in row)

    def drop_first(self) -> "GradedFreeComplex":
        """The complex F_l -> ... -> F_1 reindexed from 0 (a resolution of I)."""
        return GradedFreeComplex(self.shifts[1:], self.differentials[1:], self.field, self.nvars,
                                 self.minimal)

    def __repr__(self):
        return f"GradedFreeComplex(ranks={[len(s) for s in self.shifts]})"


def _to_matrix(cols, row_shifts, col_shifts, field, nvars, codec):
    grid = [[Polynomial.zero(field, nvars) for _ in col_shifts] for _ in row_shifts]
    for u, col in cols.items():
        for r, e in col.items():
            grid[r][u] = Polynomial.unpack(field, codec, e)
    return HomogeneousMatrix(grid, row_shifts, col_shifts, field, nvars, check=False)


def minimal_resolution(I, budget=None) -> GradedFreeComplex:
    """Minimal graded free resolution of S/I (F_0 = S)."""
    if I.is_zero():
        raise ValueError("the zero ideal has no interesting resolution")
    budget = as_budget(budget)
    codec = MonomialCodec(I.nvars, DEGREVLEX)
    gb = [g.pack(codec) for g in I.groebner_basis(DEGREVLEX, budget)]
    shifts, diffs = schreyer_frame(gb, codec, I.p, budget)
    shifts, diffs = minimize(shifts, diffs, I.p, budget)
    mats = [_to_matrix(diffs[k - 1], shifts[k - 1], shifts[k], I.field, I.nvars, codec)
            for k in range(1, len(shifts))]
    return GradedFreeComplex(shifts, mats, I.field, I.nvars, minimal=True)


def betti_table(F: GradedFreeComplex, module="S/I") -> BettiTable:
    """Graded Betti numbers of a minimal resolution of S/I."""
    if not F.minimal and not F.is_minimal():
        raise ValueError("Betti numbers need a minimal complex")
    entries = {}
    for k, degs in enumerate(F.shifts):
        for j in degs:
            entries[(k, j)] = entries.get((k, j), 0) + 1
    return BettiTable(entries, "S/I").as_module(module)


def resolution_betti(I, budget=None, module="S/I") -> BettiTable:
    return betti_table(minimal_resolution(I, budget), module)


def regularity(F: GradedFreeComplex, module="I") -> int:
    return betti_table(F, module).regularity()


def linear_part(F: GradedFreeComplex) -> GradedFreeComplex:
    """Zero every differential entry of degree two or more."""
    return GradedFreeComplex(F.shifts, [linearize(d) for d in F.differentials], F.field, F.nvars,
                             F.minimal)


# ---------------------------------------------------------------------------
# Buchsbaum-Eisenbud acyclicity


def _prune(M):
    rows = [i for i, row in enumerate(M) if any(row)]
    cols = [j for j in range(len(M[0]) if M else 0) if any(M[i][j] for i in rows)]
    return [[M[i][j] for j in cols] for i in rows]


def matrix_rank(M, field, nvars, rng, tries=2) -> tuple:
    """(lower bound from random evaluation, whether it is certainly exact by size)."""
    M = _prune(M)
    if not M:
        return 0, True
    p = field.p
    best = 0
    for _ in range(tries):
        point = [rng.randrange(p) for _ in range(nvars)]
        best = max(best, evaluated_rank(M, point, p))
    return best, best == min(len(M), len(M[0]))


def exact_rank(M, field, nvars) -> int:
    M = _prune(M)
    if not M:
        return 0
    return polynomial_rank(M, field, nvars)


def minors_height_at_least(M, r, k, field, nvars, rng, max_minors=4000, budget=None) -> bool:
    """Decide height I_r(M) >= k, sampling minors first.

    Raises UndecidedError if the decision needs more than ``max_minors`` minors.
    """
    from .groebner import GradedIdeal
    from .linalg import polynomial_det
    if r <= 0 or k <= 0:
        return True
    M = _prune(M)
    if not M or r > min(len(M), len(M[0])):
        return False
    rows, cols = len(M), len(M[0])
    total = comb(rows, r) * comb(cols, r)
    combos = [(R, C) for R in itertools.combinations(range(rows), r)
              for C in itertools.combinations(range(cols), r)] if total <= 200000 else None
    if combos is not None:
        rng.shuffle(combos)
    else:
        def sample():
            seen = set()
            while len(seen) < max_minors:
                R = tuple(sorted(rng.sample(range(rows), r)))
                C = tuple(sorted(rng.sample(range(cols), r)))
                if (R, C) not in seen:
                    seen.add((R, C))
                    yield R, C
        combos = sample()
    minors = []
    checked = 0
    batch = max(k, 4)
    for R, C in combos:
        checked += 1
        d = polynomial_det([[M[i][j] for j in C] for i in R])
        if budget is not None:
            budget.tick()
        if d:
            minors.append(d)
        if minors and (len(minors) >= batch or checked == total):
            if GradedIdeal(minors, field, nvars).height() >= k:
                return True
            batch *= 2
        if checked >= max_minors and checked < total:
            raise UndecidedError(f"height of the ideal of {r}-minors needs more than {max_minors} minors")
    if minors and GradedIdeal(minors, field, nvars).height() >= k:
        return True
    return False


def acyclicity_report(F: GradedFreeComplex, seed=0, max_minors=4000, budget=None):
    """Buchsbaum-Eisenbud test of 0 -> F_l -> ... -> F_0.

    Returns (acyclic flag, reason).  Raises UndecidedError when a minor ideal
    is too large to decide.
    """
    if F.length > F.nvars:
        raise ValueError("complexes longer than the number of variables are not supported")
    rng = random.Random(seed)
    L = F.length
    grids = {k: [list(row) for row in F.differential(k).entries] for k in range(1, L + 1)}
    ranks = {L + 1: 0}
    lower = {k: matrix_rank(grids[k], F.field, F.nvars, rng)[0] for k in range(1, L + 1)}
    # lower bounds that already add up are exact (walk down from the top)
    certified = True
    for k in range(L, 0, -1):
        if certified and lower[k] + ranks[k + 1] == F.rank(k):
            ranks[k] = lower[k]
            continue
        certified = False
        ranks[k] = exact_rank(grids[k], F.field, F.nvars)
    for k in range(1, L + 1):
        if ranks[k] + ranks[k + 1] != F.rank(k):
            return False, f"rank condition fails at F_{k}: {ranks[k]} + {ranks[k + 1]} != {F.rank(k)}"
    # cheapest height checks first
    cost = sorted(range(1, L + 1), key=lambda k: comb(F.rank(k - 1), ranks[k]) * comb(F.rank(k), ranks[k]))
    for k in cost:
        if not minors_height_at_least(grids[k], ranks[k], k, F.field, F.nvars, rng, max_minors, budget):
            return False, f"height of I_{ranks[k]}(d_{k}) is below {k}"
    return True, "rank and height conditions hold"


def is_acyclic(F: GradedFreeComplex, seed=0, max_minors=4000, budget=None) -> bool:
    return acyclicity_report(F, seed, max_minors, budget)[0]


__all__ = ["GradedFreeComplex", "minimal_resolution", "betti_table", "resolution_betti", "regularity",
           "linear_part", "is_acyclic", "acyclicity_report", "UndecidedError", "BudgetExceeded",
           "PrimeField"]
