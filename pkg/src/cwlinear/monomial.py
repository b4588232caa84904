"""Monomial ideals: stability, Eliahou-Kervaire Betti numbers, arithmetic,
Hilbert series, and Stanley-Reisner ideals of simplicial complexes."""
from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from math import comb

from .algebra import (DEGREVLEX, count_monomials, max_index, mono_divides, mono_div, mono_lcm,
                      mono_mul, monomials_of_degree)
from .betti import BettiTable


class NotStableError(ValueError):
    """Raised when an operation needs a stable ideal; carries the violation."""

    def __init__(self, generator, j):
        self.generator = generator
        self.j = j
        super().__init__(f"not stable: x{j} * m / x_max(m) is not in the ideal for m = {generator}")


def minimalize(gens):
    """Divisibility-minimal subset of ``gens``, duplicates removed."""
    out = []
    for m in sorted(set(map(tuple, gens)), key=sum):
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


class MonomialIdeal:
    """A monomial ideal held by its minimal generators, degrevlex-descending."""

    def __init__(self, nvars: int, generators=()):
        self.nvars = nvars
        gens = minimalize(generators)
        for g in gens:
            if len(g) != nvars:
                raise ValueError(f"generator {g} has wrong arity (expected {nvars})")
        self.gens = tuple(sorted(gens, key=DEGREVLEX.key, reverse=True))

    # construction helpers -------------------------------------------------
    @classmethod
    def variables(cls, nvars, indices, powers=None):
        """(x_i^{e_i} : i in indices), 1-based indices."""
        gens = []
        for k, i in enumerate(indices):
            e = [0] * nvars
            e[i - 1] = powers[k] if powers else 1
            gens.append(tuple(e))
        return cls(nvars, gens)

    @classmethod
    def maximal(cls, nvars, power=1, first=None):
        """(x_1, ..., x_first)^power, default first = nvars."""
        first = nvars if first is None else first
        gens = [m + (0,) * (nvars - first) for m in monomials_of_degree(first, power)]
        return cls(nvars, gens)

    # basic queries ---------------------------------------------------------
    def __contains__(self, mono) -> bool:
        return any(mono_divides(g, mono) for g in self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def is_zero(self):
        return not self.gens

    def degrees(self):
        return [sum(g) for g in self.gens]

    def generators_of_degree(self, d):
        return [g for g in self.gens if sum(g) == d]

    def beta0_graded(self):
        return dict(sorted(Counter(self.degrees()).items()))

    def is_squarefree(self):
        return all(e <= 1 for g in self.gens for e in g)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.nvars == other.nvars and self.gens == other.gens

    def __hash__(self):
        return hash((self.nvars, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({self})"

    def __str__(self):
        from .textio import format_monomial
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"

    # arithmetic ------------------------------------------------------------
    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        self._check(other)
        return MonomialIdeal(self.nvars, self.gens + other.gens)

    def __mul__(self, other):
        self._check(other)
        return MonomialIdeal(self.nvars, [mono_mul(a, b) for a in self.gens for b in other.gens])

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of an ideal")
        result = MonomialIdeal(self.nvars, [(0,) * self.nvars])
        for _ in range(k):
            result = result * self
        return result

    def times_maximal(self, k: int) -> "MonomialIdeal":
        """m^k * I."""
        return self * MonomialIdeal.maximal(self.nvars, k)

    def quotient(self, mono) -> "MonomialIdeal":
        """I : x^mono."""
        return MonomialIdeal(self.nvars, [mono_div(mono_lcm(g, mono), mono) for g in self.gens])

    def truncation(self, d: int) -> "MonomialIdeal":
        """I_{>=d}."""
        gens = []
        for g in self.gens:
            k = max(0, d - sum(g))
            gens.extend(mono_mul(g, a) for a in monomials_of_degree(self.nvars, k))
        return MonomialIdeal(self.nvars, gens)

    def component(self, d: int) -> "MonomialIdeal":
        """I_<d>: the ideal generated by the degree-d monomials of I."""
        return MonomialIdeal(self.nvars, [g for g in self.truncation(d).gens if sum(g) == d])

    # stability --------------------------------------------------------------
    def stability_violation(self, strong=False):
        """First (generator, j) breaking (strong) stability, or None."""
        for m in self.gens:
            indices = [i + 1 for i, e in enumerate(m) if e] if strong else [max_index(m)]
            for i in indices:
                if i == 0:
                    continue
                for j in range(1, i):
                    e = list(m)
                    e[i - 1] -= 1
                    e[j - 1] += 1
                    if tuple(e) not in self:
                        return m, j
        return None

    def is_stable(self) -> bool:
        return self.stability_violation() is None

    def is_strongly_stable(self) -> bool:
        return self.stability_violation(strong=True) is None

    # Betti numbers ----------------------------------------------------------
    def ek_betti(self) -> BettiTable:
        """Graded Betti numbers of S/I via the Eliahou-Kervaire resolution."""
        bad = self.stability_violation()
        if bad is not None:
            raise NotStableError(*bad)
        return eliahou_kervaire(self.gens)

    # Hilbert series and dimension ---------------------------------------------
    def hilbert_numerator(self):
        """Coefficients of N(t) with HS(S/I, t) = N(t) / (1 - t)^n."""
        return hilbert_numerator(self.gens)

    def hilbert_function(self, d: int) -> int:
        """dim_K (S/I)_d."""
        return hilbert_function_from_numerator(self.hilbert_numerator(), self.nvars, d)

    def graded_piece_dim(self, d: int) -> int:
        """dim_K I_d."""
        return count_monomials(self.nvars, d) - self.hilbert_function(d)

    def dimension(self) -> int:
        """Krull dimension of S/I: largest variable set containing no generator's support."""
        n = self.nvars
        if not self.gens:
            return n
        supports = [sum(1 << i for i, e in enumerate(g) if e) for g in self.gens]
        if 0 in supports:
            return -1  # unit ideal; S/I = 0
        for size in range(n, -1, -1):
            for ys in itertools.combinations(range(n), size):
                mask = sum(1 << y for y in ys)
                if all(s & ~mask for s in supports):
                    return size
        return 0

    def height(self) -> int:
        dim = self.dimension()
        return self.nvars if dim < 0 else self.nvars - dim

    def to_ideal(self, field):
        """The same ideal as a GradedIdeal over ``field``."""
        from .algebra import Polynomial, PrimeField
        from .groebner import GradedIdeal
        if isinstance(field, int):
            field = PrimeField(field)
        return GradedIdeal([Polynomial.monomial(field, g) for g in self.gens], field, self.nvars)


def eliahou_kervaire(gens) -> BettiTable:
    """beta_{i,i+j}(I) = sum over generators u of degree j of C(max(u) - 1, i).

    Returned as the table of S/I: beta_{i+1, i+j}(S/I) = beta_{i, i+j}(I).
    """
    entries = Counter({(0, 0): 1})
    for g in gens:
        j, mx = sum(g), max_index(g)
        for i in range(mx):
            entries[(i + 1, i + j)] += comb(mx - 1, i)
    return BettiTable(entries, "S/I")


# ---------------------------------------------------------------------------
# Hilbert series


def _poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def _trim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return tuple(a)


def hilbert_numerator(gens):
    return _hs_numerator(tuple(sorted(minimalize(gens))))


@lru_cache(maxsize=4096)
def _hs_numerator(gens):
    if not gens:
        return (1,)
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    # base case: pairwise coprime generators
    if sum(len(s) for s in supports) == len(frozenset().union(*supports)):
        num = [1]
        for g in gens:
            d = sum(g)
            shifted = [0] * d + [-x for x in num]
            num = _poly_add(num, shifted)
        return _trim(num)
    counts = Counter(i for g in gens for i, e in enumerate(g) if e and sum(1 for x in g if x) > 1)
    v = max(counts, key=lambda i: (counts[i], -i))
    exps = sorted(g[v] for g in gens if g[v] and sum(1 for x in g if x) > 1)
    e = max(1, exps[(len(exps) - 1) // 2])
    pivot = tuple(e if i == v else 0 for i in range(len(gens[0])))
    # HS(S/I) = HS(S/(I + p)) + t^deg(p) HS(S/(I : p))
    plus = tuple(sorted(minimalize(gens + (pivot,))))
    colon = tuple(sorted(minimalize(mono_div(mono_lcm(g, pivot), pivot) for g in gens)))
    a = _hs_numerator(plus)
    b = _hs_numerator(colon)
    return _trim(_poly_add(a, [0] * e + list(b)))


def hilbert_function_from_numerator(num, n: int, d: int) -> int:
    return sum(c * count_monomials(n, d - k) for k, c in enumerate(num) if d - k >= 0)


# ---------------------------------------------------------------------------
# simplicial complexes


class SimplicialComplex:
    """A simplicial complex on vertices 1..n given by its facets."""

    def __init__(self, nvertices: int, facets):
        self.n = nvertices
        fs = {frozenset(f) for f in facets}
        for f in fs:
            if not all(1 <= v <= nvertices for v in f):
                raise ValueError(f"facet {sorted(f)} uses a vertex outside 1..{nvertices}")
        self.facets = tuple(sorted((f for f in fs if not any(f < g for g in fs)),
                                   key=lambda f: (len(f), sorted(f))))

    def __contains__(self, face) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def minimal_nonfaces(self):
        out = []
        for size in range(0, self.n + 1):
            for c in itertools.combinations(range(1, self.n + 1), size):
                s = frozenset(c)
                if s in self or any(o <= s for o in out):
                    continue
                out.append(s)
        return out

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and set(self.facets) == set(other.facets)

    def __hash__(self):
        return hash((self.n, frozenset(self.facets)))

    def __repr__(self):
        return f"SimplicialComplex({self.n}, {[sorted(f) for f in self.facets]})"


def stanley_reisner(delta: SimplicialComplex) -> MonomialIdeal:
    """I_Delta, generated by the squarefree monomials of the minimal nonfaces."""
    n = delta.n
    return MonomialIdeal(n, [tuple(1 if v + 1 in s else 0 for v in range(n))
                             for s in delta.minimal_nonfaces()])


def alexander_dual(delta: SimplicialComplex) -> SimplicialComplex:
    """{F : [n] minus F is not a face}; its facets are complements of minimal nonfaces."""
    full = frozenset(range(1, delta.n + 1))
    return SimplicialComplex(delta.n, [full - s for s in delta.minimal_nonfaces()])


def complex_from_squarefree(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose Stanley-Reisner ideal is the squarefree ideal given."""
    if not ideal.is_squarefree():
        raise ValueError("not a squarefree monomial ideal")
    n = ideal.nvars
    supports = [frozenset(i + 1 for i, e in enumerate(g) if e) for g in ideal.gens]
    faces = []
    for size in range(n, -1, -1):
        for c in itertools.combinations(range(1, n + 1), size):
            s = frozenset(c)
            if any(t <= s for t in supports) or any(s <= f for f in faces):
                continue
            faces.append(s)
    return SimplicialComplex(n, faces)
