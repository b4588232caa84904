"""Groebner bases of homogeneous ideals over prime fields.

The engine works on packed polynomials {packed monomial: coefficient} (see
``MonomialCodec``).  Buchberger's algorithm runs degree by degree with the
normal selection strategy and Gebauer-Moeller pair elimination.  When the
Hilbert series of the ideal is known in advance (for instance after a linear
change of coordinates) it is used to skip whole degrees of S-pairs and to
stop as soon as the leading terms have the right Hilbert series.
"""
from __future__ import annotations

import random
import threading
from collections import Counter, defaultdict

from .algebra import (DEGREVLEX, LEX, MonomialCodec, MonomialOrder, Polynomial, PrimeField,
                      count_monomials, monomials_of_degree)
from .budget import as_budget
from .ffield import PrimeArith, ZechArith, det_is_nonzero, extension_for
from .linalg import Echelon, padd_scaled, rank_mod_p
from .monomial import MonomialIdeal, hilbert_function_from_numerator


# ---------------------------------------------------------------------------
# packed engine


class _Basis:
    """Growing list of monic packed polynomials with their leading data."""

    def __init__(self, codec: MonomialCodec, p: int, arith=None):
        self.codec = codec
        self.p = p
        self.arith = arith if arith is not None else PrimeArith(p)
        self.polys = []
        self.lms = []
        self.lm_fields = []
        self.degs = []

    def add(self, f: dict):
        lm = max(f)
        self.polys.append(f)
        self.lms.append(lm)
        self.lm_fields.append(self.codec.fields(lm))
        self.degs.append(self.codec.degree(lm))

    def find_reducer(self, m: int):
        fm = self.codec.fields(m) | self.codec.guard
        g = self.codec.guard
        for k, fl in enumerate(self.lm_fields):
            if (fm - fl) & g == g:
                return k
        return None

    def normal_form(self, h: dict, full=True, budget=None) -> dict:
        """Remainder of h on division by the basis (destroys nothing)."""
        h = dict(h)
        rem = {}
        arith = self.arith
        polys, lms = self.polys, self.lms
        while h:
            m = max(h)
            c = h[m]
            k = self.find_reducer(m)
            if k is None:
                if not full:
                    h.update(rem)
                    return h
                rem[m] = c
                del h[m]
                continue
            if budget is not None:
                budget.tick()
            arith.axpy(h, polys[k], arith.neg(c), m - lms[k])
        return rem


def _monic(f: dict, arith) -> dict:
    c = f[max(f)]
    if c == arith.one:
        return f
    return arith.scale(f, arith.inv(c))


def _spoly(basis: _Basis, i: int, j: int, lcm: int) -> dict:
    arith = basis.arith
    out = {}
    arith.axpy(out, basis.polys[i], arith.one, lcm - basis.lms[i])
    arith.axpy(out, basis.polys[j], arith.neg(arith.one), lcm - basis.lms[j])
    return out


def _packed_hilbert_numerator(codec, lms):
    return MonomialIdeal(codec.n, [codec.decode(m) for m in lms]).hilbert_numerator()


def buchberger_packed(gens, codec: MonomialCodec, p: int, target_numerator=None,
                      max_degree=None, budget=None, arith=None):
    """Groebner basis of homogeneous packed generators.

    Returns (reduced basis sorted by descending leading monomial,
    indices of the input generators that are minimal generators).
    With ``max_degree`` the result is a basis truncated at that degree.
    Coefficients are residues mod p unless another ``arith`` is given.
    """
    budget = as_budget(budget)
    basis = _Basis(codec, p, arith)
    arith = basis.arith
    by_degree = defaultdict(list)
    for idx, f in enumerate(gens):
        if f:
            by_degree[codec.degree(max(f))].append(idx)
    pairs = defaultdict(list)  # lcm degree -> list of (lcm, i, j)
    minimal = []
    n = codec.n

    def lcm_of(i, j):
        return codec.lcm(basis.lms[i], basis.lms[j])

    def add_element(h):
        """Insert h and update the pair set with the Gebauer-Moeller criteria."""
        basis.add(h)
        k = len(basis.polys) - 1
        lm_k = basis.lms[k]
        new = {}
        for i in range(k):
            new[i] = lcm_of(i, k)
        # chain criterion on the new pairs: drop (i, k) if some other (j, k)
        # has an lcm properly dividing lcm(i, k)
        keep = []
        items = sorted(new.items(), key=lambda t: (codec.degree(t[1]), t[1]))
        seen_lcms = []
        for i, L in items:
            if any(codec.divides(L2, L) for L2 in seen_lcms):
                continue
            seen_lcms.append(L)
            keep.append((i, L))
        # drop pairs (i, k) whose leading monomials are coprime (product criterion)
        for i, L in keep:
            if L == basis.lms[i] + lm_k:
                continue
            pairs[codec.degree(L)].append((L, i, k))
        # old pairs (i, j) whose lcm is divisible by lm_k with distinct lcms
        for dg, plist in pairs.items():
            filtered = []
            for L, i, j in plist:
                if j == k:
                    filtered.append((L, i, j))
                    continue
                if (codec.divides(lm_k, L) and new[i] != L and new[j] != L):
                    continue
                filtered.append((L, i, j))
            pairs[dg] = filtered

    def ideal_dim(d):
        return count_monomials(n, d) - hilbert_function_from_numerator(target_numerator, n, d)

    def lead_dim(d):
        lead = MonomialIdeal(n, [codec.decode(m) for m in basis.lms])
        return lead.graded_piece_dim(d)

    degrees_left = set(by_degree)
    while True:
        pending = [d for d in pairs if pairs[d]] + list(degrees_left)
        if not pending:
            break
        d = min(pending)
        if max_degree is not None and d > max_degree:
            break
        batch = sorted(pairs.pop(d, []))
        skip = target_numerator is not None and basis.polys and lead_dim(d) == ideal_dim(d)
        if not skip:
            for L, i, j in batch:
                h = basis.normal_form(_spoly(basis, i, j, L), budget=budget)
                if h:
                    add_element(_monic(h, arith))
        for idx in by_degree.get(d, []):
            h = basis.normal_form(gens[idx], budget=budget)
            if h:
                minimal.append(idx)
                add_element(_monic(h, arith))
        degrees_left.discard(d)
        if (target_numerator is not None and not degrees_left
                and _packed_hilbert_numerator(codec, basis.lms) == tuple(target_numerator)):
            break
    return _reduce_basis(basis, budget), minimal


def _reduce_basis(basis: _Basis, budget=None):
    codec = basis.codec
    keep = []
    order = sorted(range(len(basis.lms)), key=lambda k: basis.lms[k])
    for k in order:
        lm = basis.lms[k]
        if any(codec.divides(basis.lms[j], lm) for j in keep):
            continue
        keep.append(k)
    reduced = _Basis(codec, basis.p, basis.arith)
    for k in keep:
        reduced.add(basis.polys[k])
    out = []
    for idx, f in enumerate(reduced.polys):
        lm = reduced.lms[idx]
        tail = dict(f)
        del tail[lm]
        tail = reduced.normal_form(tail, budget=budget) if tail else {}
        tail[lm] = basis.arith.one
        out.append(tail)
    out.sort(key=max, reverse=True)
    return out


# ---------------------------------------------------------------------------
# division with quotients (tuple monomials, user facing)


def divide(f: Polynomial, G, order=DEGREVLEX):
    """Multivariate division: returns (quotients, remainder) with f = sum q_i g_i + r."""
    order = MonomialOrder.parse(order)
    G = list(G)
    if not G or any(g.is_zero() for g in G):
        raise ValueError("division needs a nonempty list of nonzero divisors")
    field, n = f.field, f.nvars
    codec = MonomialCodec(n, order)
    p = field.p
    packed = [g.pack(codec) for g in G]
    lms = [max(g) for g in packed]
    lfs = [codec.fields(m) for m in lms]
    invs = [pow(g[lm], -1, p) for g, lm in zip(packed, lms)]
    quots = [{} for _ in G]
    h = f.pack(codec)
    rem = {}
    guard = codec.guard
    while h:
        m = max(h)
        fm = codec.fields(m) | guard
        for k, fl in enumerate(lfs):
            if (fm - fl) & guard == guard:
                c = h[m] * invs[k] % p
                t = m - lms[k]
                quots[k][t] = (quots[k].get(t, 0) + c) % p
                padd_scaled(h, packed[k], p - c, t, p)
                break
        else:
            rem[m] = h.pop(m)
    return ([Polynomial.unpack(field, codec, q) for q in quots],
            Polynomial.unpack(field, codec, rem))


# ---------------------------------------------------------------------------
# graded ideals


class GradedIdeal:
    """A homogeneous ideal of K[x1..xn] with lazily computed Groebner bases.

    Caches are write-once per key: values are computed outside the lock and
    published with ``setdefault``, so concurrent readers always agree.
    """

    def __init__(self, generators, field=None, nvars=None, hilbert_numerator=None):
        gens = [g for g in generators]
        if field is None or nvars is None:
            if not gens:
                raise ValueError("cannot infer the ring of an empty generator list")
            field, nvars = gens[0].field, gens[0].nvars
        if isinstance(field, int):
            field = PrimeField(field)
        self.field = field
        self.nvars = nvars
        clean = []
        for k, g in enumerate(gens):
            if g.field != field or g.nvars != nvars:
                raise ValueError(f"generator {k + 1} lives in a different ring")
            if not g.is_homogeneous():
                raise ValueError(f"generator {k + 1} ({g}) is not homogeneous")
            if g:
                clean.append(g)
        self.generators = tuple(clean)
        self._hint = tuple(hilbert_numerator) if hilbert_numerator is not None else None
        self._cache = {}
        self._lock = threading.Lock()

    # cache helpers
    def _cached(self, key, compute):
        val = self._cache.get(key)
        if val is None:
            val = compute()
            with self._lock:
                val = self._cache.setdefault(key, val)
        return val

    @property
    def p(self):
        return self.field.p

    def is_zero(self):
        return not self.generators

    def __repr__(self):
        return f"GradedIdeal({', '.join(str(g) for g in self.generators)})"

    def degrees(self):
        return sorted(g.degree for g in self.generators)

    # Groebner bases -----------------------------------------------------------
    def _engine(self, order, budget=None):
        order = MonomialOrder.parse(order)

        def compute():
            codec = MonomialCodec(self.nvars, order)
            gens = [g.pack(codec) for g in self.generators]
            target = self._hint
            if target is None and order is not DEGREVLEX:
                target = self.hilbert_numerator(budget=budget)
            basis, minimal = buchberger_packed(gens, codec, self.p, target, budget=budget)
            return codec, basis, minimal

        return self._cached(("gb", order), compute)

    def groebner_basis(self, order=DEGREVLEX, budget=None):
        """Reduced Groebner basis, sorted by descending leading monomial."""
        codec, basis, _ = self._engine(order, budget)
        return [Polynomial.unpack(self.field, codec, f) for f in basis]

    def initial_ideal(self, order=DEGREVLEX, budget=None) -> MonomialIdeal:
        codec, basis, _ = self._engine(order, budget)
        return MonomialIdeal(self.nvars, [codec.decode(max(f)) for f in basis])

    def normal_form(self, f: Polynomial, order=DEGREVLEX) -> Polynomial:
        codec, basis, _ = self._engine(order)
        b = _Basis(codec, self.p)
        for g in basis:
            b.add(g)
        return Polynomial.unpack(self.field, codec, b.normal_form(f.pack(codec)))

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    # generators ----------------------------------------------------------------
    def minimal_generators(self, budget=None):
        """A minimal homogeneous generating set, chosen among the given generators."""
        _, _, minimal = self._engine(DEGREVLEX, budget)
        return [self.generators[k] for k in sorted(minimal, key=lambda k: (self.generators[k].degree, k))]

    def beta0(self, budget=None) -> int:
        return len(self.minimal_generators(budget))

    def beta0_graded(self, budget=None):
        return dict(sorted(Counter(g.degree for g in self.minimal_generators(budget)).items()))

    # Hilbert function, dimension, height -----------------------------------------
    def hilbert_numerator(self, budget=None):
        if self._hint is not None:
            return self._hint
        return self.initial_ideal(DEGREVLEX, budget).hilbert_numerator()

    def hilbert_function(self, d_max: int):
        """[dim_K (S/I)_d for d = 0..d_max]."""
        num = self.hilbert_numerator()
        return [hilbert_function_from_numerator(num, self.nvars, d) for d in range(d_max + 1)]

    def graded_piece_dim(self, d: int) -> int:
        """dim_K I_d."""
        if d < 0:
            return 0
        num = self.hilbert_numerator()
        return count_monomials(self.nvars, d) - hilbert_function_from_numerator(num, self.nvars, d)

    def dimension(self, budget=None) -> int:
        if self.is_zero():
            return self.nvars
        return self.initial_ideal(DEGREVLEX, budget).dimension()

    def height(self, budget=None) -> int:
        return self.nvars - self.dimension(budget) if self.dimension(budget) >= 0 else self.nvars

    # derived ideals ---------------------------------------------------------------
    def graded_piece_basis(self, d: int):
        """A K-basis of I_d in reduced echelon form (pivots descending, degrevlex)."""
        codec, basis, _ = self._engine(DEGREVLEX)
        ech = Echelon(self.p)
        for f in basis:
            k = d - codec.degree(max(f))
            if k < 0:
                continue
            for a in monomials_of_degree(self.nvars, k):
                t = codec.encode(a)
                ech.add({m + t: c for m, c in f.items()})
        rows = [ech.rows[k] for k in sorted(ech.rows, reverse=True)]
        return [Polynomial.unpack(self.field, codec, r) for r in rows]

    def component_ideal(self, d: int) -> "GradedIdeal":
        """I_<d>: the ideal generated by the forms of degree d in I."""
        return GradedIdeal(self.graded_piece_basis(d), self.field, self.nvars)

    def truncation(self, d: int) -> "GradedIdeal":
        """I_{>=d}, generated by x^a g over minimal generators g with |a| = max(0, d - deg g)."""
        gens = []
        for g in self.minimal_generators():
            k = max(0, d - g.degree)
            for a in monomials_of_degree(self.nvars, k):
                gens.append(g.shift(a))
        return GradedIdeal(gens, self.field, self.nvars)

    def with_field(self, field) -> "GradedIdeal":
        """Reduce the integer coefficients of the generators modulo another prime."""
        if isinstance(field, int):
            field = PrimeField(field)
        return GradedIdeal([Polynomial(field, self.nvars, g.as_dict()) for g in self.generators],
                           field, self.nvars)


def monomial_to_graded(I: MonomialIdeal, field) -> GradedIdeal:
    return I.to_ideal(field)


# ---------------------------------------------------------------------------
# coordinate changes and generic initial ideals


class RandomCoordinateChange:
    """An invertible n x n matrix over F_p drawn from a seeded generator."""

    def __init__(self, nvars: int, field, seed=0, matrix=None):
        if isinstance(field, int):
            field = PrimeField(field)
        self.field = field
        self.nvars = nvars
        self.seed = seed
        p = field.p
        if matrix is not None:
            matrix = [[x % p for x in row] for row in matrix]
            if rank_mod_p(matrix, p) < nvars:
                raise ValueError("coordinate change matrix is singular")
        else:
            rng = random.Random(seed)
            while True:
                matrix = [[rng.randrange(p) for _ in range(nvars)] for _ in range(nvars)]
                if rank_mod_p(matrix, p) == nvars:
                    break
        self.matrix = tuple(tuple(r) for r in matrix)

    @classmethod
    def identity(cls, nvars, field):
        return cls(nvars, field, matrix=[[int(i == j) for j in range(nvars)] for i in range(nvars)])

    def images(self):
        """The linear forms x_i -> sum_j phi_ij x_j."""
        from .algebra import linear_form
        return [linear_form(self.field, row) for row in self.matrix]


def apply_coordinate_change(I: GradedIdeal, phi: RandomCoordinateChange) -> GradedIdeal:
    if phi.nvars != I.nvars or phi.field != I.field:
        raise ValueError("coordinate change does not match the ring of the ideal")
    images = phi.images()
    gens = [g.substitute(images) for g in I.generators]
    # the Hilbert series is invariant, so pass it along to drive Buchberger
    return GradedIdeal(gens, I.field, I.nvars, hilbert_numerator=I.hilbert_numerator())


def _packed_product(f: dict, g: dict, arith) -> dict:
    out = {}
    for m, c in f.items():
        arith.axpy(out, g, c, m)
    return out


def _extension_initial_ideal(I: GradedIdeal, arith, seed, order, budget=None) -> MonomialIdeal:
    """Initial ideal of I after a random change of coordinates over an extension field."""
    n = I.nvars
    rng = random.Random(seed)
    while True:
        matrix = [[arith.random(rng) for _ in range(n)] for _ in range(n)]
        if det_is_nonzero(matrix, arith):
            break
    codec = MonomialCodec(n, order)
    units = [codec.encode(tuple(int(i == j) for j in range(n))) for i in range(n)]
    images = [{units[j]: c for j, c in enumerate(row) if c != arith.zero} for row in matrix]
    powers = {}
    gens = []
    for g in I.generators:
        out = {}
        for mono, c in g.as_dict().items():
            term = {0: arith.from_int(c)}
            for i, e in enumerate(mono):
                if e:
                    if (i, e) not in powers:
                        acc = {0: arith.one}
                        for _ in range(e):
                            acc = _packed_product(acc, images[i], arith)
                        powers[(i, e)] = acc
                    term = _packed_product(term, powers[(i, e)], arith)
            for m, v in term.items():
                arith.axpy(out, {0: v}, arith.one, m)
        gens.append(out)
    basis, _ = buchberger_packed(gens, codec, I.p, I.hilbert_numerator(budget), budget=budget,
                                 arith=arith)
    return MonomialIdeal(n, [codec.decode(max(f)) for f in basis])


def gin_sample(I: GradedIdeal, order=DEGREVLEX, seed=0, trials=3, budget=None):
    """Initial ideals of ``trials`` random coordinate changes of I.

    Over a small prime field the coordinate changes are drawn over a finite
    extension GF(p^k), since F_p itself may be too small to be generic.
    Returns (majority initial ideal, all samples agreed, list of samples).
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    order = MonomialOrder.parse(order)
    arith = extension_for(I.p)
    samples = []
    for t in range(trials):
        trial_seed = seed * 1000003 + t
        if isinstance(arith, ZechArith):
            samples.append(_extension_initial_ideal(I, arith, trial_seed, order, budget))
        else:
            phi = RandomCoordinateChange(I.nvars, I.field, seed=trial_seed)
            samples.append(apply_coordinate_change(I, phi).initial_ideal(order, budget))
    counts = Counter(samples)
    best = max(counts, key=lambda J: (counts[J], -samples.index(J)))
    return best, len(counts) == 1, samples


def gin_field(p: int) -> str:
    """Name of the field the coordinate changes of ``gin_sample`` are drawn from."""
    return repr(extension_for(p))


__all__ = ["GradedIdeal", "RandomCoordinateChange", "apply_coordinate_change", "buchberger_packed",
           "divide", "gin_sample", "gin_field", "DEGREVLEX", "LEX"]
