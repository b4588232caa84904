"""Exact linear algebra over F_p and small polynomial-matrix kernels."""
from __future__ import annotations

import itertools

from .algebra import DEGREVLEX, MonomialCodec, Polynomial


class Echelon:
    """Incremental reduced row echelon form over F_p.

    Rows are sparse dicts {column key: value}.  The pivot of a row is its
    largest key, so with packed monomials as keys the pivots of a basis of a
    graded piece are exactly the leading monomials of that piece.
    """

    def __init__(self, p: int):
        self.p = p
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        p = self.p
        v = dict(vec)
        rows = self.rows
        for k in [k for k in v if k in rows]:
            c = v.get(k)
            if not c:
                continue
            for col, val in rows[k].items():
                x = (v.get(col, 0) - c * val) % p
                if x:
                    v[col] = x
                else:
                    v.pop(col, None)
        return v

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return True if it was independent of the current rows."""
        v = self.reduce(vec)
        if not v:
            return False
        p = self.p
        piv = max(v)
        inv = pow(v[piv], -1, p)
        v = {k: x * inv % p for k, x in v.items()}
        for row in self.rows.values():
            c = row.get(piv)
            if c:
                for col, val in v.items():
                    x = (row.get(col, 0) - c * val) % p
                    if x:
                        row[col] = x
                    else:
                        del row[col]
        self.rows[piv] = v
        return True

    def pivots(self):
        return set(self.rows)


def rank_mod_p(matrix, p: int) -> int:
    """Rank of a dense integer matrix over F_p."""
    ech = Echelon(p)
    for row in matrix:
        ech.add({j: x % p for j, x in enumerate(row) if x % p})
    return len(ech)


# ---------------------------------------------------------------------------
# packed polynomial helpers (dicts {packed monomial: coefficient})


def padd_scaled(f: dict, g: dict, c: int, shift: int, p: int) -> None:
    """In place: f += c * x^shift * g."""
    for m, v in g.items():
        k = m + shift
        x = (f.get(k, 0) + c * v) % p
        if x:
            f[k] = x
        else:
            del f[k]


def pmul(f: dict, g: dict, p: int) -> dict:
    out = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            k = m1 + m2
            out[k] = (out.get(k, 0) + c1 * c2) % p
    return {k: v for k, v in out.items() if v}


def pexact_div(f: dict, g: dict, codec: MonomialCodec, p: int) -> dict:
    """Quotient f / g; raises ArithmeticError if g does not divide f."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    r = dict(f)
    q = {}
    lg = max(g)
    inv = pow(g[lg], -1, p)
    while r:
        m = max(r)
        if not codec.divides(lg, m):
            raise ArithmeticError("inexact polynomial division")
        c = r[m] * inv % p
        t = m - lg
        q[t] = c
        padd_scaled(r, g, p - c, t, p)
    return q


# ---------------------------------------------------------------------------
# determinants and ranks of polynomial matrices


def _laplace_det(M, field, nvars):
    k = len(M)
    zero = Polynomial.zero(field, nvars)
    one = Polynomial.constant(field, nvars, 1)
    # memo over column subsets, expanding along rows top to bottom
    memo = {(): one}
    for r in range(k - 1, -1, -1):
        size = k - r
        new = {}
        for cols in itertools.combinations(range(k), size):
            acc = zero
            for pos, j in enumerate(cols):
                e = M[r][j]
                if not e:
                    continue
                rest = memo.get(cols[:pos] + cols[pos + 1:])
                if rest is None or not rest:
                    continue
                term = e * rest
                acc = acc + term if pos % 2 == 0 else acc - term
            new[cols] = acc
        memo = new
    return memo[tuple(range(k))]


def polynomial_det(M):
    """Determinant of a square grid of Polynomials."""
    k = len(M)
    if k == 0:
        raise ValueError("empty matrix has no ring; determinant undefined")
    field, nvars = M[0][0].field, M[0][0].nvars
    if k <= 4:
        return _laplace_det(M, field, nvars)
    codec = MonomialCodec(nvars, DEGREVLEX)
    det, _ = _bareiss([[e.pack(codec) for e in row] for row in M], codec, field.p, square=True)
    return Polynomial.unpack(field, codec, det)


def _bareiss(A, codec, p, square=False):
    """Fraction-free elimination; returns (last pivot, rank).

    For a square matrix of full rank the last pivot is the determinant
    (up to the sign of the row/column swaps, which is applied).
    """
    A = [list(map(dict, row)) for row in A]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    prev = {0: 1}
    sign = 1
    r = 0
    for _ in range(min(rows, cols)):
        piv = None
        best = None
        for i in range(r, rows):
            for j in range(r, cols):
                if A[i][j] and (best is None or len(A[i][j]) < best):
                    piv, best = (i, j), len(A[i][j])
        if piv is None:
            break
        i, j = piv
        if i != r:
            A[i], A[r] = A[r], A[i]
            sign = -sign
        if j != r:
            for row in A:
                row[j], row[r] = row[r], row[j]
            sign = -sign
        a = A[r][r]
        for i in range(r + 1, rows):
            b = A[i][r]
            for j in range(r + 1, cols):
                x = pmul(a, A[i][j], p)
                if b and A[r][j]:
                    padd_scaled(x, pmul(b, A[r][j], p), p - 1, 0, p)
                A[i][j] = pexact_div(x, prev, codec, p) if x else {}
            A[i][r] = {}
        prev = a
        r += 1
    if square:
        if r < rows:
            return {}, r
        if sign < 0:
            prev = {m: (p - c) % p for m, c in prev.items()}
        return prev, r
    return prev, r


def polynomial_rank(M, field, nvars) -> int:
    """Rank over the fraction field of a grid of Polynomials."""
    if not M or not M[0]:
        return 0
    codec = MonomialCodec(nvars, DEGREVLEX)
    _, r = _bareiss([[e.pack(codec) for e in row] for row in M], codec, field.p)
    return r


def evaluated_rank(M, point, p: int) -> int:
    """Rank over F_p of the matrix evaluated at ``point``; a lower bound for the rank."""
    return rank_mod_p([[e.evaluate(point) for e in row] for row in M], p)
