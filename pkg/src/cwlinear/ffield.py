"""Coefficient arithmetic for the Groebner engine.

``PrimeArith`` works on canonical residues mod p.  ``ZechArith`` implements
GF(p^k) with elements stored as discrete logarithms of a primitive element
(-1 stands for zero) and addition through a Zech logarithm table.  It is used
to draw coordinate changes generic enough for small characteristics.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .linalg import padd_scaled


class PrimeArith:
    def __init__(self, p: int):
        self.p = p
        self.q = p
        self.zero = 0
        self.one = 1

    def from_int(self, c: int) -> int:
        return c % self.p

    def to_int(self, a: int) -> int:
        return a

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def mul(self, a, b):
        return a * b % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def axpy(self, f: dict, g: dict, c, shift: int):
        """f += c * x^shift * g, in place."""
        padd_scaled(f, g, c, shift, self.p)

    def scale(self, f: dict, c) -> dict:
        p = self.p
        return {m: v * c % p for m, v in f.items()}

    def random(self, rng):
        return rng.randrange(self.p)

    def __repr__(self):
        return f"F_{self.p}"


def _poly_mulmod(a, b, modulus, p):
    """Product of coefficient lists (low degree first) reduced by a monic modulus."""
    k = len(modulus) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    for i in range(len(out) - 1, k - 1, -1):
        c = out[i]
        if c:
            for j in range(k + 1):
                out[i - k + j] = (out[i - k + j] - c * modulus[j]) % p
    return out[:k] + [0] * (k - len(out[:k]))


def _encode(coeffs, p):
    v = 0
    for c in reversed(coeffs):
        v = v * p + c
    return v


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _poly_pow_x(e, modulus, p):
    """x^e modulo the monic modulus, by square and multiply."""
    k = len(modulus) - 1
    result = [1] + [0] * (k - 1)
    base = ([0, 1] + [0] * (k - 2)) if k > 1 else [(-modulus[0]) % p]
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, modulus, p)
        base = _poly_mulmod(base, base, modulus, p)
        e >>= 1
    return result


def _candidates(p, k):
    """Monic degree-k polynomials with nonzero constant term, sparsest first."""
    for weight in range(k):
        for support in itertools.combinations(range(1, k), weight):
            for coeffs in itertools.product(range(1, p), repeat=weight + 1):
                tail = [0] * k
                tail[0] = coeffs[0]
                for i, c in zip(support, coeffs[1:]):
                    tail[i] = c
                yield tail + [1]


@lru_cache(maxsize=None)
def _tables(p: int, k: int):
    """(modulus, exp table, log table) for a primitive polynomial of degree k."""
    q = p ** k
    one = [1] + [0] * (k - 1)
    factors = _prime_factors(q - 1)
    for modulus in _candidates(p, k):
        # x has order q - 1 exactly; this forces the modulus to be irreducible
        if _poly_pow_x(q - 1, modulus, p) != one:
            continue
        if any(_poly_pow_x((q - 1) // r, modulus, p) == one for r in factors):
            continue
        exp = []
        cur = one
        for _ in range(q - 1):
            exp.append(_encode(cur, p))
            if k > 1:
                top = cur[-1]
                cur = [0] + cur[:-1]
                if top:
                    cur = [(a - top * m) % p for a, m in zip(cur, modulus)]
            else:
                cur = [cur[0] * (-modulus[0]) % p]
        log = [0] * q
        for i, code in enumerate(exp):
            log[code] = i
        return modulus, exp, log
    raise ValueError(f"no primitive polynomial of degree {k} over F_{p}")


class ZechArith:
    """GF(p^k) in logarithmic representation."""

    def __init__(self, p: int, k: int):
        self.p, self.k = p, k
        self.q = p ** k
        Q = self.Q = self.q - 1
        modulus, exp, log = _tables(p, k)
        self.modulus = modulus
        self.exp = exp
        self.log = log
        zech = [0] * Q
        for n in range(Q):
            e = exp[n]
            low = e % p
            e1 = e - low + (low + 1) % p
            zech[n] = -1 if e1 == 0 else log[e1]
        self.zech = zech
        self.zero = -1
        self.one = 0
        self.minus_one = log[p - 1] if p > 2 else 0

    def from_int(self, c: int):
        c %= self.p
        return -1 if c == 0 else self.log[c]

    def to_code(self, a: int) -> int:
        """Base-p digit encoding of the polynomial representative."""
        return 0 if a < 0 else self.exp[a]

    def neg(self, a):
        return -1 if a < 0 else (a + self.minus_one) % self.Q

    def inv(self, a):
        if a < 0:
            raise ZeroDivisionError("inverse of zero")
        return -a % self.Q

    def mul(self, a, b):
        if a < 0 or b < 0:
            return -1
        return (a + b) % self.Q

    def add(self, a, b):
        if a < 0:
            return b
        if b < 0:
            return a
        z = self.zech[(b - a) % self.Q]
        return -1 if z < 0 else (a + z) % self.Q

    def axpy(self, f: dict, g: dict, c, shift: int):
        if c < 0:
            return
        Q, zech = self.Q, self.zech
        for m, v in g.items():
            key = m + shift
            t = (v + c) % Q
            old = f.get(key, -1)
            if old < 0:
                f[key] = t
                continue
            z = zech[(t - old) % Q]
            if z < 0:
                del f[key]
            else:
                f[key] = (old + z) % Q

    def scale(self, f: dict, c) -> dict:
        Q = self.Q
        return {m: (v + c) % Q for m, v in f.items()}

    def random(self, rng):
        x = rng.randrange(self.q)
        return -1 if x == 0 else rng.randrange(self.Q)

    def __repr__(self):
        return f"GF({self.p}^{self.k})"


def extension_for(p: int, min_size: int = 30000, max_table: int = 1 << 20):
    """Arithmetic for F_p itself if it is large, else for a big enough GF(p^k)."""
    if p >= min_size:
        return PrimeArith(p)
    k = 1
    while p ** k < min_size:
        k += 1
    # keep the log tables small; one degree less still leaves >= 1000 elements
    if p ** k > max_table and k > 1:
        k -= 1
    return PrimeArith(p) if k == 1 else ZechArith(p, k)


def det_is_nonzero(matrix, arith) -> bool:
    """Gaussian elimination over the arithmetic ``arith``."""
    M = [list(r) for r in matrix]
    n = len(M)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != arith.zero), None)
        if piv is None:
            return False
        M[col], M[piv] = M[piv], M[col]
        inv = arith.inv(M[col][col])
        for r in range(col + 1, n):
            if M[r][col] != arith.zero:
                f = arith.neg(arith.mul(M[r][col], inv))
                M[r] = [arith.add(a, arith.mul(f, b)) for a, b in zip(M[r], M[col])]
    return True
