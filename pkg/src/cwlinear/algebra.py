"""Prime fields, monomials, monomial orders, polynomials and homogeneous matrices.

Monomials are dense exponent tuples.  The heavy engines (Groebner bases,
resolutions) work on a packed integer encoding of monomials produced by
:class:`MonomialCodec`, in which multiplication is integer addition and the
monomial order is integer comparison.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import comb
from operator import add, ge, sub

DEFAULT_PRIME = 31013


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field Z/pZ for a prime 2 <= p < 2^31."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not isinstance(self.p, int) or not 2 <= self.p < 2**31 or not _is_prime(self.p):
            raise ValueError(f"characteristic must be a prime below 2^31, got {self.p!r}")

    def __call__(self, value: int) -> int:
        return value % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a prime field")
        return pow(a, -1, self.p)

    def signed(self, a: int) -> int:
        """Representative of ``a`` in (-p/2, p/2], used for printing."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a

    def __str__(self):
        return f"F_{self.p}"


# ---------------------------------------------------------------------------
# Monomials and orders


def degree(a) -> int:
    return sum(a)


def mono_mul(a, b):
    return tuple(map(add, a, b))


def mono_div(a, b):
    """a / b, assuming b divides a."""
    return tuple(map(sub, a, b))


def mono_divides(b, a) -> bool:
    """True if b divides a."""
    return all(map(ge, a, b))


def mono_lcm(a, b):
    return tuple(map(max, a, b))


def max_index(a) -> int:
    """1-based index of the last variable dividing ``a`` (0 for the unit monomial)."""
    for i in range(len(a) - 1, -1, -1):
        if a[i]:
            return i + 1
    return 0


def monomials_of_degree(n: int, d: int):
    """All exponent tuples of total degree d in n variables, lex-descending."""
    if d < 0:
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def count_monomials(n: int, d: int) -> int:
    if d < 0:
        return 0
    return comb(n + d - 1, d)


class MonomialOrder(enum.Enum):
    """Degree reverse lexicographic or lexicographic order, x1 > x2 > ... > xn."""

    DEGREVLEX = "degrevlex"
    LEX = "lex"

    @classmethod
    def parse(cls, value) -> "MonomialOrder":
        if isinstance(value, cls):
            return value
        aliases = {"degrevlex": cls.DEGREVLEX, "revlex": cls.DEGREVLEX, "grevlex": cls.DEGREVLEX,
                   "rev": cls.DEGREVLEX, "lex": cls.LEX}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise ValueError(f"unknown monomial order {value!r}") from None

    def key(self, a):
        """Sort key: larger key means larger monomial."""
        if self is MonomialOrder.LEX:
            return tuple(a)
        return (sum(a),) + tuple(-x for x in reversed(a))

    def __str__(self):
        return self.value


DEGREVLEX = MonomialOrder.DEGREVLEX
LEX = MonomialOrder.LEX


def compare(a, b, order=DEGREVLEX) -> int:
    """Return -1, 0 or 1 as the monomial a is smaller, equal or larger than b."""
    if len(a) != len(b):
        raise ValueError(f"arity mismatch: {len(a)} vs {len(b)}")
    order = MonomialOrder.parse(order)
    if order is LEX:
        for x, y in zip(a, b):
            if x != y:
                return 1 if x > y else -1
        return 0
    da, db = sum(a), sum(b)
    if da != db:
        return 1 if da > db else -1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            # last nonzero entry of a - b negative means a is larger
            return 1 if x < y else -1
    return 0


_BITS = 16
_EXP_LIMIT = 1 << (_BITS - 1)


class MonomialCodec:
    """Packs exponent tuples into integers ordered like the monomial order.

    lex:       P(a) = sum a_i B^(n-i)              (x1 most significant)
    degrevlex: P(a) = |a| B^n - sum a_i B^(i-1)    (xn most significant)

    Both are additive, so P(ab) = P(a) + P(b).  Each field has a guard bit,
    which makes divisibility a single subtraction.
    """

    def __init__(self, nvars: int, order=DEGREVLEX):
        self.n = nvars
        self.order = MonomialOrder.parse(order)
        self.lex = self.order is LEX
        self.top = 1 << (_BITS * nvars)
        self.guard = sum(1 << (_BITS * i + _BITS - 1) for i in range(nvars))
        self._mask = (1 << _BITS) - 1
        if self.lex:
            self._shifts = [_BITS * (nvars - 1 - i) for i in range(nvars)]
        else:
            self._shifts = [_BITS * i for i in range(nvars)]

    def encode(self, a) -> int:
        q = 0
        for e, s in zip(a, self._shifts):
            if e >= _EXP_LIMIT:
                raise OverflowError("exponent too large for packed monomials")
            q |= e << s
        if self.lex:
            return q
        return sum(a) * self.top - q

    def fields(self, P: int) -> int:
        if self.lex:
            return P
        return -((-P) // self.top) * self.top - P

    def decode(self, P: int):
        q = self.fields(P)
        m = self._mask
        return tuple((q >> s) & m for s in self._shifts)

    def degree(self, P: int) -> int:
        if self.lex:
            return sum(self.decode(P))
        return -((-P) // self.top)

    def divides(self, b: int, a: int) -> bool:
        """True if the monomial b divides a."""
        g = self.guard
        return ((self.fields(a) | g) - self.fields(b)) & g == g

    def lcm(self, a: int, b: int) -> int:
        return self.encode(mono_lcm(self.decode(a), self.decode(b)))

    def coprime(self, a: int, b: int) -> bool:
        return not any(x and y for x, y in zip(self.decode(a), self.decode(b)))


# ---------------------------------------------------------------------------
# Polynomials


class Polynomial:
    """A polynomial over a prime field, stored as {exponent tuple: coefficient}.

    Values are immutable.  Term lists are produced on demand, sorted under the
    order requested by the caller.
    """

    __slots__ = ("field", "nvars", "_terms", "__weakref__")

    def __init__(self, field: PrimeField, nvars: int, terms=None):
        if isinstance(field, int):
            field = PrimeField(field)
        self.field = field
        self.nvars = nvars
        clean = {}
        p = field.p
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, c in items:
                mono = tuple(mono)
                if len(mono) != nvars:
                    raise ValueError(f"monomial {mono} has wrong arity (expected {nvars})")
                c = (clean.get(mono, 0) + c) % p
                if c:
                    clean[mono] = c
                else:
                    clean.pop(mono, None)
        self._terms = clean

    @classmethod
    def _raw(cls, field, nvars, terms):
        obj = cls.__new__(cls)
        obj.field = field
        obj.nvars = nvars
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars)

    @classmethod
    def constant(cls, field, nvars, c):
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, field, exps, coeff=1):
        return cls(field, len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, field, nvars, i):
        """The variable x_i, 1-based."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls(field, nvars, {tuple(e): 1})

    @property
    def p(self):
        return self.field.p

    def as_dict(self):
        return dict(self._terms)

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, mono) -> int:
        return self._terms.get(tuple(mono), 0)

    def terms(self, order=DEGREVLEX):
        """List of (coefficient, exponents), strictly descending under ``order``."""
        key = MonomialOrder.parse(order).key
        return [(self._terms[m], m) for m in sorted(self._terms, key=key, reverse=True)]

    def leading_monomial(self, order=DEGREVLEX):
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=MonomialOrder.parse(order).key)

    def leading_coefficient(self, order=DEGREVLEX):
        return self._terms[self.leading_monomial(order)]

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def _check(self, other):
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")
        if self.nvars != other.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.field, self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        out = dict(self._terms)
        for m, c in other._terms.items():
            c = (out.get(m, 0) + c) % p
            if c:
                out[m] = c
            else:
                out.pop(m, None)
        return Polynomial._raw(self.field, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return Polynomial._raw(self.field, self.nvars, {m: p - c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "Polynomial":
        p = self.field.p
        c %= p
        if not c:
            return Polynomial._raw(self.field, self.nvars, {})
        return Polynomial._raw(self.field, self.nvars, {m: v * c % p for m, v in self._terms.items()})

    def shift(self, mono, c: int = 1) -> "Polynomial":
        """c * x^mono * self."""
        p = self.field.p
        c %= p
        if not c:
            return Polynomial._raw(self.field, self.nvars, {})
        return Polynomial._raw(self.field, self.nvars,
                               {mono_mul(m, mono): v * c % p for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        p = self.field.p
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(map(add, m1, m2))
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return Polynomial._raw(self.field, self.nvars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.field, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self, order=DEGREVLEX) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient(order)))

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.field, self.nvars,
                               {m: c for m, c in self._terms.items() if sum(m) == d})

    def evaluate(self, point) -> int:
        p = self.field.p
        total = 0
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * pow(x, e, p) % p
            total += v
        return total % p

    def substitute(self, images) -> "Polynomial":
        """Replace x_i by the polynomial images[i-1]."""
        result = Polynomial.zero(self.field, len(images) and images[0].nvars or self.nvars)
        cache = {}
        for m, c in self._terms.items():
            term = Polynomial.constant(self.field, result.nvars, c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = images[i] ** e
                    term = term * cache[key]
            result = result + term
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self == Polynomial.constant(self.field, self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.field.p, self.nvars, frozenset(self._terms.items())))

    def __str__(self):
        from .textio import format_polynomial
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self})"

    # packed conversion used by the engines
    def pack(self, codec: MonomialCodec) -> dict:
        enc = codec.encode
        return {enc(m): c for m, c in self._terms.items()}

    @classmethod
    def unpack(cls, field, codec: MonomialCodec, packed: dict) -> "Polynomial":
        dec = codec.decode
        return cls._raw(field, codec.n, {dec(m): c for m, c in packed.items()})


def linear_form(field, coeffs) -> Polynomial:
    n = len(coeffs)
    terms = {}
    for i, c in enumerate(coeffs):
        if c % field.p:
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
    return Polynomial(field, n, terms)


# ---------------------------------------------------------------------------
# Homogeneous matrices and degree matrices


class DegreeMatrix:
    """A grid of formal entry degrees u_ij = f_j - g_i.

    For symmetric data, ``twice_d`` holds 2*d_1 <= ... <= 2*d_m and the grid is
    u_ij = d_i + d_j.
    """

    def __init__(self, rows, twice_d=None):
        self.rows = tuple(tuple(int(x) for x in r) for r in rows)
        if self.rows and len({len(r) for r in self.rows}) != 1:
            raise ValueError("ragged degree matrix")
        self.twice_d = tuple(twice_d) if twice_d is not None else None
        self.check_homogeneity()

    @classmethod
    def from_degrees(cls, row_degrees, col_degrees):
        return cls([[f - g for f in col_degrees] for g in row_degrees])

    @classmethod
    def symmetric(cls, twice_d):
        twice_d = tuple(int(x) for x in twice_d)
        if len({x % 2 for x in twice_d}) > 1:
            raise ValueError("half-integers d_i must all be integral or all be proper halves")
        rows = [[(a + b) // 2 for b in twice_d] for a in twice_d]
        return cls(rows, twice_d=twice_d)

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def check_homogeneity(self):
        r, c = self.shape
        for i in range(r):
            for j in range(c):
                if self.rows[i][j] - self.rows[i][0] - self.rows[0][j] + self.rows[0][0]:
                    raise ValueError(
                        f"degree matrix is not homogeneous at ({i + 1},{j + 1}): "
                        "entries must have the form f_j - g_i")

    def row_degrees(self):
        """A choice of (g_i) with u_ij = f_j - g_i, normalized by g_1 = 0."""
        return [self.rows[0][0] - self.rows[i][0] for i in range(self.shape[0])]

    def col_degrees(self):
        return [self.rows[0][j] for j in range(self.shape[1])]

    def is_normalized(self) -> bool:
        r, c = self.shape
        for i in range(r):
            for j in range(c):
                if j + 1 < c and self.rows[i][j] < self.rows[i][j + 1]:
                    return False
                if i > 0 and self.rows[i][j] < self.rows[i - 1][j]:
                    return False
        return True

    def permuted(self, row_perm, col_perm) -> "DegreeMatrix":
        return DegreeMatrix([[self.rows[i][j] for j in col_perm] for i in row_perm])

    def __eq__(self, other):
        if isinstance(other, DegreeMatrix):
            return self.rows == other.rows
        return self.rows == tuple(tuple(r) for r in other)

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"DegreeMatrix({[list(r) for r in self.rows]})"


def normalize_degree_matrix(D):
    """Permute rows and columns so entries weakly decrease left to right and
    weakly increase top to bottom.

    Returns (normalized matrix, row permutation, column permutation), where
    row i of the result is row ``row_perm[i]`` of the input.  Sorting is
    stable, so tied rows/columns keep their relative order.
    """
    if not isinstance(D, DegreeMatrix):
        D = DegreeMatrix(D)
    r, c = D.shape
    row_perm = sorted(range(r), key=lambda i: D.rows[i])
    col_perm = sorted(range(c), key=lambda j: tuple(-D.rows[i][j] for i in range(r)))
    return D.permuted(row_perm, col_perm), row_perm, col_perm


class HomogeneousMatrix:
    """An r x c matrix of homogeneous polynomials describing a graded map.

    ``row_degrees`` (g_i) and ``col_degrees`` (f_j) satisfy
    deg entry(i, j) = f_j - g_i for every nonzero entry; positions whose formal
    degree is <= 0 must hold zero.
    """

    def __init__(self, entries, row_degrees, col_degrees, field=None, nvars=None, check=True):
        rows = [list(r) for r in entries]
        self.row_degrees = tuple(row_degrees)
        self.col_degrees = tuple(col_degrees)
        r, c = len(self.row_degrees), len(self.col_degrees)
        if len(rows) != r or any(len(row) != c for row in rows):
            raise ValueError(f"entries do not form a {r}x{c} grid")
        if field is None or nvars is None:
            for row in rows:
                for e in row:
                    if isinstance(e, Polynomial):
                        field, nvars = e.field, e.nvars
                        break
                if field is not None:
                    break
        if field is None:
            raise ValueError("cannot infer the ring of an all-zero matrix; pass field and nvars")
        if isinstance(field, int):
            field = PrimeField(field)
        self.field, self.nvars = field, nvars
        zero = Polynomial.zero(field, nvars)
        self.entries = tuple(
            tuple(e if isinstance(e, Polynomial) else (zero if e == 0 else Polynomial.constant(field, nvars, e))
                  for e in row)
            for row in rows)
        if check:
            self.check()

    def check(self):
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if e.is_zero():
                    continue
                u = self.col_degrees[j] - self.row_degrees[i]
                if u <= 0:
                    raise ValueError(f"entry ({i + 1},{j + 1}) has formal degree {u} <= 0 and must be zero")
                if not e.is_homogeneous() or e.degree != u:
                    raise ValueError(f"entry ({i + 1},{j + 1}) = {e} is not homogeneous of degree {u}")

    @property
    def shape(self):
        return (len(self.row_degrees), len(self.col_degrees))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def formal_degree(self, i, j) -> int:
        return self.col_degrees[j] - self.row_degrees[i]

    def degree_matrix(self) -> DegreeMatrix:
        return DegreeMatrix.from_degrees(self.row_degrees, self.col_degrees)

    def permuted(self, row_perm, col_perm) -> "HomogeneousMatrix":
        return HomogeneousMatrix(
            [[self.entries[i][j] for j in col_perm] for i in row_perm],
            [self.row_degrees[i] for i in row_perm],
            [self.col_degrees[j] for j in col_perm],
            self.field, self.nvars, check=False)

    def normalized(self):
        """Return (matrix, row_perm, col_perm) with its degree matrix normalized."""
        _, rp, cp = normalize_degree_matrix(self.degree_matrix())
        return self.permuted(rp, cp), rp, cp

    def transpose(self) -> "HomogeneousMatrix":
        r, c = self.shape
        return HomogeneousMatrix([[self.entries[i][j] for i in range(r)] for j in range(c)],
                                 [-f for f in self.col_degrees], [-g for g in self.row_degrees],
                                 self.field, self.nvars, check=False)

    def is_symmetric(self) -> bool:
        r, c = self.shape
        return r == c and all(self.entries[i][j] == self.entries[j][i] for i in range(r) for j in range(i))

    def is_linear(self) -> bool:
        return all(e.is_zero() or e.degree == 1 for row in self.entries for e in row)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def delete(self, rows=(), cols=()) -> "HomogeneousMatrix":
        rp = [i for i in range(self.shape[0]) if i not in set(rows)]
        cp = [j for j in range(self.shape[1]) if j not in set(cols)]
        return self.permuted(rp, cp)

    def __matmul__(self, other: "HomogeneousMatrix"):
        """Matrix product as a plain grid of polynomials."""
        r, k = self.shape
        k2, c = other.shape
        if k != k2:
            raise ValueError("shape mismatch in matrix product")
        zero = Polynomial.zero(self.field, self.nvars)
        out = []
        for i in range(r):
            row = []
            for j in range(c):
                acc = zero
                for t in range(k):
                    a, b = self.entries[i][t], other.entries[t][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return out

    def minors(self, k: int):
        """All nonzero k x k minors, rows and columns taken in increasing order."""
        from .linalg import polynomial_det
        r, c = self.shape
        if k == 0:
            return [Polynomial.constant(self.field, self.nvars, 1)]
        out = []
        for rows in itertools.combinations(range(r), k):
            for cols in itertools.combinations(range(c), k):
                d = polynomial_det([[self.entries[i][j] for j in cols] for i in rows])
                if d:
                    out.append(d)
        return out

    def maximal_minors(self):
        return self.minors(min(self.shape))

    def __eq__(self, other):
        if not isinstance(other, HomogeneousMatrix):
            return NotImplemented
        return (self.entries == other.entries and self.row_degrees == other.row_degrees
                and self.col_degrees == other.col_degrees)

    def __hash__(self):
        return hash((self.entries, self.row_degrees, self.col_degrees))

    def __repr__(self):
        body = " / ".join(" ".join(str(e) for e in row) for row in self.entries)
        return f"HomogeneousMatrix({body}; rowdeg={list(self.row_degrees)}, coldeg={list(self.col_degrees)})"


def linearize(A: HomogeneousMatrix) -> HomogeneousMatrix:
    """Replace every entry of degree at least two by zero."""
    zero = Polynomial.zero(A.field, A.nvars)
    return HomogeneousMatrix(
        [[e if e.is_zero() or e.degree <= 1 else zero for e in row] for row in A.entries],
        A.row_degrees, A.col_degrees, A.field, A.nvars, check=False)
