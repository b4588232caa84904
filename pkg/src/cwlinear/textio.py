"""Line-oriented text format for rings, ideals, matrices and complexes.

    ring 31013 8
    ideal x1*x6-x2*x5, x1*x7-x3*x5,
          x2*x7-x3*x6
    matrix 3 2 rowdeg 0 0 1 coldeg 1 2 entries: x2 0 / -x1 x2^2 / 0 -x1
    complex 6 facets: 123 124 135
    degrees 3 2: 1 0 / 2 1 / 2 1
    symdegrees 3: 0 1 1          (half integers may be written 1/2)

A line starting with whitespace continues the previous statement.  ``#``
starts a comment.  Variables are x1..xn; ``*`` between factors is optional.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .algebra import (DEFAULT_PRIME, DEGREVLEX, DegreeMatrix, HomogeneousMatrix, Polynomial,
                      PrimeField)


class ParseError(ValueError):
    def __init__(self, message, line=None, col=None):
        self.line, self.col = line, col
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {col}" if col is not None else "") + ": "
        super().__init__(where + message)


# ---------------------------------------------------------------------------
# formatting


def format_monomial(m, coeff=1) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    body = "*".join(parts)
    if not body:
        return str(coeff)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{coeff}*{body}"


def format_polynomial(f: Polynomial, order=DEGREVLEX) -> str:
    if f.is_zero():
        return "0"
    out = ""
    for c, m in f.terms(order):
        c = f.field.signed(c)
        s = format_monomial(m, c)
        if not out:
            out = s
        elif s.startswith("-"):
            out += s
        else:
            out += "+" + s
    return out


def format_ideal(gens) -> str:
    return ", ".join(format_polynomial(g) for g in gens)


def format_matrix(A: HomogeneousMatrix) -> str:
    r, c = A.shape
    rows = " / ".join(" ".join(format_polynomial(e) for e in row) for row in A.entries)
    return (f"matrix {r} {c} rowdeg {' '.join(map(str, A.row_degrees))} "
            f"coldeg {' '.join(map(str, A.col_degrees))} entries: {rows}")


def format_complex(delta) -> str:
    sep = "" if delta.n < 10 else ","
    facets = " ".join(sep.join(str(v) for v in sorted(f)) for f in delta.facets)
    return f"complex {delta.n} facets: {facets}"


def format_degree_matrix(D: DegreeMatrix) -> str:
    if D.twice_d is not None:
        vals = [str(x // 2) if x % 2 == 0 else f"{x}/2" for x in D.twice_d]
        return f"symdegrees {len(vals)}: {' '.join(vals)}"
    r, c = D.shape
    return f"degrees {r} {c}: " + " / ".join(" ".join(map(str, row)) for row in D.rows)


# ---------------------------------------------------------------------------
# polynomial parsing

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x(?P<idx>\d+))|(?P<op>[-+*^()]))")


class _PolyParser:
    def __init__(self, text, field, nvars, line=None, offset=0):
        self.text = text
        self.field = field
        self.n = nvars
        self.line = line
        self.offset = offset
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                col = len(text) - len(text[pos:].lstrip())
                self.fail(f"unexpected character {text[col]!r}", col)
            start = m.start() + len(m.group(0)) - len(m.group(0).lstrip())
            if m.group("num") is not None:
                self.tokens.append(("num", int(m.group("num")), start))
            elif m.group("var") is not None:
                self.tokens.append(("var", int(m.group("idx")), start))
            else:
                self.tokens.append(("op", m.group("op"), start))
            pos = m.end()
        self.i = 0

    def fail(self, msg, col=None):
        raise ParseError(msg, self.line, None if col is None else col + 1 + self.offset)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> Polynomial:
        if not self.tokens:
            self.fail("empty polynomial", 0)
        f = self.expr()
        t = self.peek()
        if t is not None:
            self.fail(f"unexpected {t[1]!r}", t[2])
        return f

    def expr(self):
        sign = 1
        t = self.peek()
        if t and t[0] == "op" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        acc = self.term().scale(sign)
        while True:
            t = self.peek()
            if t and t[0] == "op" and t[1] in "+-":
                self.take()
                term = self.term()
                acc = acc + term if t[1] == "+" else acc - term
            else:
                return acc

    def term(self):
        acc = self.power()
        while True:
            t = self.peek()
            if t and t[0] == "op" and t[1] == "*":
                self.take()
                acc = acc * self.power()
            elif t and (t[0] in ("num", "var") or t[1] == "("):
                acc = acc * self.power()
            else:
                return acc

    def power(self):
        base = self.atom()
        t = self.peek()
        if t and t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e is None or e[0] != "num":
                self.fail("expected an exponent after '^'", t[2])
            return base ** e[1]
        return base

    def atom(self):
        t = self.take()
        if t is None:
            self.fail("unexpected end of polynomial", len(self.text))
        kind, val, col = t
        if kind == "num":
            return Polynomial.constant(self.field, self.n, val)
        if kind == "var":
            if not 1 <= val <= self.n:
                self.fail(f"variable x{val} outside x1..x{self.n}", col)
            return Polynomial.variable(self.field, self.n, val)
        if val == "(":
            f = self.expr()
            close = self.take()
            if close is None or close[1] != ")":
                self.fail("missing ')'", col)
            return f
        self.fail(f"unexpected {val!r}", col)


def parse_polynomial(text, field=DEFAULT_PRIME, nvars=None, line=None, offset=0) -> Polynomial:
    if isinstance(field, int):
        field = PrimeField(field)
    if nvars is None:
        found = [int(k) for k in re.findall(r"x(\d+)", text)]
        nvars = max(found, default=1)
    return _PolyParser(text, field, nvars, line, offset).parse()


def _split_top(text, sep):
    """Split on ``sep`` outside parentheses, returning (piece, offset) pairs."""
    out, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            out.append((text[start:i], start))
            start = i + 1
    out.append((text[start:], start))
    return out


# ---------------------------------------------------------------------------
# documents


@dataclass
class Document:
    """Everything declared in one input text."""

    field: PrimeField = None
    nvars: int = None
    char_given: bool = False
    ideal: list = None
    matrix: HomogeneousMatrix = None
    complex: object = None
    degree_matrix: DegreeMatrix = None
    extras: dict = dc_field(default_factory=dict)

    def graded_ideal(self):
        from .groebner import GradedIdeal
        if self.ideal is None:
            raise ValueError("input declares no ideal")
        return GradedIdeal(self.ideal, self.field, self.nvars)

    def subject(self):
        for v in (self.ideal, self.matrix, self.complex, self.degree_matrix):
            if v is not None:
                return v
        raise ValueError("input declares nothing")


def _statements(text):
    """Join continuation lines; yield (line number, column offset, text)."""
    current = None
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if raw[:1].isspace() and current is not None:
            current[2] += " " + line.strip()
            continue
        if current is not None:
            yield tuple(current)
        current = [no, 0, line.strip()]
    if current is not None:
        yield tuple(current)


def _ints(words, line, what):
    try:
        return [int(w) for w in words]
    except ValueError:
        raise ParseError(f"expected integers in {what}, got {' '.join(words)!r}", line) from None


def parse_document(text: str, default_char=DEFAULT_PRIME) -> Document:
    doc = Document()
    for line, _, stmt in _statements(text):
        head, _, rest = stmt.partition(" ")
        head = head.lower()
        if head == "ring":
            vals = _ints(rest.split(), line, "ring declaration")
            if len(vals) != 2:
                raise ParseError("ring needs a characteristic and a number of variables", line)
            try:
                doc.field = PrimeField(vals[0])
            except ValueError as exc:
                raise ParseError(str(exc), line) from None
            doc.nvars = vals[1]
            doc.char_given = True
        elif head == "vars":
            doc.nvars = _ints(rest.split(), line, "vars")[0]
        elif head == "ideal":
            _ensure_ring(doc, default_char, rest)
            gens = []
            base = len("ideal ")
            for piece, off in _split_top(rest, ","):
                if not piece.strip():
                    continue
                g = parse_polynomial(piece, doc.field, doc.nvars, line, base + off)
                if not g.is_homogeneous():
                    raise ParseError(f"generator {piece.strip()!r} is not homogeneous", line)
                gens.append(g)
            doc.ideal = gens
        elif head == "matrix":
            _ensure_ring(doc, default_char, rest)
            doc.matrix = _parse_matrix(rest, doc, line)
        elif head == "complex":
            doc.complex = _parse_complex(rest, line)
            if doc.nvars is None:
                doc.nvars = doc.complex.n
            if doc.field is None:
                doc.field = PrimeField(default_char)
        elif head == "degrees":
            doc.degree_matrix = _parse_degrees(rest, line)
        elif head == "symdegrees":
            doc.degree_matrix = _parse_symdegrees(rest, line)
        else:
            raise ParseError(f"unknown statement {head!r}", line, 1)
    if doc.field is None:
        doc.field = PrimeField(default_char)
    return doc


def _ensure_ring(doc, default_char, rest):
    if doc.field is None:
        doc.field = PrimeField(default_char)
    if doc.nvars is None:
        found = [int(k) for k in re.findall(r"x(\d+)", rest)]
        doc.nvars = max(found, default=1)


def _parse_matrix(rest, doc, line):
    head, sep, body = rest.partition("entries:")
    if not sep:
        raise ParseError("matrix needs 'entries:'", line)
    words = head.split()
    try:
        r, c = int(words[0]), int(words[1])
        ri = words.index("rowdeg")
        ci = words.index("coldeg")
    except (ValueError, IndexError):
        raise ParseError("matrix header must read 'matrix R C rowdeg ... coldeg ...'", line) from None
    rowdeg = _ints(words[ri + 1:ci], line, "rowdeg")
    coldeg = _ints(words[ci + 1:], line, "coldeg")
    if len(rowdeg) != r or len(coldeg) != c:
        raise ParseError(f"expected {r} row degrees and {c} column degrees", line)
    rows = [row.split() for row in body.split("/")]
    if len(rows) != r or any(len(row) != c for row in rows):
        raise ParseError(f"entries do not form a {r}x{c} grid (separate rows with '/', entries with spaces)", line)
    grid = [[parse_polynomial(e, doc.field, doc.nvars, line) for e in row] for row in rows]
    try:
        return HomogeneousMatrix(grid, rowdeg, coldeg, doc.field, doc.nvars)
    except ValueError as exc:
        raise ParseError(str(exc), line) from None


def _parse_complex(rest, line):
    from .monomial import SimplicialComplex
    head, sep, body = rest.partition("facets:")
    if not sep:
        raise ParseError("complex needs 'facets:'", line)
    n = _ints(head.split(), line, "complex")[0]
    facets = []
    for word in body.split():
        verts = word.split(",") if "," in word else list(word)
        facets.append(_ints(verts, line, "facet"))
    try:
        return SimplicialComplex(n, facets)
    except ValueError as exc:
        raise ParseError(str(exc), line) from None


def _parse_degrees(rest, line):
    head, sep, body = rest.partition(":")
    if not sep:
        raise ParseError("degrees needs ':'", line)
    r, c = _ints(head.split(), line, "degrees")
    rows = [_ints(row.split(), line, "degree row") for row in body.split("/")]
    if len(rows) != r or any(len(row) != c for row in rows):
        raise ParseError(f"degree entries do not form a {r}x{c} grid", line)
    try:
        return DegreeMatrix(rows)
    except ValueError as exc:
        raise ParseError(str(exc), line) from None


def _parse_symdegrees(rest, line):
    head, sep, body = rest.partition(":")
    if not sep:
        raise ParseError("symdegrees needs ':'", line)
    m = _ints(head.split(), line, "symdegrees")[0]
    vals = []
    for w in body.split():
        try:
            v = Fraction(w)
        except ValueError:
            raise ParseError(f"bad half integer {w!r}", line) from None
        if (2 * v).denominator != 1:
            raise ParseError(f"{w} is not a half integer", line)
        vals.append(int(2 * v))
    if len(vals) != m:
        raise ParseError(f"expected {m} values", line)
    try:
        return DegreeMatrix.symmetric(vals)
    except ValueError as exc:
        raise ParseError(str(exc), line) from None


def format_document(doc: Document) -> str:
    lines = [f"ring {doc.field.p} {doc.nvars}"]
    if doc.ideal is not None:
        lines.append("ideal " + format_ideal(doc.ideal))
    if doc.matrix is not None:
        lines.append(format_matrix(doc.matrix))
    if doc.complex is not None:
        lines.append(format_complex(doc.complex))
    if doc.degree_matrix is not None:
        lines.append(format_degree_matrix(doc.degree_matrix))
    return "\n".join(lines) + "\n"
