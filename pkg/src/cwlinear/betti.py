"""Graded Betti tables."""
from __future__ import annotations

from collections import Counter


class BettiTable:
    """Finitely supported map (i, j) -> beta_{i,j} for the module ``I`` or ``S/I``.

    Tables of S/I and I interconvert by beta_{i+1,j}(S/I) = beta_{i,j}(I).
    """

    def __init__(self, entries=None, module="S/I"):
        if module not in ("S/I", "I"):
            raise ValueError(f"module tag must be 'S/I' or 'I', got {module!r}")
        self.module = module
        clean = {}
        for (i, j), b in dict(entries or {}).items():
            if b < 0:
                raise ValueError("Betti numbers are non-negative")
            if b:
                clean[(int(i), int(j))] = int(b)
        self.entries = clean

    @classmethod
    def from_shifts(cls, shifts, module="S/I"):
        """Build a table from per-index lists of generator degrees."""
        entries = Counter()
        for i, degs in enumerate(shifts):
            for j in degs:
                entries[(i, j)] += 1
        return cls(entries, module)

    def __getitem__(self, ij):
        return self.entries.get(tuple(ij), 0)

    def items(self):
        return sorted(self.entries.items())

    def to_ideal(self) -> "BettiTable":
        if self.module == "I":
            return self
        return BettiTable({(i - 1, j): b for (i, j), b in self.entries.items() if i >= 1}, "I")

    def to_quotient(self) -> "BettiTable":
        if self.module == "S/I":
            return self
        entries = {(i + 1, j): b for (i, j), b in self.entries.items()}
        entries[(0, 0)] = 1
        return BettiTable(entries, "S/I")

    def as_module(self, module) -> "BettiTable":
        return self.to_ideal() if module == "I" else self.to_quotient()

    def totals(self):
        """Total Betti numbers (beta_0, beta_1, ...)."""
        if not self.entries:
            return ()
        top = max(i for i, _ in self.entries)
        out = [0] * (top + 1)
        for (i, _), b in self.entries.items():
            out[i] += b
        return tuple(out)

    def shifts(self, i):
        """Sorted multiset of internal degrees at homological index i."""
        return [j for (k, j), b in sorted(self.entries.items()) if k == i for _ in range(b)]

    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("regularity of the zero module is undefined")
        return max(j - i for i, j in self.entries)

    def strands(self):
        """Sorted distinct values of j - i in the support."""
        return sorted({j - i for i, j in self.entries})

    def is_linear(self, d=None) -> bool:
        s = self.strands()
        return len(s) == 1 and (d is None or s[0] == d)

    def length(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def dominated_by(self, other: "BettiTable") -> bool:
        other = other.as_module(self.module)
        return all(b <= other[ij] for ij, b in self.entries.items())

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.as_module(self.module).entries

    def __hash__(self):
        return hash((self.module, frozenset(self.entries.items())))

    def to_json(self):
        return {"module": self.module,
                "entries": [{"i": i, "j": j, "beta": b} for (i, j), b in self.items()]}

    @classmethod
    def from_json(cls, data):
        return cls({(e["i"], e["j"]): e["beta"] for e in data["entries"]}, data["module"])

    def format(self) -> str:
        """Macaulay2-style table: row r lists beta_{i, i+r}."""
        if not self.entries:
            return "(zero table)"
        top = self.length()
        rows = self.strands()
        lo, hi = rows[0], rows[-1]
        width = max(len(str(b)) for b in self.entries.values()) + 1
        head = "      " + "".join(str(i).rjust(width) for i in range(top + 1))
        lines = [head, "total:" + "".join(str(t).rjust(width) for t in self.totals())]
        for r in range(lo, hi + 1):
            cells = []
            for i in range(top + 1):
                b = self[(i, i + r)]
                cells.append((str(b) if b else ".").rjust(width))
            lines.append(f"{r:>5}:" + "".join(cells))
        return "\n".join(lines)

    def __repr__(self):
        return f"BettiTable({self.module}, {dict(self.items())})"
