"""Betti vectors, Betti tables, and the degree-a flattening.

A Betti table is a sparse array indexed by (homological index i,
internal degree j); a Betti vector is indexed by internal degree only.
The degree a flattening forgets the homological grading:

    b_j = sum_i beta_{i, a*i + j}

so a generator at (i, d) lands at vector degree d - a*i.

>>> koszul2 = BettiTable({(0, 0): 1, (1, 1): 2, (2, 2): 1})
>>> flatten(koszul2, 0).entries == {0: 1, 1: 2, 2: 1}
True
>>> flatten(koszul2, 2).entries == {-2: 1, -1: 2, 0: 1}
True
>>> flatten(koszul2, 1).entries == {0: 4}
True
"""

from fractions import Fraction

from .algebra import DomainError, rational_from_str, rational_to_str


class BettiVector:
    """Sparse degree -> multiplicity map; stored values are positive,
    zeros are elided. Negative degrees are allowed (degree-2 folds of
    the Koszul complex on two variables need them)."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        clean = {}
        for j, v in entries.items():
            v = Fraction(v)
            if v < 0:
                raise ValueError("Betti vectors have nonnegative entries")
            if v:
                clean[int(j)] = v
        self.entries = clean

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def from_dense(cls, values, start=0):
        return cls({start + k: v for k, v in enumerate(values)})

    def to_dense(self, window):
        p, q = window
        return [self[j] for j in range(p, q + 1)]

    def __getitem__(self, j):
        return self.entries.get(j, Fraction(0))

    def support(self):
        return tuple(sorted(self.entries))

    def total(self):
        return sum(self.entries.values(), Fraction(0))

    def __add__(self, other):
        out = dict(self.entries)
        for j, v in other.entries.items():
            out[j] = out.get(j, 0) + v
        return BettiVector(out)

    def scale(self, c):
        c = Fraction(c)
        return BettiVector({j: c * v for j, v in self.entries.items()})

    def __eq__(self, other):
        return isinstance(other, BettiVector) and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __bool__(self):
        return bool(self.entries)

    def __repr__(self):
        inner = ", ".join("%d: %s" % (j, self.entries[j])
                          for j in self.support())
        return "BettiVector({%s})" % inner

    def to_json(self):
        return {"entries": {str(j): rational_to_str(v)
                            for j, v in sorted(self.entries.items())}}

    @classmethod
    def from_json(cls, obj):
        return cls({int(j): rational_from_str(v)
                    for j, v in obj["entries"].items()})


def twist(v, k):
    """Shift every degree by k: twist(v, k)[j + k] = v[j]."""
    return BettiVector({j + int(k): val for j, val in v.entries.items()})


class BettiTable:
    """Sparse (i, j) -> multiplicity map with i >= 0; positive values
    only, zeros elided."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        clean = {}
        for (i, j), v in entries.items():
            v = Fraction(v)
            if v < 0:
                raise ValueError("Betti tables have nonnegative entries")
            i, j = int(i), int(j)
            if i < 0:
                raise ValueError("homological index must be >= 0")
            if v:
                clean[(i, j)] = v
        self.entries = clean

    def __getitem__(self, key):
        return self.entries.get(key, Fraction(0))

    def __add__(self, other):
        out = dict(self.entries)
        for key, v in other.entries.items():
            out[key] = out.get(key, 0) + v
        return BettiTable(out)

    def total(self):
        return sum(self.entries.values(), Fraction(0))

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __repr__(self):
        inner = ", ".join("(%d, %d): %s" % (i, j, self.entries[(i, j)])
                          for i, j in sorted(self.entries))
        return "BettiTable({%s})" % inner

    def to_json(self):
        return [{"i": i, "j": j, "v": rational_to_str(v)}
                for (i, j), v in sorted(self.entries.items())]

    @classmethod
    def from_json(cls, items):
        table = {}
        for item in items:
            key = (int(item["i"]), int(item["j"]))
            table[key] = table.get(key, 0) + rational_from_str(item["v"])
        return cls(table)


def flatten(table, a):
    """Degree-a flattening: vector entry at j is sum_i table[i, a*i+j]."""
    a = int(a)
    out = {}
    for (i, j), v in table.entries.items():
        d = j - a * i
        out[d] = out.get(d, 0) + v
    return BettiVector(out)


class BadDegreeSequence(DomainError):
    pass


def check_degree_sequence(degrees):
    """Validate strict increase; returns the sequence as a tuple."""
    degrees = tuple(int(d) for d in degrees)
    for u, v in zip(degrees, degrees[1:]):
        if u >= v:
            raise BadDegreeSequence(
                "degree sequence must be strictly increasing",
                degrees=list(degrees))
    return degrees


def seq_leq(s, u):
    """Componentwise comparison of equal-length degree sequences."""
    s, u = check_degree_sequence(s), check_degree_sequence(u)
    if len(s) != len(u):
        raise ShapeError("degree sequences of different lengths")
    return all(a <= b for a, b in zip(s, u))


class ShapeError(DomainError):
    pass
