"""Free graded differential modules presented by square matrices.

A FreeDM is a free module D = (+)_i S(-g_i) together with a square
matrix d of twist a presenting a differential D -> D(a) with d*d = 0.
Complexes enter through fold: a complex C_* becomes the differential
module (+)_i C_i(i*a), so a generator of C_i in internal degree e sits
in fold degree e - i*a.

Minimalization cancels unit entries: a nonzero constant at (r, c) with
r != c is removed by the Schur complement

    d'[i][j] = d[i][j] - d[i][c] * d[r][j] / u

on the remaining indices, which again squares to zero. Over Q this is
the matrix form of splitting off a trivial summand, and the generator
degrees of the result are the Betti vector.

>>> K = koszul(2, (1, 1))
>>> fold(K, 0).gens
(0, 1, 1, 2)
>>> fold(K, 2).gens
(0, -1, -1, -2)
>>> betti_vector(fold(K, 1)).entries
{0: Fraction(4, 1)}
"""

from fractions import Fraction
from itertools import combinations

from .algebra import (DomainError, GradedMatrix, Poly, Ring, matrix_mul)
from .betti import BettiVector
from . import linalg


class NotSquareZero(DomainError):
    pass


class NotMinimal(DomainError):
    pass


class PivotOnDiagonal(DomainError):
    pass


class WrongRing(DomainError):
    pass


class NonzeroDegree(DomainError):
    pass


class FreeDM:
    """Validated presentation is not enforced at construction; call
    validate() (or go through the CLI, which always does)."""

    __slots__ = ("ring", "a", "gens", "matrix")

    def __init__(self, ring, a, gens, rows):
        self.ring = ring
        self.a = int(a)
        self.gens = tuple(int(g) for g in gens)
        if isinstance(rows, GradedMatrix):
            m = rows
            if (m.row_degrees != self.gens or m.col_degrees != self.gens
                    or m.twist != self.a or m.ring != ring):
                raise ValueError("matrix bookkeeping disagrees with gens/a")
            self.matrix = m
        else:
            self.matrix = GradedMatrix(ring, self.gens, self.gens, self.a, rows)

    @property
    def size(self):
        return len(self.gens)

    def entry(self, r, c):
        return self.matrix.entries[r][c]

    def __eq__(self, other):
        return (isinstance(other, FreeDM) and self.ring == other.ring
                and self.a == other.a and self.gens == other.gens
                and self.matrix == other.matrix)

    def __repr__(self):
        return "FreeDM(%r, a=%d, gens=%r)" % (self.ring, self.a, self.gens)

    def to_json(self):
        return {"ring": self.ring.to_json(), "a": self.a,
                "gens": list(self.gens),
                "matrix": [[str(p) for p in row]
                           for row in self.matrix.entries]}

    @classmethod
    def from_json(cls, obj):
        ring = Ring.from_json(obj["ring"])
        rows = [[Poly.parse(s, ring) for s in row] for row in obj["matrix"]]
        return cls(ring, int(obj["a"]), obj["gens"], rows)


def validate(D):
    """Check homogeneity of every entry and d*d = 0."""
    D.matrix.check_homogeneous()
    square = matrix_mul(D.matrix, D.matrix)
    if not square.is_zero:
        r, c = square.first_nonzero()
        raise NotSquareZero(
            "d*d has nonzero entry %s at (%d, %d)"
            % (square.entries[r][c], r, c),
            row=r, col=c, entry=str(square.entries[r][c]))


class ComplexRep:
    """Free complex: generator degrees per homological index plus twist-0
    maps C_{i+1} -> C_i with consecutive compositions zero."""

    __slots__ = ("ring", "modules", "maps")

    def __init__(self, ring, modules, maps):
        self.ring = ring
        self.modules = tuple(tuple(int(d) for d in degs) for degs in modules)
        self.maps = tuple(maps)
        if len(self.maps) != max(len(self.modules) - 1, 0):
            raise ValueError("need one map per consecutive pair of modules")
        for i, m in enumerate(self.maps):
            if (m.row_degrees != self.modules[i]
                    or m.col_degrees != self.modules[i + 1] or m.twist != 0):
                raise ValueError("map %d has wrong degree bookkeeping" % i)

    def validate(self):
        for m in self.maps:
            m.check_homogeneous()
        for i in range(len(self.maps) - 1):
            if not matrix_mul(self.maps[i], self.maps[i + 1]).is_zero:
                raise NotSquareZero(
                    "composition of maps %d and %d is nonzero" % (i, i + 1))


def koszul(n, exponents, ring=None):
    """Koszul complex on (v_1^e_1, ..., v_n^e_n). Module i is free on
    the i-element subsets of the variables, with the usual signs.

    >>> K = koszul(2, (1, 1))
    >>> [str(p) for p in K.maps[0].entries[0]]
    ['x1', 'x2']
    >>> [str(row[0]) for row in K.maps[1].entries]
    ['-x2', 'x1']
    """
    exponents = tuple(int(e) for e in exponents)
    if n < 1 or len(exponents) != n or any(e < 1 for e in exponents):
        raise ValueError("need n >= 1 positive exponents")
    if ring is None:
        ring = Ring.multivariate(n)
    if ring.nvars != n:
        raise ValueError("ring has wrong number of variables")
    subsets = [list(combinations(range(n), i)) for i in range(n + 1)]
    modules = [[sum(exponents[s] for s in subset) for subset in level]
               for level in subsets]
    maps = []
    for i in range(n):
        rows_ix = {s: k for k, s in enumerate(subsets[i])}
        block = [[Poly.zero(ring) for _ in subsets[i + 1]]
                 for _ in subsets[i]]
        for c, subset in enumerate(subsets[i + 1]):
            for pos, s in enumerate(subset):
                rest = subset[:pos] + subset[pos + 1:]
                exps = [0] * n
                exps[s] = exponents[s]
                sign = -1 if pos % 2 else 1
                block[rows_ix[rest]][c] = Poly.monomial(ring, exps, sign)
        maps.append(GradedMatrix(ring, modules[i], modules[i + 1], 0, block))
    return ComplexRep(ring, modules, maps)


def fold(C, a):
    """Collapse a complex to a FreeDM of degree a: generators of C_i
    move to internal degree (their degree) - i*a, the maps become the
    superdiagonal blocks of the square differential."""
    a = int(a)
    offsets, gens = [], []
    for i, degs in enumerate(C.modules):
        offsets.append(len(gens))
        gens.extend(d - i * a for d in degs)
    z = Poly.zero(C.ring)
    rows = [[z] * len(gens) for _ in gens]
    for i, m in enumerate(C.maps):
        r0, c0 = offsets[i], offsets[i + 1]
        for r in range(m.nrows):
            for c in range(m.ncols):
                rows[r0 + r][c0 + c] = m.entries[r][c]
    D = FreeDM(C.ring, a, gens, rows)
    validate(D)
    return D


def cancel_step(D):
    """One unit cancellation: find the first (row-major) nonzero constant
    entry off the diagonal and take the Schur complement, dropping both
    generators. Returns the smaller FreeDM, or None when no off-diagonal
    constant remains."""
    pivot = None
    for r in range(D.size):
        for c in range(D.size):
            if r == c:
                continue
            u = D.entry(r, c).constant_value()
            if u:
                pivot = (r, c, u)
                break
        if pivot:
            break
    if pivot is None:
        return None
    r, c, u = pivot
    keep = [i for i in range(D.size) if i not in (r, c)]
    inv = 1 / u
    rows = []
    for i in keep:
        row = []
        for j in keep:
            corr = D.entry(i, c) * D.entry(r, j)
            row.append(D.entry(i, j) - corr.scale(inv))
        rows.append(row)
    return FreeDM(D.ring, D.a, [D.gens[i] for i in keep], rows)


def minimalize(D):
    """Cancel units until the differential lands in the maximal ideal.

    A constant on the diagonal after that is impossible for a validated
    differential: d*d = 0 makes (d_rr)^2 a sum of products d_rk * d_kr
    with k != r, and with no off-diagonal constants left each product
    has positive degree, so the constant term of (d_rr)^2 is 0.
    """
    while True:
        smaller = cancel_step(D)
        if smaller is None:
            break
        D = smaller
    for r in range(D.size):
        if D.entry(r, r).constant_value():
            raise PivotOnDiagonal(
                "constant diagonal entry at (%d, %d); input cannot have "
                "had d*d = 0" % (r, r), row=r, col=r)
    return D


def is_minimal(D):
    return all(not D.entry(r, c).constant_value()
               for r in range(D.size) for c in range(D.size))


def betti_vector(D):
    """Generator-degree multiplicities of a minimal presentation."""
    for r in range(D.size):
        for c in range(D.size):
            if D.entry(r, c).constant_value():
                raise NotMinimal(
                    "constant entry %s at (%d, %d); minimalize first"
                    % (D.entry(r, c), r, c), row=r, col=c)
    counts = {}
    for g in D.gens:
        counts[g] = counts.get(g, 0) + 1
    return BettiVector(counts)


def _require_kt(D):
    if not D.ring.is_univariate:
        raise WrongRing("expected the univariate ring Q[t]")
    if D.a != 0:
        raise NonzeroDegree("expected a degree 0 differential", a=D.a)


def coefficient_matrix(D):
    """Scalar matrix L with d = T^-1 L T for T = diag(t^g_i). Over Q[t]
    with a = 0 homogeneity makes every entry a monomial c * t^(g_c-g_r),
    so L is just the coefficients."""
    _require_kt(D)
    out = []
    for r in range(D.size):
        row = []
        for c in range(D.size):
            p = D.entry(r, c)
            row.append(Fraction(0) if p.is_zero
                       else next(iter(p.terms.values())))
        out.append(row)
    return out


def is_finite_length_kt(D):
    """Finite length homology over Q[t] means d becomes invertible on
    the cokernel side after inverting t, i.e. rank over Q(t) is exactly
    half the number of generators. Elimination on the polynomial matrix
    never mixes t-powers (entries are monomials), so the rank equals the
    rank of the coefficient matrix."""
    _require_kt(D)
    n = D.size
    if n % 2:
        return False
    return linalg.rank(coefficient_matrix(D), n) == n // 2


def random_finite_length_dm(rng, max_bars=4, max_start=3, max_len=3,
                            max_trivial=2, transvections=6):
    """Seeded random finite-length FreeDM over Q[t] with a = 0.

    Construction: a block sum of bars [[0, t^q], [0, 0]] on generators
    (p, p+q), plus split pairs [[0, 1], [0, 0]] on equal degrees (these
    keep the homology untouched but make the presentation non-minimal),
    conjugated by a random permutation and random graded transvections
    I + c * t^(g_j - g_i) * E_ij. Finite length holds by construction.

    Returns (D, bars) where bars is the multiset of (p, q) summands, as
    a sorted list with repeats.
    """
    ring = Ring.univariate()
    bars = [(rng.randrange(max_start + 1), 1 + rng.randrange(max_len))
            for _ in range(1 + rng.randrange(max_bars))]
    gens, blocks = [], []
    for p, q in bars:
        blocks.append((len(gens), q))
        gens.extend((p, p + q))
    for _ in range(rng.randrange(max_trivial + 1)):
        g = rng.randrange(max_start + max_len + 1)
        blocks.append((len(gens), 0))
        gens.extend((g, g))
    z = Poly.zero(ring)
    rows = [[z] * len(gens) for _ in gens]
    for at, q in blocks:
        rows[at][at + 1] = Poly.monomial(ring, (q,), 1)
    # random permutation of the generators
    perm = list(range(len(gens)))
    rng.shuffle(perm)
    gens2 = [gens[p] for p in perm]
    rows2 = [[rows[perm[r]][perm[c]] for c in range(len(gens))]
             for r in range(len(gens))]
    d = GradedMatrix(ring, gens2, gens2, 0, rows2)
    # conjugate by transvections; entry (i, j) needs degree g_j - g_i >= 0
    for _ in range(transvections):
        i, j = rng.randrange(len(gens2)), rng.randrange(len(gens2))
        if i == j or gens2[j] < gens2[i]:
            continue
        c = rng.choice([1, -1, 2, -2])
        mono = Poly.monomial(ring, (gens2[j] - gens2[i],), c)
        U = GradedMatrix.identity(ring, gens2)
        rowsU = [list(row) for row in U.entries]
        rowsU[i][j] = rowsU[i][j] + mono
        U = GradedMatrix(ring, gens2, gens2, 0, rowsU)
        rowsV = [list(row) for row in GradedMatrix.identity(ring, gens2).entries]
        rowsV[i][j] = rowsV[i][j] - mono
        V = GradedMatrix(ring, gens2, gens2, 0, rowsV)
        d = matrix_mul(matrix_mul(V, d), U)
    D = FreeDM(ring, 0, gens2, d.entries)
    return D, sorted(bars)
