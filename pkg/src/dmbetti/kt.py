"""Degree-zero theory over Q[t]: cone functionals, pair decompositions,
and homology barcodes.

Betti vectors of finite-length differential modules over Q[t] with a = 0
land in the cone cut out by the coordinate functionals sigma_j and by

    tau_j(b) = -b_j + sum over i != j of b_i.

decompose writes a vector of that cone as a positive combination of pair
vectors e_k + e_l by a two-phase greedy loop, and the pairs come out
forming a chain (componentwise nondecreasing in emission order). On the
module side, barcode computes the multiset of homology summands
A(-p)/(t^q) of a finite-length FreeDM, and betti_from_barcode closes the
loop: each bar contributes e_p + e_{p+q}.

>>> v = BettiVector({0: 3, 1: 4, 2: 2, 3: 5})
>>> tau(1, v)
Fraction(6, 1)
>>> [(str(p.coeff), p.k, p.l) for p in decompose(v)]
[('2', 0, 1), ('1', 0, 3), ('2', 1, 3), ('2', 2, 3)]
>>> is_chain(decompose(v))
True
"""

import math
from fractions import Fraction

from .algebra import DomainError, rational_to_str
from .betti import BettiVector
from . import dm, linalg


class NotInCone(DomainError):
    pass


class NotFiniteLength(DomainError):
    pass


def tau(j, v):
    """-v[j] plus the sum of the other entries.

    >>> tau(0, BettiVector({0: 1}))
    Fraction(-1, 1)
    >>> tau(7, BettiVector.zero())
    Fraction(0, 1)
    """
    return v.total() - 2 * v[int(j)]


def sigma(j, v):
    """The j-entry.

    >>> sigma(2, BettiVector({0: 3, 1: 4, 2: 2, 3: 5}))
    Fraction(2, 1)
    """
    return v[int(j)]


def _tau_violation(v):
    for j in sorted(v.support()):
        t = tau(j, v)
        if t < 0:
            return j, t
    return None


def in_cone_T(v):
    """Membership in the cone cut out by all sigma_j >= 0, tau_j >= 0.

    Entries of a BettiVector are positive by construction and tau at an
    index outside the support equals the total, so only tau at support
    indices can fail; that makes the infinite functional family finitely
    checkable.

    >>> in_cone_T(BettiVector({0: 3, 1: 4, 2: 2, 3: 5}))
    True
    >>> in_cone_T(BettiVector({1: 1}))
    False
    >>> in_cone_T(BettiVector.zero())
    True
    """
    return _tau_violation(v) is None


class PurePair:
    """A positive multiple of the pair vector e_k + e_l, k < l."""

    __slots__ = ("k", "l", "coeff")

    def __init__(self, k, l, coeff):
        self.k, self.l = int(k), int(l)
        self.coeff = Fraction(coeff)
        if self.k >= self.l:
            raise ValueError("need k < l")
        if self.coeff <= 0:
            raise ValueError("coefficient must be positive")

    def vector(self):
        return BettiVector({self.k: self.coeff, self.l: self.coeff})

    def __eq__(self, other):
        return (isinstance(other, PurePair) and self.k == other.k
                and self.l == other.l and self.coeff == other.coeff)

    def __repr__(self):
        return "PurePair(%d, %d, %s)" % (self.k, self.l, self.coeff)

    def to_json(self):
        return {"coeff": rational_to_str(self.coeff),
                "pair": [self.k, self.l]}

    @classmethod
    def from_json(cls, obj):
        k, l = obj["pair"]
        return cls(k, l, Fraction(str(obj["coeff"])))


def _pair_of(p):
    if isinstance(p, PurePair):
        return p.k, p.l
    k, l = p
    return int(k), int(l)


def is_chain(pairs):
    """Whether the pairs, in the order given, are componentwise
    nondecreasing.

    >>> is_chain([(0, 1), (0, 3), (1, 3), (2, 3)])
    True
    >>> is_chain([(0, 3), (1, 2)])
    False
    """
    seq = [_pair_of(p) for p in pairs]
    return all(a[0] <= b[0] and a[1] <= b[1]
               for a, b in zip(seq, seq[1:]))


def decompose(v):
    """Write v as a positive combination of pair vectors e_k + e_l.

    Raises NotInCone (with the violated functional) outside the cone.
    Internally the vector is scaled to integer entries with even total,
    which keeps every working quantity an integer; the coefficients are
    scaled back at the end.

    Phase I: while every tau is positive, pair off the two smallest
    support indices k < l with coefficient min(b_k, b_l, tau_j / 2)
    where tau_j is minimal (smallest index on ties). Each iteration
    keeps the vector in the cone and either empties a support slot or
    drives some tau to zero. Phase II: with j the smallest zero-tau
    index, b_j equals the sum of the other entries, so pairing every
    other support index against j empties the vector in one pass.

    >>> [(str(p.coeff), p.k, p.l) for p in decompose(BettiVector({0: 1, 1: 1, 2: 1, 3: 1}))]
    [('1', 0, 1), ('1', 2, 3)]
    >>> decompose(BettiVector.zero())
    []
    >>> decompose(BettiVector({1: 1}))
    Traceback (most recent call last):
        ...
    dmbetti.kt.NotInCone: tau_1 = -1 < 0
    """
    bad = _tau_violation(v)
    if bad is not None:
        j, t = bad
        raise NotInCone("tau_%d = %s < 0" % (j, rational_to_str(t)),
                        j=j, functional="tau", value=rational_to_str(t))
    support = sorted(v.support())
    if not support:
        return []
    scale = math.lcm(*[v[j].denominator for j in support])
    if sum(v[j] * scale for j in support) % 2:
        scale *= 2
    b = {j: int(v[j] * scale) for j in support}
    out = []
    # Phase I; the iteration bound holds because non-final iterations
    # either empty a slot or drop the support tau-sum by at least 2
    total = sum(b.values())
    bound = len(support) + sum(total - 2 * c for c in b.values()) // 2
    iters = 0
    while True:
        live = [j for j in support if b[j] > 0]
        if not live:
            break
        total = sum(b[j] for j in live)
        taus = {j: total - 2 * b[j] for j in live}
        jmin = min(live, key=lambda j: (taus[j], j))
        if taus[jmin] == 0:
            break
        assert len(live) >= 2
        k, l = live[0], live[1]
        c = min(b[k], b[l], taus[jmin] // 2)
        out.append((c, k, l))
        b[k] -= c
        b[l] -= c
        iters += 1
        assert iters <= bound
    # Phase II
    live = [j for j in support if b[j] > 0]
    if live:
        total = sum(b[j] for j in live)
        j = min(i for i in live if total - 2 * b[i] == 0)
        for i in live:
            if i == j:
                continue
            out.append((b[i],) + tuple(sorted((i, j))))
            b[j] -= b[i]
            b[i] = 0
        assert b[j] == 0
    return [PurePair(k, l, Fraction(c, scale)) for c, k, l in out]


class Barcode:
    """Multiset of bars (p, q): homology summand A(-p)/(t^q), q >= 1."""

    __slots__ = ("bars",)

    def __init__(self, bars):
        clean = {}
        for (p, q), mult in dict(bars).items():
            p, q, mult = int(p), int(q), int(mult)
            if q < 1:
                raise ValueError("bar length must be >= 1")
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult:
                clean[(p, q)] = mult
        self.bars = clean

    @classmethod
    def from_pairs(cls, pairs):
        counts = {}
        for p, q in pairs:
            counts[(p, q)] = counts.get((p, q), 0) + 1
        return cls(counts)

    def total_length(self):
        return sum(q * m for (_, q), m in self.bars.items())

    def __eq__(self, other):
        return isinstance(other, Barcode) and self.bars == other.bars

    def __bool__(self):
        return bool(self.bars)

    def __repr__(self):
        body = ", ".join("(%d,%d):%d" % (p, q, m)
                         for (p, q), m in sorted(self.bars.items()))
        return "Barcode({%s})" % body

    def to_json(self):
        return {"bars": [{"p": p, "q": q, "mult": m}
                         for (p, q), m in sorted(self.bars.items())]}

    @classmethod
    def from_json(cls, obj):
        return cls({(int(b["p"]), int(b["q"])): int(b["mult"])
                    for b in obj["bars"]})


class GradedAction:
    """Finite graded Q-vector space with a degree-one action: spaces
    V_lo, ..., V_hi of the given dimensions and matrices
    maps[i]: V_{lo+i} -> V_{lo+i+1}; the action out of V_hi is zero.
    """

    __slots__ = ("lo", "dims", "maps")

    def __init__(self, lo, dims, maps):
        self.lo = int(lo)
        self.dims = tuple(int(n) for n in dims)
        self.maps = tuple(tuple(tuple(Fraction(x) for x in row)
                                for row in m) for m in maps)
        if len(self.maps) != max(len(self.dims) - 1, 0):
            raise ValueError("need one map per consecutive degree pair")
        for i, m in enumerate(self.maps):
            if len(m) != self.dims[i + 1] or any(
                    len(row) != self.dims[i] for row in m):
                raise ValueError("map %d has the wrong shape" % i)

    @property
    def hi(self):
        return self.lo + len(self.dims) - 1

    def dim(self, d):
        if self.lo <= d <= self.hi:
            return self.dims[d - self.lo]
        return 0

    def total_dim(self):
        return sum(self.dims)

    def rank_stat(self, p, q):
        """rank of the q-fold action out of degree p (dimension at q=0)."""
        if q == 0:
            return self.dim(p)
        if self.dim(p) == 0 or p + q > self.hi:
            return 0
        n = self.dim(p)
        comp = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
        for d in range(p, p + q):
            step = self.maps[d - self.lo]
            comp = [[sum((step[r][k] * comp[k][c] for k in range(len(comp))),
                         Fraction(0)) for c in range(n)]
                    for r in range(self.dim(d + 1))]
        return linalg.rank(comp, n)

    def bars(self):
        """Bar multiplicities by inclusion-exclusion on the ranks:

            N_{p,q} = r_{p,q-1} - r_{p,q} - r_{p-1,q} + r_{p-1,q+1}

        with r_{p,q} = rank_stat(p, q). On a single bar (P, Q) the rank
        is 1 exactly when [p, p+q] fits inside [P, P+Q-1], and the
        alternating sum picks out p = P, q = Q.
        """
        counts = {}
        for p in range(self.lo, self.hi + 1):
            for q in range(1, self.hi - p + 2):
                n = (self.rank_stat(p, q - 1) - self.rank_stat(p, q)
                     - self.rank_stat(p - 1, q) + self.rank_stat(p - 1, q + 1))
                assert n >= 0
                if n:
                    counts[(p, q)] = n
        out = Barcode(counts)
        assert out.total_length() == self.total_dim()
        return out


def homology_action(D):
    """Homology of the degree slices of D with the induced t-action.

    Over Q[t] with a = 0 the slice of the differential in degree d is
    the coefficient matrix restricted to generators of degree <= d, and
    multiplication by t embeds the degree-d slice of the module into the
    degree-(d+1) slice as the coordinate subspace indexed by the old
    generators. A homology basis in degree d is a set of kernel vectors
    completing a basis of the boundary space; the action is read off by
    solving pad(h) = (combination of degree-(d+1) basis) + boundary.
    """
    dm._require_kt(D)
    n = D.size
    if n == 0:
        return GradedAction(0, (), ())
    lam = dm.coefficient_matrix(D)
    maxexp = 0
    for r in range(n):
        for c in range(n):
            if not D.entry(r, c).is_zero:
                maxexp = max(maxexp, D.gens[c] - D.gens[r])
    lo = min(D.gens)
    top = max(D.gens)
    hi = top + maxexp + 1
    index, hbasis, cols = {}, {}, {}
    dims = []
    for d in range(lo, hi + 1):
        idx = [i for i in range(n) if D.gens[i] <= d]
        index[d] = idx
        sub = [[lam[r][c] for c in idx] for r in idx]
        cols[d] = sub
        kernel = linalg.nullspace(sub, len(idx))
        # accumulate boundary columns, then kernel vectors extending them
        echelon = []
        for c in range(len(idx)):
            _extends(echelon, [sub[r][c] for r in range(len(idx))])
        hb = [k for k in kernel if _extends(echelon, k)]
        hbasis[d] = hb
        dims.append(len(hb))
        if d >= top and hb:
            raise NotFiniteLength(
                "homology persists in degree %d and beyond" % d, degree=d)
    maps = []
    for d in range(lo, hi):
        idx, nxt = index[d], index[d + 1]
        slot = {gen: s for s, gen in enumerate(nxt)}
        hb, hb_next = hbasis[d], hbasis[d + 1]
        width = len(hb_next) + len(nxt)
        rows = [[Fraction(0)] * width for _ in nxt]
        for c, h in enumerate(hb_next):
            for r in range(len(nxt)):
                rows[r][c] = h[r]
        for c in range(len(nxt)):
            for r in range(len(nxt)):
                rows[r][len(hb_next) + c] = cols[d + 1][r][c]
        block = [[Fraction(0)] * len(hb) for _ in hb_next]
        for c, h in enumerate(hb):
            rhs = [Fraction(0)] * len(nxt)
            for s, gen in enumerate(idx):
                rhs[slot[gen]] = h[s]
            sol = linalg.solve(rows, rhs, width)
            assert sol is not None
            for r in range(len(hb_next)):
                block[r][c] = sol[r]
        maps.append(block)
    return GradedAction(lo, dims, maps)


def _extends(echelon, vec):
    """Reduce vec against the echelon rows in place; if a nonzero
    remainder survives, normalize, insert, and report True."""
    v = list(vec)
    for pivot, row in echelon:
        if v[pivot]:
            coeff = v[pivot]
            for i in range(len(v)):
                v[i] -= coeff * row[i]
    for pivot in range(len(v)):
        if v[pivot]:
            inv = 1 / v[pivot]
            row = [x * inv for x in v]
            echelon.append((pivot, row))
            return True
    return False


def barcode(D):
    """Bars of the homology of a finite-length FreeDM over Q[t], a = 0.

    >>> from .algebra import Ring, Poly
    >>> R = Ring.univariate()
    >>> z, t3 = Poly.zero(R), Poly.monomial(R, (3,), 1)
    >>> D = dm.FreeDM(R, 0, (0, 3), [[z, t3], [z, z]])
    >>> barcode(D)
    Barcode({(0,3):1})
    """
    dm.validate(D)
    if not dm.is_finite_length_kt(D):
        half = linalg.rank(dm.coefficient_matrix(D), D.size)
        raise NotFiniteLength(
            "homology is infinite-dimensional: rank %d != %d/2"
            % (half, D.size), rank=half, size=D.size)
    return homology_action(D).bars()


def betti_from_barcode(B):
    """Each bar (p, q) contributes a generator in degree p and one in
    degree p + q.

    >>> betti_from_barcode(Barcode({(0, 3): 1})).entries
    {0: Fraction(1, 1), 3: Fraction(1, 1)}
    """
    v = BettiVector.zero()
    for (p, q), mult in B.bars.items():
        v = v + BettiVector({p: mult, p + q: mult})
    return v
