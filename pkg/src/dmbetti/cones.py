"""Exact rational polyhedral cones over a degree window.

A ConeV is a list of generators (dense vectors over the window); a
ConeH is the same cone by facet inequalities plus, when the cone is not
full-dimensional, the equations of its linear span.

v_to_h runs the double description method on the polar cone
{y : <g, y> >= 0 for all generators g}: starting from the full space,
each generator constraint either pivots a lineality direction into a
ray or splits the ray list, combining only adjacent ray pairs (the
combinatorial test: no third ray is tight on the common tight set).
The surviving rays are the facet normals and the surviving lineality is
the span's orthogonal complement.

membership runs a phase-one simplex with exact pivoting and Bland's
rule; both answers come with certificates that are re-verified before
being returned.

>>> C = ConeV((0, 2), [(1, 1, 0), (1, 0, 1), (0, 1, 1)])
>>> v_to_h(C).inequalities
((-1, 1, 1), (1, -1, 1), (1, 1, -1))
>>> membership([1, 1, 0], C)["inside"]
True
"""

from fractions import Fraction

from .algebra import DomainError, rational_to_str, rational_from_str
from . import linalg


class ShapeMismatch(DomainError):
    pass


class ConeV:
    """Cone spanned by finitely many nonzero vectors over a window."""

    __slots__ = ("window", "generators")

    def __init__(self, window, generators):
        p, q = int(window[0]), int(window[1])
        if p > q:
            raise ValueError("empty window")
        self.window = (p, q)
        gens = []
        for g in generators:
            g = tuple(Fraction(x) for x in g)
            if len(g) != self.width:
                raise ShapeMismatch(
                    "generator has %d entries, window needs %d"
                    % (len(g), self.width))
            if not any(g):
                raise ValueError("zero generator")
            gens.append(g)
        self.generators = tuple(gens)

    @property
    def width(self):
        return self.window[1] - self.window[0] + 1

    def to_json(self):
        return {"window": list(self.window),
                "generators": [[rational_to_str(x) for x in g]
                               for g in self.generators]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["window"],
                   [[rational_from_str(x) for x in g]
                    for g in obj["generators"]])


class ConeH:
    """Facet inequalities <v, x> >= 0 plus span equations <v, x> = 0,
    all scaled to coprime integers."""

    __slots__ = ("window", "inequalities", "equations")

    def __init__(self, window, inequalities, equations):
        self.window = (int(window[0]), int(window[1]))
        self.inequalities = tuple(tuple(int(x) for x in v)
                                  for v in inequalities)
        self.equations = tuple(tuple(int(x) for x in v) for v in equations)

    def to_json(self):
        return {"window": list(self.window),
                "inequalities": [list(v) for v in self.inequalities],
                "equations": [list(v) for v in self.equations]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["window"], obj["inequalities"], obj["equations"])


def _unit_rows(w):
    return [[Fraction(int(i == j)) for j in range(w)] for i in range(w)]


def v_to_h(C):
    """Facet description of the conical hull of C's generators."""
    gens = [list(g) for g in C.generators]
    if not gens:
        raise ValueError("need at least one generator")
    w = C.width
    lineality = _unit_rows(w)
    rays = []  # (vector, frozenset of tight constraint indices)
    for gi, g in enumerate(gens):
        vals = [linalg.dot(l, g) for l in lineality]
        pivot = next((i for i in range(len(lineality)) if vals[i]), None)
        if pivot is not None:
            l0 = [x / vals[pivot] for x in lineality[pivot]]
            lineality = [
                [a - vals[i] * b for a, b in zip(lineality[i], l0)]
                for i in range(len(lineality)) if i != pivot]
            rays = [([a - linalg.dot(r, g) * b for a, b in zip(r, l0)],
                     tight | {gi}) for r, tight in rays]
            rays.append((l0, frozenset(range(gi))))
            continue
        plus, zero, minus = [], [], []
        for r, tight in rays:
            v = linalg.dot(r, g)
            if v > 0:
                plus.append((r, tight, v))
            elif v < 0:
                minus.append((r, tight, v))
            else:
                zero.append((r, tight | {gi}))
        kept = [(r, tight) for r, tight, _ in plus] + zero
        for rp, tp, vp in plus:
            for rm, tm, vm in minus:
                common = tp & tm
                if any(common <= t for r, t, _ in plus + minus
                       if r is not rp and r is not rm):
                    continue
                if any(common <= t for r, t in zero):
                    continue
                vec = [vp * b - vm * a for a, b in zip(rp, rm)]
                tight = frozenset(
                    k for k in range(gi + 1)
                    if not linalg.dot(vec, gens[k]))
                kept.append((vec, tight))
        rays = kept
    # project ray representatives onto the span of the generators
    ortho = []
    for l in lineality:
        v = list(l)
        for o in ortho:
            f = linalg.dot(v, o) / linalg.dot(o, o)
            v = [a - f * b for a, b in zip(v, o)]
        if any(v):
            ortho.append(v)
    ineqs = set()
    for r, _ in rays:
        v = list(r)
        for o in ortho:
            f = linalg.dot(v, o) / linalg.dot(o, o)
            v = [a - f * b for a, b in zip(v, o)]
        ineqs.add(tuple(linalg.primitive(v)))
    eq_rows, pivots = linalg.rref(lineality, w)
    equations = [tuple(linalg.primitive(eq_rows[i]))
                 for i in range(len(pivots))]
    return ConeH(C.window, sorted(ineqs), equations)


def membership(x, C):
    """Decide x in cone(generators) with an exact certificate.

    Returns {"inside": True, "coefficients": {index: Fraction}} with
    x = sum coeff * generator, or {"inside": False, "functional": f}
    with <f, g> >= 0 for every generator and <f, x> < 0. Either
    certificate is re-verified before returning.
    """
    w = C.width
    x = [Fraction(v) for v in x]
    if len(x) != w:
        raise ShapeMismatch("vector has %d entries, window needs %d"
                            % (len(x), w))
    gens = C.generators
    n = len(gens)
    signs = [1 if x[r] >= 0 else -1 for r in range(w)]
    # tableau: columns = n coefficients, w artificials, rhs
    rows = []
    for r in range(w):
        row = [signs[r] * gens[i][r] for i in range(n)]
        row += [Fraction(int(j == r)) for j in range(w)]
        row.append(signs[r] * x[r])
        rows.append(row)
    basis = [n + r for r in range(w)]
    obj = [Fraction(0)] * (n + w + 1)
    for j in range(n + w + 1):
        obj[j] = (Fraction(int(n <= j < n + w))
                  - sum((rows[r][j] for r in range(w)), Fraction(0)))
    while obj[-1] != 0:
        enter = next((j for j in range(n + w) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for r in range(w):
            if rows[r][enter] > 0:
                ratio = rows[r][-1] / rows[r][enter]
                if best is None or ratio < best[0] or (
                        ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        assert best is not None
        r = best[1]
        inv = 1 / rows[r][enter]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(w):
            if i != r and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        if obj[enter]:
            f = obj[enter]
            obj = [a - f * b for a, b in zip(obj, rows[r])]
        basis[r] = enter
    if obj[-1] == 0:
        coeffs = {}
        for r, b in enumerate(basis):
            if b < n and rows[r][-1]:
                coeffs[b] = coeffs.get(b, 0) + rows[r][-1]
        recombined = [sum((c * gens[i][r] for i, c in coeffs.items()),
                          Fraction(0)) for r in range(w)]
        assert recombined == x and all(c > 0 for c in coeffs.values())
        return {"inside": True, "coefficients": coeffs}
    f = [-signs[r] * (1 - obj[n + r]) for r in range(w)]
    assert all(linalg.dot(f, g) >= 0 for g in gens)
    assert linalg.dot(f, x) < 0
    return {"inside": False, "functional": f}


def equals_positive_orthant(C):
    """Whether the spanned cone is exactly the nonnegative orthant of
    the window: the generators must be nonnegative and every standard
    basis vector must be inside."""
    if any(v < 0 for g in C.generators for v in g):
        return False
    for slot in range(C.width):
        e = [Fraction(int(i == slot)) for i in range(C.width)]
        if not membership(e, C)["inside"]:
            return False
    return True
