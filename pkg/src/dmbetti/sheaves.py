"""Total cohomology ranks of sheaves on projective space.

gamma(spec, j) is the sum of the ranks of all cohomology of the twist
by j. Two kinds of spec: a line bundle O(d) on P^m, where the value is
a binomial coefficient on either side of the no-cohomology gap
-m <= d+j <= -1, and a supernatural sheaf given by the strictly
decreasing integer roots of its Hilbert polynomial, where the value is
|prod (j - z_i)| / m!. The two agree when the roots are the m
consecutive integers -d-1, ..., -d-m. m = 0 is allowed (the point P^0,
gamma constant 1); it is what degenerate searches need.

>>> [str(gamma(LineBundle(1, 0), j)) for j in (0, -1, -2)]
['1', '0', '1']
>>> [str(gamma(Supernatural((0, -3)), j)) for j in range(-4, 4)]
['2', '0', '1', '1', '0', '2', '5', '9']
"""

from fractions import Fraction
from math import comb, factorial

from .algebra import DomainError


class BadSheafSpec(DomainError):
    pass


class LineBundle:
    """O(d) on P^m."""

    __slots__ = ("m", "d")

    def __init__(self, m, d):
        self.m, self.d = int(m), int(d)
        if self.m < 0:
            raise BadSheafSpec("projective space of negative dimension")

    def __eq__(self, other):
        return (isinstance(other, LineBundle) and self.m == other.m
                and self.d == other.d)

    def __hash__(self):
        return hash(("O", self.m, self.d))

    def __repr__(self):
        return "LineBundle(%d, %d)" % (self.m, self.d)

    def to_json(self):
        return {"line_bundle": {"m": self.m, "d": self.d}}


class Supernatural:
    """Sheaf on P^m with supernatural cohomology; determined by the m
    strictly decreasing integer roots of its Hilbert polynomial."""

    __slots__ = ("roots",)

    def __init__(self, roots):
        self.roots = tuple(int(z) for z in roots)
        if any(a <= b for a, b in zip(self.roots, self.roots[1:])):
            raise BadSheafSpec("roots must be strictly decreasing",
                              roots=list(self.roots))

    @property
    def m(self):
        return len(self.roots)

    def __eq__(self, other):
        return isinstance(other, Supernatural) and self.roots == other.roots

    def __hash__(self):
        return hash(("SN", self.roots))

    def __repr__(self):
        return "Supernatural(%r)" % (self.roots,)

    def to_json(self):
        return {"supernatural": {"roots": list(self.roots)}}


def sheaf_from_json(obj):
    if "line_bundle" in obj:
        lb = obj["line_bundle"]
        return LineBundle(lb["m"], lb["d"])
    if "supernatural" in obj:
        return Supernatural(obj["supernatural"]["roots"])
    raise BadSheafSpec("expected line_bundle or supernatural",
                      keys=sorted(obj))


def gamma(spec, j):
    """Sum of the cohomology ranks of the twist by j; always >= 0.

    >>> gamma(LineBundle(2, -5), 0)
    Fraction(6, 1)
    >>> gamma(Supernatural(()), 17)
    Fraction(1, 1)
    """
    j = int(j)
    if isinstance(spec, LineBundle):
        e = spec.d + j
        if e >= 0:
            return Fraction(comb(e + spec.m, spec.m))
        if e <= -spec.m - 1:
            return Fraction(comb(-e - 1, spec.m))
        return Fraction(0)
    prod = 1
    for z in spec.roots:
        prod *= j - z
    return Fraction(abs(prod), factorial(spec.m))


def gamma_window(spec, window):
    """gamma on every degree of the window, zeros elided.

    >>> gamma_window(LineBundle(1, 0), (-2, 0))
    {-2: Fraction(1, 1), 0: Fraction(1, 1)}
    >>> gamma_window(Supernatural((-1,)), (-3, 1))
    {-3: Fraction(2, 1), -2: Fraction(1, 1), 0: Fraction(1, 1), 1: Fraction(2, 1)}
    """
    p, q = int(window[0]), int(window[1])
    if p > q:
        raise ValueError("empty window")
    out = {}
    for j in range(p, q + 1):
        g = gamma(spec, j)
        if g:
            out[j] = g
    return out


def as_supernatural(spec):
    """The root description: O(d) on P^m has the consecutive roots
    -d-1, ..., -d-m.

    >>> as_supernatural(LineBundle(2, -5)).roots
    (4, 3)
    """
    if isinstance(spec, Supernatural):
        return spec
    return Supernatural(tuple(-spec.d - 1 - i for i in range(spec.m)))


def as_line_bundle(spec):
    """The inverse relabeling when the roots are consecutive integers;
    None otherwise.

    >>> as_line_bundle(Supernatural((4, 3)))
    LineBundle(2, -5)
    >>> as_line_bundle(Supernatural((4, 2))) is None
    True
    """
    if isinstance(spec, LineBundle):
        return spec
    zs = spec.roots
    if zs and any(a - b != 1 for a, b in zip(zs, zs[1:])):
        return None
    if not zs:
        return LineBundle(0, 0)
    return LineBundle(len(zs), -zs[0] - 1)
