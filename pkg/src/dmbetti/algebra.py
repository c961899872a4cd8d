"""Exact arithmetic for graded polynomials and graded matrices.

The ground field is Q throughout, represented by fractions.Fraction.
Polynomials live in Q[x1,...,xn] with the standard grading, or in Q[t].
A GradedMatrix records generator degrees for its rows and columns plus a
twist a, and every entry is forced to be zero or homogeneous of degree

    col_degrees[c] + a - row_degrees[r].

The degree convention is that the free module S(-j) has its generator in
internal degree j, so a matrix with row_degrees = col_degrees = gens and
twist a presents a map D -> D(a) on D = (+) S(-g).

>>> R = Ring.multivariate(2)
>>> x, y = Poly.variable(R, 0), Poly.variable(R, 1)
>>> print((x + y) * (x - y))
x1^2 - x2^2
>>> is_homogeneous(x * x * y)
3
>>> is_homogeneous(x + y * y) is None
True
"""

from fractions import Fraction


class DomainError(Exception):
    """Input error carrying a JSON-serializable certificate."""

    def __init__(self, message, **info):
        super().__init__(message)
        self.info = info

    def payload(self):
        return {"error": type(self).__name__, "message": str(self), **self.info}


class RingMismatch(DomainError):
    pass


class ShapeMismatch(DomainError):
    pass


class NotHomogeneous(DomainError):
    pass


class ParseError(DomainError):
    pass


def rational_to_str(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def rational_from_str(s):
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError):
        raise ParseError("bad rational %r" % (s,), token=str(s))


class Ring:
    """Q[x1,...,xn] with the standard grading, or Q[t].

    >>> Ring.multivariate(3).variables
    ('x1', 'x2', 'x3')
    >>> Ring.univariate().is_univariate
    True
    """

    __slots__ = ("variables",)

    def __init__(self, variables):
        self.variables = tuple(variables)
        if not self.variables:
            raise ValueError("ring needs at least one variable")

    @classmethod
    def multivariate(cls, n):
        if n < 1:
            raise ValueError("need n >= 1 variables")
        return cls("x%d" % (i + 1) for i in range(n))

    @classmethod
    def univariate(cls):
        return cls(("t",))

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def is_univariate(self):
        return self.variables == ("t",)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)

    def __repr__(self):
        if self.is_univariate:
            return "Ring.univariate()"
        return "Ring.multivariate(%d)" % self.nvars

    def to_json(self):
        if self.is_univariate:
            return {"univariate": True}
        return {"nvars": self.nvars}

    @classmethod
    def from_json(cls, obj):
        if obj.get("univariate"):
            return cls.univariate()
        return cls.multivariate(int(obj["nvars"]))


class Poly:
    """Sparse polynomial: map from exponent vector to nonzero coefficient.

    >>> R = Ring.univariate()
    >>> t = Poly.variable(R, 0)
    >>> print(t * t * t + Poly.constant(R, 2))
    2 + t^3
    >>> print(Poly.parse("3*x1^2*x2 - x2", Ring.multivariate(2)))
    -x2 + 3*x1^2*x2
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        clean = {}
        for exps, coeff in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != ring.nvars:
                raise ValueError("exponent vector has wrong length")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            coeff = Fraction(coeff)
            if coeff:
                clean[exps] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, {(0,) * ring.nvars: Fraction(c)})

    @classmethod
    def variable(cls, ring, i):
        exps = [0] * ring.nvars
        exps[i] = 1
        return cls(ring, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, ring, exps, c=1):
        return cls(ring, {tuple(exps): Fraction(c)})

    @property
    def is_zero(self):
        return not self.terms

    def constant_value(self):
        """The coefficient if this poly is constant (0 included), else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1:
            (exps, coeff), = self.terms.items()
            if not any(exps):
                return coeff
        return None

    def _same_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatch("polynomials over different rings")

    def __add__(self, other):
        self._same_ring(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            s = terms.get(exps, 0) + coeff
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return Poly(self.ring, terms)

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._same_ring(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        return Poly(self.ring, {e: c * v for e, v in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms,
                           key=lambda e: (sum(e), [-v for v in e])):
            coeff = self.terms[exps]
            factors = []
            for name, e in zip(self.ring.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            mag = abs(coeff)
            if not factors:
                body = rational_to_str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([rational_to_str(mag)] + factors)
            parts.append(("-" if coeff < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "Poly(%s)" % self

    @classmethod
    def parse(cls, text, ring):
        """Parse the term grammar: terms joined by + and -, each an
        optional rational coefficient and *-separated powers var^e.

        >>> print(Poly.parse("t^2 - 2*t + 1", Ring.univariate()))
        1 - 2*t + t^2
        """
        s = str(text).replace(" ", "")
        if not s:
            raise ParseError("empty polynomial")
        # split into signed chunks at top level (the grammar has no parens)
        chunks = []
        sign, start = 1, 0
        if s[0] in "+-":
            sign = -1 if s[0] == "-" else 1
            start = 1
        cur = []
        i = start
        while i < len(s):
            ch = s[i]
            if ch in "+-" and s[i - 1] not in "+-/^*":
                chunks.append((sign, "".join(cur)))
                sign = -1 if ch == "-" else 1
                cur = []
            else:
                cur.append(ch)
            i += 1
        chunks.append((sign, "".join(cur)))
        var_index = {name: k for k, name in enumerate(ring.variables)}
        total = cls.zero(ring)
        for sign, chunk in chunks:
            if not chunk:
                raise ParseError("empty term in %r" % (text,))
            coeff = Fraction(sign)
            exps = [0] * ring.nvars
            for factor in chunk.split("*"):
                if not factor:
                    raise ParseError("empty factor in %r" % (text,))
                name, _, power = factor.partition("^")
                if name in var_index:
                    e = 1
                    if power:
                        if not power.isdigit():
                            raise ParseError("bad exponent in %r" % (text,),
                                             token=factor)
                        e = int(power)
                    exps[var_index[name]] += e
                elif _looks_rational(factor):
                    coeff *= Fraction(factor)
                else:
                    raise ParseError(
                        "unknown factor %r for ring %r" % (factor, ring),
                        token=factor)
            total = total + cls.monomial(ring, exps, coeff)
        return total


def _looks_rational(s):
    core = s.split("/")
    return all(part.isdigit() for part in core) and 1 <= len(core) <= 2


def is_homogeneous(p):
    """Shared total degree of all terms, or None for the zero polynomial
    (homogeneous of every degree) and for a genuine mix of degrees."""
    degrees = {sum(e) for e in p.terms}
    if len(degrees) == 1:
        return degrees.pop()
    return None


class GradedMatrix:
    """Matrix of polynomials with degree bookkeeping.

    Entry (r, c) must be zero or homogeneous of degree
    col_degrees[c] + twist - row_degrees[r]; a negative forced degree
    means the entry must be zero.
    """

    __slots__ = ("ring", "row_degrees", "col_degrees", "twist", "entries")

    def __init__(self, ring, row_degrees, col_degrees, twist, entries):
        self.ring = ring
        self.row_degrees = tuple(int(d) for d in row_degrees)
        self.col_degrees = tuple(int(d) for d in col_degrees)
        self.twist = int(twist)
        rows = []
        entries = list(entries)
        if len(entries) != len(self.row_degrees):
            raise ShapeMismatch("wrong number of rows")
        for row in entries:
            row = tuple(row)
            if len(row) != len(self.col_degrees):
                raise ShapeMismatch("wrong number of columns")
            for p in row:
                if not isinstance(p, Poly):
                    raise TypeError("entries must be Poly")
                if p.ring != ring:
                    raise RingMismatch("entry over a different ring")
            rows.append(row)
        self.entries = tuple(rows)

    @property
    def nrows(self):
        return len(self.row_degrees)

    @property
    def ncols(self):
        return len(self.col_degrees)

    def entry(self, r, c):
        return self.entries[r][c]

    def required_degree(self, r, c):
        return self.col_degrees[c] + self.twist - self.row_degrees[r]

    def check_homogeneous(self):
        """Raise NotHomogeneous at the first entry violating the forced
        degree (row-major scan)."""
        for r in range(self.nrows):
            for c in range(self.ncols):
                p = self.entries[r][c]
                if p.is_zero:
                    continue
                want = self.required_degree(r, c)
                if is_homogeneous(p) != want:
                    raise NotHomogeneous(
                        "entry (%d, %d) = %s must be homogeneous of degree %d"
                        % (r, c, p, want),
                        row=r, col=c, entry=str(p), expected_degree=want)

    @classmethod
    def zero(cls, ring, row_degrees, col_degrees, twist):
        z = Poly.zero(ring)
        return cls(ring, row_degrees, col_degrees, twist,
                   [[z] * len(tuple(col_degrees)) for _ in tuple(row_degrees)])

    @classmethod
    def identity(cls, ring, degrees):
        degrees = tuple(degrees)
        one, z = Poly.constant(ring, 1), Poly.zero(ring)
        return cls(ring, degrees, degrees, 0,
                   [[one if r == c else z for c in range(len(degrees))]
                    for r in range(len(degrees))])

    @property
    def is_zero(self):
        return all(p.is_zero for row in self.entries for p in row)

    def first_nonzero(self):
        for r in range(self.nrows):
            for c in range(self.ncols):
                if not self.entries[r][c].is_zero:
                    return r, c
        return None

    def __eq__(self, other):
        return (isinstance(other, GradedMatrix)
                and self.ring == other.ring
                and self.row_degrees == other.row_degrees
                and self.col_degrees == other.col_degrees
                and self.twist == other.twist
                and self.entries == other.entries)

    def __mul__(self, other):
        return matrix_mul(self, other)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(p) for p in row) + "]"
                         for row in self.entries)


def matrix_mul(M, N):
    """Exact product with recomputed degree bookkeeping. Twists add; the
    inner generator degrees must agree entrywise."""
    if M.ring != N.ring:
        raise RingMismatch("matrix product over different rings")
    if M.col_degrees != N.row_degrees:
        raise ShapeMismatch(
            "inner degrees disagree: %r vs %r"
            % (M.col_degrees, N.row_degrees))
    rows = []
    for r in range(M.nrows):
        row = []
        for c in range(N.ncols):
            acc = Poly.zero(M.ring)
            for k in range(M.ncols):
                a, b = M.entries[r][k], N.entries[k][c]
                if not (a.is_zero or b.is_zero):
                    acc = acc + a * b
            row.append(acc)
        rows.append(row)
    return GradedMatrix(M.ring, M.row_degrees, N.col_degrees,
                        M.twist + N.twist, rows)
