"""Exact linear algebra over Q.

Plain Gaussian elimination on lists of Fraction rows. Everything here is
desk scale, so there is no pivoting strategy beyond "first nonzero".

>>> rank([[1, 2], [2, 4]])
1
>>> nullspace([[1, 2], [2, 4]], 2)
[[Fraction(-2, 1), Fraction(1, 1)]]
"""

import math
from fractions import Fraction


def _copy(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows, ncols=None):
    """Reduced row echelon form. Returns (matrix, pivot column list)."""
    m = _copy(rows)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of {x : rows * x = 0}, one vector per free column."""
    m, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -m[r][free]
        basis.append(v)
    return basis


def solve(rows, rhs, ncols=None):
    """One exact solution of rows * x = rhs, or None if inconsistent.
    Free variables are set to zero."""
    if not rows:
        return [Fraction(0)] * (ncols or 0) if not any(rhs) else None
    if ncols is None:
        ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    m, pivots = rref(aug, ncols)
    for r in range(len(m)):
        if not any(m[r][:ncols]) and m[r][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = m[r][ncols]
    return x


def matvec(rows, x):
    return [sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in rows]


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def transpose(rows, ncols=None):
    if not rows:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*rows)]


def primitive(vec):
    """Rescale by a positive rational so the entries are coprime
    integers (the zero vector stays zero).

    >>> primitive([Fraction(1, 2), Fraction(0), Fraction(-3, 4)])
    [2, 0, -3]
    """
    vec = [Fraction(x) for x in vec]
    if not vec:
        return []
    mult = math.lcm(*(x.denominator for x in vec))
    ints = [int(x * mult) for x in vec]
    g = math.gcd(*ints)
    return ints if g == 0 else [i // g for i in ints]
