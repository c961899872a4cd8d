"""Pure Betti tables from degree sequences, and their flattenings.

A pure table has one nonzero entry per homological index, at the degrees
of a strictly increasing sequence d_0 < ... < d_n. The entries are fixed
up to scale by the finite length conditions; the classical proportions
are

    beta_i = prod_{k != i} 1 / |d_k - d_i|

scaled to the smallest positive integer vector.

>>> hk_table((0, 1, 2)).entries == {(0, 0): 1, (1, 1): 2, (2, 2): 1}
True
>>> hk_table((0, 1, 3)).entries == {(0, 0): 2, (1, 1): 3, (2, 3): 1}
True
>>> hk_table((1, 3, 4)).entries == {(0, 1): 1, (1, 3): 3, (2, 4): 2}
True
"""

from fractions import Fraction
from itertools import combinations
from math import lcm

from .algebra import DomainError
from .betti import BettiTable, check_degree_sequence, flatten


class WindowTooSmall(DomainError):
    pass


def hk_table(degrees):
    """Pure Betti table on the given degree sequence, scaled to the
    smallest integer entries. The raw proportions have numerator 1, so
    clearing denominators by their lcm already gives gcd 1."""
    degrees = check_degree_sequence(degrees)
    raw = []
    for i, d_i in enumerate(degrees):
        p = Fraction(1)
        for k, d_k in enumerate(degrees):
            if k != i:
                p /= abs(d_k - d_i)
        raw.append(p)
    scale = lcm(*(v.denominator for v in raw))
    return BettiTable({(i, d): scale * v
                       for (i, d), v in zip(enumerate(degrees), raw)})


def enumerate_pure_vectors(n, a, window):
    """All degree sequences of length n+1 inside [p, q], paired with the
    degree-a flattening of their pure tables. Lexicographic order."""
    p, q = int(window[0]), int(window[1])
    if q - p < n:
        raise WindowTooSmall(
            "window [%d, %d] cannot hold %d strictly increasing degrees"
            % (p, q, n + 1), window=[p, q], n=n)
    out = []
    for degrees in combinations(range(p, q + 1), n + 1):
        out.append((degrees, flatten(hk_table(degrees), a)))
    return out
