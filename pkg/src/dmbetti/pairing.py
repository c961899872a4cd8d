"""Linear functionals obtained by pairing against sheaves.

Pairing a free differential module F against a sheaf E multiplies each
Betti entry by a cohomology mass: the result has entry
betaF[j] * gamma(E, -j). Composing with the cone functionals tau_j or
sigma_j therefore gives a linear functional on Betti vectors whose
coefficient at degree i is gamma(E, -i), with the sign flipped at i = j
for tau. audit_conjecture computes the actual facets of the cone
spanned by flattened pure vectors and searches for functionals of that
shape matching each facet up to positive scaling.

>>> v = BettiVector({0: 1, 1: 2, 2: 1})
>>> phi_vector(v, LineBundle(1, 0)).entries
{0: Fraction(1, 1), 2: Fraction(1, 1)}
"""

from fractions import Fraction
from itertools import combinations

from .algebra import rational_to_str
from .betti import BettiVector
from .sheaves import LineBundle, Supernatural, as_line_bundle, gamma
from .pure import enumerate_pure_vectors
from .cones import ConeV, v_to_h
from . import linalg


class LinearFunctional:
    """Finitely supported functional on Betti vectors; acts by dot
    product against the entries."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        clean = {}
        for j, c in dict(coeffs).items():
            c = Fraction(c)
            if c:
                clean[int(j)] = c
        self.coeffs = clean

    def apply(self, v):
        return sum((c * v[j] for j, c in self.coeffs.items()), Fraction(0))

    def dense(self, window):
        p, q = int(window[0]), int(window[1])
        return [self.coeffs.get(j, Fraction(0)) for j in range(p, q + 1)]

    def __eq__(self, other):
        return (isinstance(other, LinearFunctional)
                and self.coeffs == other.coeffs)

    def __repr__(self):
        body = ", ".join("%d: %s" % (j, self.coeffs[j])
                         for j in sorted(self.coeffs))
        return "LinearFunctional({%s})" % body

    def to_json(self):
        return {"coeffs": {str(j): rational_to_str(c)
                           for j, c in sorted(self.coeffs.items())}}


def phi_vector(betaF, spec):
    """Betti vector of the pairing: entry j is betaF[j] * gamma(spec, -j).

    >>> phi_vector(BettiVector({3: 2}), LineBundle(2, 3)).entries
    {3: Fraction(2, 1)}
    """
    out = {}
    for j in betaF.support():
        g = gamma(spec, -j)
        if g:
            out[j] = betaF[j] * g
    return BettiVector(out)


def induced_functional(spec, kind, j, window):
    """The composite functional on the window: tau_j or sigma_j applied
    after pairing with spec.

    >>> f = induced_functional(LineBundle(2, -5), "tau", 0, (-5, 2))
    >>> [str(c) for c in f.dense((-5, 2))]
    ['1', '0', '0', '1', '3', '-6', '10', '15']
    """
    p, q = int(window[0]), int(window[1])
    if p > q:
        raise ValueError("empty window")
    j = int(j)
    if kind == "sigma":
        return LinearFunctional({j: gamma(spec, -j)})
    if kind != "tau":
        raise ValueError("kind must be tau or sigma")
    coeffs = {}
    for i in range(p, q + 1):
        g = gamma(spec, -i)
        coeffs[i] = -g if i == j else g
    return LinearFunctional(coeffs)


def _spec_json(spec):
    lb = as_line_bundle(spec)
    return (lb or spec).to_json()


def _witness_table(n, window, radius):
    """Primitive column -> first witness (roots, kind, j) in search
    order: root tuples by lexicographic order of their increasing
    rewrites, then j ascending, then tau before sigma."""
    p, q = window
    table = {}
    for combo in combinations(range(-radius, radius + 1), n - 1):
        spec = Supernatural(tuple(reversed(combo)))
        for j in range(p, q + 1):
            for kind in ("tau", "sigma"):
                f = induced_functional(spec, kind, j, window)
                key = tuple(linalg.primitive(f.dense(window)))
                if any(key) and key not in table:
                    table[key] = (spec, kind, j)
    return table


def _describe(spec, kind, j, window):
    p, q = window
    # the same column read in decreasing degree order: reflecting the
    # degree axis through j replaces each root z by -j - z and moves
    # the sign flip to degree 0
    dual = Supernatural(tuple(sorted((-j - z for z in spec.roots),
                                     reverse=True)))
    return {"roots": list(spec.roots), "spec": _spec_json(spec),
            "kind": kind, "j": j,
            "reversed_reading": {"spec": _spec_json(dual), "kind": kind,
                                 "j": 0, "window": [j - q, j - p]}}


def audit_conjecture(n, window, root_search_radius):
    """Compare the facets of the cone of flattened pure vectors (a = 0)
    against functionals induced by supernatural sheaves on P^(n-1).

    Every facet is reported with its matching witness or with null; a
    facet without a match is evidence against the conjectured shape, not
    an error. Matched witnesses are additionally evaluated on all
    generators; a negative value would disprove the containment
    direction and lands in "violations".
    """
    p, q = int(window[0]), int(window[1])
    radius = int(root_search_radius)
    pure = enumerate_pure_vectors(n, 0, (p, q))
    dense = [v.to_dense((p, q)) for _, v in pure]
    H = v_to_h(ConeV((p, q), dense))
    table = _witness_table(n, (p, q), radius)
    facets, violations = [], []
    for ineq in H.inequalities:
        hit = table.get(ineq)
        entry = {"coeffs": list(ineq), "match": None}
        if hit is not None:
            spec, kind, j = hit
            entry["match"] = _describe(spec, kind, j, (p, q))
            f = induced_functional(spec, kind, j, (p, q))
            for gi, g in enumerate(dense):
                val = linalg.dot(f.dense((p, q)), g)
                if val < 0:
                    violations.append({"facet": list(ineq), "generator": gi,
                                       "value": rational_to_str(val)})
        facets.append(entry)
    return {"n": n, "window": [p, q], "radius": radius,
            "generator_count": len(dense),
            "equations": [list(e) for e in H.equations],
            "facets": facets,
            "all_matched": all(f["match"] is not None for f in facets),
            "violations": violations}
