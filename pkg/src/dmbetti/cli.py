"""JSON command line front end.

Every subcommand reads JSON (from --in: a path, inline JSON text, or -
for stdin), writes JSON to --out (default stdout), and exits 0 on
success, 1 on a domain error with the error certificate as JSON on
stderr, 2 on usage errors. Output is deterministic: keys are sorted and
rationals are "p/q" strings.
"""

import argparse
import json
import sys

from .algebra import DomainError, rational_from_str, rational_to_str
from .betti import BettiTable, BettiVector, flatten
from .pure import enumerate_pure_vectors
from . import dm, kt, sheaves, pairing, cones


def _load(args):
    src = args.infile
    if src is None:
        raise ValueError("this subcommand needs --in")
    if src == "-":
        return json.loads(sys.stdin.read())
    if src.lstrip().startswith(("{", "[")):
        return json.loads(src)
    with open(src) as fh:
        return json.load(fh)


def _emit(args, payload):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.outfile and args.outfile != "-":
        with open(args.outfile, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_flatten(args):
    table = BettiTable.from_json(_load(args))
    return flatten(table, args.a).to_json()


def _cmd_pure(args):
    out = []
    for seq, vec in enumerate_pure_vectors(args.n, args.a, args.window):
        out.append({"degrees": list(seq), "vector": vec.to_json()})
    return out


def _cmd_validate(args):
    D = dm.FreeDM.from_json(_load(args))
    dm.validate(D)
    return {"ok": True, "size": D.size, "a": D.a, "gens": list(D.gens)}


def _cmd_minimalize(args):
    D = dm.FreeDM.from_json(_load(args))
    dm.validate(D)
    M = dm.minimalize(D)
    return {"module": M.to_json(), "betti": dm.betti_vector(M).to_json()}


def _cmd_betti(args):
    D = dm.FreeDM.from_json(_load(args))
    dm.validate(D)
    return dm.betti_vector(dm.minimalize(D)).to_json()


def _cmd_barcode(args):
    D = dm.FreeDM.from_json(_load(args))
    bars = kt.barcode(D)
    return {"bars": bars.to_json()["bars"],
            "betti": kt.betti_from_barcode(bars).to_json()}


def _cmd_decompose(args):
    v = BettiVector.from_json(_load(args))
    pairs = kt.decompose(v)
    return {"pairs": [p.to_json() for p in pairs],
            "chain": kt.is_chain(pairs)}


def _cmd_cone_facets(args):
    C = cones.ConeV.from_json(_load(args))
    return cones.v_to_h(C).to_json()


def _cmd_cone_member(args):
    obj = _load(args)
    C = cones.ConeV(obj["window"], [[rational_from_str(x) for x in g]
                                    for g in obj["generators"]])
    x = [rational_from_str(v) for v in obj["vector"]]
    res = cones.membership(x, C)
    if res["inside"]:
        return {"inside": True,
                "coefficients": {str(i): rational_to_str(c)
                                 for i, c in sorted(res["coefficients"].items())}}
    return {"inside": False,
            "functional": [rational_to_str(c) for c in res["functional"]]}


def _cmd_gamma(args):
    spec = sheaves.sheaf_from_json(_load(args))
    values = sheaves.gamma_window(spec, args.window)
    return {"window": list(args.window),
            "values": {str(j): rational_to_str(g)
                       for j, g in sorted(values.items())}}


def _cmd_pair(args):
    obj = _load(args)
    beta = BettiVector.from_json(obj["betti"])
    spec = sheaves.sheaf_from_json(obj["sheaf"])
    return pairing.phi_vector(beta, spec).to_json()


def _cmd_audit(args):
    return pairing.audit_conjecture(args.n, args.window, args.radius)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="dmbetti",
        description="Betti vectors of graded differential modules: "
                    "exact flattening, minimalization, barcodes, cone "
                    "decompositions, and facet audits.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, n=False, a=False, window=False,
            radius=False, needs_in=False):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        if n:
            p.add_argument("--n", type=int, required=True)
        if a:
            p.add_argument("--a", type=int, default=0)
        if window:
            p.add_argument("--window", type=int, nargs=2, required=True,
                           metavar=("P", "Q"))
        if radius:
            p.add_argument("--radius", type=int, default=8)
        p.add_argument("--in", dest="infile", default="-" if needs_in else None,
                       help="input path, inline JSON, or - for stdin")
        p.add_argument("--out", dest="outfile", default=None,
                       help="output path (default stdout)")
        p.add_argument("--seed", type=int, default=0, help="unused; "
                       "accepted for reproducible scripting")
        return p

    add("flatten", _cmd_flatten, "Betti table and degree a to a vector",
        a=True, needs_in=True)
    add("pure", _cmd_pure, "enumerate flattened pure vectors",
        n=True, a=True, window=True)
    add("validate", _cmd_validate, "check homogeneity and d*d = 0",
        needs_in=True)
    add("minimalize", _cmd_minimalize, "cancel units; minimal module "
        "plus Betti vector", needs_in=True)
    add("betti", _cmd_betti, "Betti vector of the minimalization",
        needs_in=True)
    add("barcode", _cmd_barcode, "homology bars of a finite-length "
        "module over Q[t]", needs_in=True)
    add("decompose", _cmd_decompose, "chain decomposition into pair "
        "vectors", needs_in=True)
    add("cone-facets", _cmd_cone_facets, "facet inequalities of a "
        "generated cone", needs_in=True)
    add("cone-member", _cmd_cone_member, "membership certificate for "
        "a vector against generators", needs_in=True)
    add("gamma", _cmd_gamma, "cohomology masses of a sheaf over a "
        "window", window=True, needs_in=True)
    add("pair", _cmd_pair, "Betti vector of a pairing with a sheaf",
        needs_in=True)
    add("audit", _cmd_audit, "facet audit of the pure-vector cone",
        n=True, window=True, radius=True)
    return parser


def run(argv):
    """Parse and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return stop.code if isinstance(stop.code, int) else 2
    try:
        payload = args.func(args)
    except DomainError as err:
        sys.stderr.write(json.dumps(err.payload(), indent=2,
                                    sort_keys=True) + "\n")
        return 1
    except (ValueError, KeyError, TypeError, OSError,
            json.JSONDecodeError) as err:
        sys.stderr.write(json.dumps(
            {"error": type(err).__name__, "message": str(err)},
            indent=2, sort_keys=True) + "\n")
        return 1
    _emit(args, payload)
    return 0


def main():
    raise SystemExit(run(sys.argv[1:]))
