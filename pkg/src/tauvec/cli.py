"""Command-line interface.

Exit codes: 0 on success, 1 on input or parse errors, 2 when a verification
fails.  Complexes are read from a catalog file, ``-`` for stdin, or an
inline facet list such as ``"[[1,2,3],[1,2,4]]"``.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import bounds, constructions, flips
from .catalog import CatalogEntry, CatalogParseError, batch_tau, bl_match_census, parse_facet_list, serialize
from .complex import ComplexError, SimplicialComplex, bits, mask_of
from .graphs import Graph, find_peo, peo_bound, tau0_graph
from .homology import ChainData
from .identities import verify_identities
from .linalg import Field
from .tau import CapExceeded, hochster_table, mu_vector, sigma_vector, tau_vector, tightness_report
from .vectors import fmt_rational


class VerificationFailed(Exception):
    pass


def _global_options(parser: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--field", default=d("fp:2"), help="coefficient field: fp:<p> or q (default fp:2)")
    parser.add_argument("--workers", type=int, default=d(1), help="worker processes for enumeration")
    parser.add_argument("--cap", type=int, default=d(None), help="largest ground set to enumerate")
    parser.add_argument("--format", choices=["text", "json", "csv"], default=d("text"))


def load_entries(source: str) -> list[CatalogEntry]:
    if source == "-":
        text = sys.stdin.read()
    elif os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    elif source.lstrip().startswith("["):
        text = "input=" + source
    else:
        text = source
    entries = parse_facet_list(text)
    if not entries:
        raise CatalogParseError(0, "no complexes found")
    return entries


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def _q(x) -> str:
    return fmt_rational(x)


# output -----------------------------------------------------------------


def emit(records: list[dict], fmt: str, out):
    if fmt == "json":
        out.write(json.dumps(records, indent=1) + "\n")
    elif fmt == "csv":
        keys: list[str] = []
        for r in records:
            keys += [k for k in r if k not in keys]
        w = csv.DictWriter(out, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow({k: (" ".join(map(str, v)) if isinstance(v, list) else v) for k, v in r.items()})
    else:
        for r in records:
            out.write("  ".join(f"{k}={' '.join(map(str, v)) if isinstance(v, list) else v}" for k, v in r.items()) + "\n")


# commands ---------------------------------------------------------------


def cmd_tau(args, field):
    out = []
    for e in load_entries(args.source):
        C = e.complex
        if args.kind == "sigma":
            t = sigma_vector(C, field, args.workers, args.cap)
        elif args.kind == "mu":
            t = mu_vector(C, field, args.workers, args.cap)
        else:
            t = tau_vector(C, field, args.workers, args.cap)
        out.append({"name": e.name, "n": t.n, "start": t.start, args.kind: t.as_strings()})
    return out


def cmd_betti(args, field):
    out = []
    for e in load_entries(args.source):
        b = ChainData(e.complex, field).betti()
        out.append({"name": e.name, "start": b.start, "betti": list(b.values)})
    return out


def cmd_hochster(args, field):
    out = []
    for e in load_entries(args.source):
        t = hochster_table(e.complex, field, args.workers, args.cap)
        for i, j, r in t.rows():
            out.append({"name": e.name, "i": i, "j": j, "r": r})
    return out


def cmd_graph_tau0(args, field):
    if args.edges:
        pairs = []
        for tok in args.edges.split(","):
            a, b = tok.split("-")
            pairs.append((int(a) - 1, int(b) - 1))
        n = args.n or max(max(p) for p in pairs) + 1
        graphs = [("graph", Graph.from_edges(n, pairs))]
    else:
        graphs = [(e.name, Graph.of_complex(e.complex)) for e in load_entries(args.source)]
    out = []
    for name, G in graphs:
        rec = {"name": name, "n": G.n, "edges": G.num_edges, "tau0": _q(tau0_graph(G))}
        order = [v - 1 for v in _ints(args.order)] if args.order else find_peo(G)
        if order is not None:
            pb = peo_bound(G, order)
            rec.update(order=[v + 1 for v in order], in_degrees=list(pb.deltas), bound=_q(pb.bound), equality=pb.is_equality)
        out.append(rec)
    return out


def _emit_complex(name: str, C, args):
    return {"_complex": serialize([CatalogEntry(name, C)], "json" if args.format == "json" else "census")}


def cmd_construct(args, field):
    kind = args.kind
    p = args.params
    if kind == "simplex":
        C, name = constructions.boundary_simplex(p[0]), f"boundary_simplex_{p[0]}"
    elif kind == "cyclic-ball":
        C, name = constructions.lower_cyclic_facets(p[0], p[1]), f"lower_cyclic_{p[0]}_{p[1]}"
    elif kind == "billera-lee":
        bl = constructions.billera_lee(p[0], p[1:], args.n)
        C = bl.ball if args.ball else bl.sphere
        name = "billera_lee_" + "_".join(map(str, p)) + ("_ball" if args.ball else "")
    elif kind == "stacked":
        C, name = constructions.stacked_sphere(p[0], p[1], args.seed), f"stacked_{p[0]}_{p[1]}"
    elif kind == "join":
        C, name = constructions.simplex_join(p[0], p[1]), f"simplex_join_{p[0]}_{p[1]}"
    else:
        C, name = constructions.cycle_join(p[0], p[1]), f"cycle_join_{p[0]}_{p[1]}"
    return [_emit_complex(name, C, args)]


def cmd_connsum(args, field):
    A = load_entries(args.first)[0]
    B = load_entries(args.second)[0]
    C = constructions.connected_sum(A.complex, B.complex)
    return [_emit_complex(f"{A.name}#{B.name}", C, args)]


def cmd_flip(args, field):
    e = load_entries(args.source)[0]
    M = e.complex
    if args.action == "list":
        return [{"removed": [v + 1 for v in bits(f.removed)], "inserted": [v + 1 for v in bits(f.inserted)],
                 "type": f"({f.type[0]},{f.type[1]})"} for f in flips.enumerate_flips(M)]
    if args.action == "apply":
        if not args.remove or not args.insert:
            raise ValueError("flip apply needs --remove and --insert")
        fl = flips.Flip(mask_of(v - 1 for v in _ints(args.remove)), mask_of(v - 1 for v in _ints(args.insert)))
        return [_emit_complex(e.name + "_flipped", flips.apply_flip(M, fl), args)]
    res = flips.flip_explore(M, args.budget)
    out = [{"forms": len(res.forms), "complete": res.complete, "expanded": res.visited}]
    if args.emit:
        for i, key in enumerate(sorted(res.forms)):
            out.append(_emit_complex(f"{e.name}_form{i + 1}", SimplicialComplex(*key), args))
    return out


def cmd_verify(args, field):
    out = []
    failed = False
    for e in load_entries(args.source):
        tau = tau_vector(e.complex, field, args.workers, args.cap)
        rep = verify_identities(e.complex, tau, field)
        for c in rep.checks:
            out.append({"name": e.name, "check": c.name, "lhs": _q(c.lhs), "rhs": _q(c.rhs), "holds": c.holds})
            failed |= not c.holds
        if args.tight:
            tr = tightness_report(e.complex, field, workers=args.workers)
            out.append({"name": e.name, "check": "tight", "mu": tr.mu.as_strings(), "betti": list(tr.betti), "holds": tr.tight})
    if failed:
        args._records = out
        raise VerificationFailed("identity check failed")
    return out


def cmd_bounds(args, field):
    if args.action == "pair":
        out = []
        for mode in ("proven", "conjectured"):
            b1, b2 = bounds.mu_bound_pair(args.n, args.e, mode)
            out.append({"mode": mode, "b1": _q(b1), "b2": _q(b2), "b1_floor": b1.__floor__(), "b2_floor": b2.__floor__()})
        return out
    rows = bounds.figure5_table()
    if args.format == "csv":
        return [{"_raw": bounds.rows_to_csv(rows)}]
    return [{"link_f": list(r.link_f), "f": list(r.manifold_f), "chi": r.chi,
             "proven": list(r.proven_pair), "conjectured": list(r.conjectured_pair),
             "proven_exact": [_q(x) for x in r.proven_exact],
             "conjectured_exact": [_q(x) for x in r.conjectured_exact]} for r in rows]


def cmd_batch(args, field):
    res = batch_tau(load_entries(args.source), field, args.which, args.workers, args.cap)
    text = res.summary_csv() if args.summary else res.rows_csv()
    return [{"_raw": text}]


def cmd_census(args, field):
    counts = bl_match_census(load_entries(args.source), field, args.cap)
    return [{"f0": f0, "g2": g2, "matches": c} for (f0, g2), c in counts.items()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tauvec", description="τ-vectors of simplicial complexes")
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("tau", cmd_tau, "τ-, σ- or μ-vector")
    p.add_argument("source")
    p.add_argument("--kind", choices=["tau", "sigma", "mu"], default="tau")
    p = add("betti", cmd_betti, "reduced Betti numbers")
    p.add_argument("source")
    p = add("hochster", cmd_hochster, "graded Betti numbers of the Stanley-Reisner ideal")
    p.add_argument("source")
    p = add("graph-tau0", cmd_graph_tau0, "τ_0 of a graph and its in-degree bound")
    p.add_argument("source", nargs="?")
    p.add_argument("--edges", help="comma separated a-b pairs, 1-based")
    p.add_argument("--n", type=int)
    p.add_argument("--order", help="vertex order, 1-based, comma separated")
    p = add("construct", cmd_construct, "emit a constructed complex")
    p.add_argument("kind", choices=["simplex", "cyclic-ball", "billera-lee", "stacked", "join", "cycle-join"])
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--n", type=int, help="vertex count of the cyclic polytope (billera-lee)")
    p.add_argument("--ball", action="store_true", help="emit the Billera-Lee ball instead of its boundary")
    p.add_argument("--seed", type=int, default=0)
    p = add("connsum", cmd_connsum, "connected sum of two complexes")
    p.add_argument("first")
    p.add_argument("second")
    p = add("flip", cmd_flip, "bistellar flips")
    p.add_argument("action", choices=["list", "apply", "explore"])
    p.add_argument("source")
    p.add_argument("--remove")
    p.add_argument("--insert")
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--emit", action="store_true", help="print every form found by explore")
    p = add("verify", cmd_verify, "check the τ identities")
    p.add_argument("source")
    p.add_argument("--tight", action="store_true", help="also run the tightness check")
    p = add("bounds", cmd_bounds, "Betti bounds for 2-neighborly 4-manifolds")
    p.add_argument("action", choices=["pair", "figure5"])
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("e", type=int, nargs="?")
    p = add("batch", cmd_batch, "τ over a catalog as CSV")
    p.add_argument("source")
    p.add_argument("--which", choices=["full", "tau0_only"], default="full")
    p.add_argument("--summary", action="store_true", help="per (f0, g2) summary instead of rows")
    p = add("census", cmd_census, "count entries matching their Billera-Lee τ-vector")
    p.add_argument("source")
    return parser


def _write(records: list[dict], fmt: str, out):
    raw = [r for r in records if "_raw" in r or "_complex" in r]
    if raw:
        for r in raw:
            out.write(r.get("_raw") or r.get("_complex"))
        records = [r for r in records if r not in raw]
        if not records:
            return
    emit(records, fmt, out)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bounds" and args.action == "pair" and (args.n is None or args.e is None):
        parser.error("bounds pair needs n and e")
    try:
        field = Field.parse(args.field)
        records = args.func(args, field)
    except VerificationFailed as exc:
        _write(getattr(args, "_records", []), args.format, out)
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    except (CatalogParseError, ComplexError, CapExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _write(records, args.format, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
