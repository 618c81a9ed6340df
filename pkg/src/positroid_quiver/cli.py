"""Command line front end: ``positroid <command> ...``."""
from __future__ import annotations

import argparse
import json
import math
import sys
from itertools import combinations
from pathlib import Path

from . import affperm, desing, fforacle, gkm, momentgraph, quiver
from .polynomial import MultiPoly
from .necklace import (
    enumerate_necklaces,
    juggling_to_necklace,
    necklace_leq,
    necklace_to_juggling,
    parse_necklace,
)


class CheckList:
    """Collects named pass/fail lines."""

    def __init__(self):
        self.lines: list[str] = []
        self.failed = 0

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.lines.append(f"{'PASS' if ok else 'FAIL'} {name}" + ("" if ok or not detail else f": {detail}"))
        self.failed += not ok

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _kn(parser: argparse.ArgumentParser, args) -> None:
    if args.k is None or args.n is None:
        parser.error("-k and -n are required")
    if not 1 <= args.k < args.n:
        parser.error(f"need 1 <= k < n, got k={args.k}, n={args.n}")


def _prime(parser, args) -> None:
    if not fforacle.is_prime(args.prime):
        parser.error(f"-p must be prime, got {args.prime}")


def cmd_necklaces(args) -> tuple[str, int]:
    nl = enumerate_necklaces(args.k, args.n)
    if args.format == "json":
        return json.dumps([N.to_dict() for N in nl]) + "\n", 0
    return "".join(f"{N}\n" for N in nl), 0


def cmd_poset(args) -> tuple[str, int]:
    g = momentgraph.build(args.k, args.n)
    covers = momentgraph.hasse_diagram(g)
    if args.format == "json":
        doc = {"vertices": [str(v) for v in g.vertices],
               "covers": [[g.vertices[u].to_dict(), g.vertices[l].to_dict()] for u, l in covers]}
        return json.dumps(doc) + "\n", 0
    if args.format == "dot":
        lines = [f'digraph "GN({args.k},{args.n})" {{']
        lines += [f'  v{i} [label="{v}"];' for i, v in enumerate(g.vertices)]
        lines += [f"  v{u} -> v{l};" for u, l in covers]
        return "\n".join(lines) + "\n}\n", 0
    return "".join(f"{g.vertices[u]} > {g.vertices[l]}\n" for u, l in covers), 0


def cmd_perm(args) -> tuple[str, int]:
    if args.window:
        f = affperm.BoundedAffinePermutation.from_window(int(x) for x in args.window.split(","))
        N = affperm.to_necklace(f)
    else:
        N = parse_necklace(args.necklace, args.k, args.n)
        f = affperm.from_necklace(N)
    J = necklace_to_juggling(N)
    if args.format == "json":
        doc = {"necklace": N.to_dict(), "window": list(f.window),
               "juggling": [list(x) for x in J.entries], "length": affperm.length(f)}
        return json.dumps(doc) + "\n", 0
    juggling = "".join("{" + ",".join(map(str, x)) + "}" for x in J.entries)
    return (f"necklace: {N}\nwindow: {list(f.window)}\njuggling: {juggling}\n"
            f"length: {affperm.length(f)}\n"), 0


def cmd_moment_graph(args) -> tuple[str, int]:
    g = momentgraph.build(args.k, args.n)
    if args.format == "json":
        return momentgraph.export_json(g), 0
    return momentgraph.export_dot(g), 0


def cmd_poincare(args) -> tuple[str, int]:
    P = momentgraph.poincare(args.k, args.n)
    if args.format == "json":
        return json.dumps({"poincare": P, "tnn": P[::-1]}) + "\n", 0
    return f"{momentgraph.format_poly(P)} | tnn dual: {momentgraph.format_poly(P[::-1])}\n", 0


def cmd_gkm_verify(args) -> tuple[str, int]:
    if args.tuple:
        t = gkm.GkmTuple.from_json(Path(args.tuple).read_text())
        g = momentgraph.build(t.k, t.n)
        bad = gkm.gkm_violations(t, g)
        if not bad:
            return "PASS tuple is a GKM class\n", 0
        return "".join(f"FAIL label {a.render()} of {s}->{d} does not divide z_{s} - z_{d}\n"
                       for s, d, a in bad), 1
    report = gkm.verify_kt_example()
    return report.render(), 0 if report.passed else 1


def cmd_desing(args) -> tuple[str, int]:
    J = desing.parse_subset(args.J)
    dv = desing.d_vector(J, args.n)
    t = desing.tower(J, args.n)
    dim = desing.desing_dim(J, args.n)
    k = len(dv.J)
    if args.format == "json":
        doc = json.loads(dv.to_json())
        doc["tower"] = [[[f.sub_dim, f.ambient_dim] for f in layer] for layer in t.layers]
        doc["dim"] = dim
        return json.dumps(doc) + "\n", 0 if dim == k * (args.n - k) else 1
    out = f"{desing.render_grid(dv)}\n\n{desing.render_tower(t)}\n\ndim {dim} (k(n-k) = {k * (args.n - k)})\n"
    return out, 0 if dim == k * (args.n - k) else 1


def cmd_hom_dim(args) -> tuple[str, int]:
    M = quiver.SegmentRep.parse(args.source, args.n) if args.source else quiver.SegmentRep.u_n(args.n)
    N = quiver.SegmentRep.parse(args.target, args.n) if args.target else quiver.SegmentRep.u_n(args.n)
    return f"{quiver.hom_dim(M, N)}\n", 0


def cmd_degeneration_dim(args) -> tuple[str, int]:
    return f"{quiver.degeneration_dim(args.n, args.k, args.r)}\n", 0


def cmd_count_points(args) -> tuple[str, int]:
    if args.format == "json":
        rep = fforacle.verify_cellularity(args.k, args.n, args.prime)
        return rep.to_json(), 0 if rep.passed else 1
    return f"{fforacle.count_points(args.k, args.n, args.prime)}\n", 0


def run_verify(k: int, n: int, p: int) -> CheckList:
    """Every check that applies to the given (k, n, p)."""
    cl = CheckList()
    nl = enumerate_necklaces(k, n)
    if k == 1:
        cl.add(f"|GN(1,{n})| = 2^n - 1", len(nl) == 2 ** n - 1, f"got {len(nl)}")
    cl.add("necklace <-> juggling roundtrip",
           all(juggling_to_necklace(necklace_to_juggling(N)) == N for N in nl))
    cl.add("necklace <-> bounded affine permutation roundtrip",
           all(affperm.to_necklace(affperm.from_necklace(N)) == N for N in nl))

    g = momentgraph.build(k, n)
    try:
        dims = {v: momentgraph.cell_dim(g, v) for v in g.vertices}
        cl.add("outdegree = affine permutation length" + (" = n - #distinct" if k == 1 else ""), True)
    except momentgraph.ConsistencyError as exc:
        cl.add("outdegree = affine permutation length", False, str(exc))
        return cl
    P = momentgraph.poincare_of_graph(g)
    cl.add("top Poincare coefficient = binom(n, k)", P[-1] == math.comb(n, k), f"got {P[-1]}")
    if k == 1:
        want = [math.comb(n, d) for d in range(n)]
        cl.add("P(1,n) = (1+q)^n - q^n", P == want, f"got {P}")
    cl.add("edges point to smaller necklaces",
           all(necklace_leq(g.vertices[e.dst], g.vertices[e.src]) and e.dst != e.src for e in g.edges))
    if n <= 5:
        cl.add("mutation closure order = rotated Gale order", quiver.closure_poset(k, n) == quiver.gale_poset(k, n))
    edges = {(e.src, e.dst) for e in g.edges}
    covers = momentgraph.hasse_diagram(g)
    cl.add("Hasse covers are edges with dimension gap 1",
           all((u, l) in edges and dims[g.vertices[u]] - dims[g.vertices[l]] == 1 for u, l in covers))
    cl.add("euler class degree = 2 * cell dimension",
           all(gkm.euler_class(g, v).degree() == 2 * dims[v] for v in g.vertices))
    const = gkm.GkmTuple(k, n, {v: MultiPoly.const(n + 1, 1) for v in g.vertices})
    cl.add("constant tuple is a GKM class", gkm.is_gkm_class(const, g))

    bad = [J for r in range(1, n) for J in combinations(range(1, n + 1), r)
           if desing.desing_dim(J, n) != r * (n - r)]
    cl.add("desingularization dimension = k(n-k) for every J", not bad, f"fails for {bad}")
    cl.add(f"hom(U_[{n}], U_[{n}]) = n^2", quiver.hom_dim(quiver.SegmentRep.u_n(n), quiver.SegmentRep.u_n(n)) == n * n)
    degs = [quiver.degeneration_dim(n, k, r) for r in range(n + 1)]
    top = k * (n - k)
    cl.add("degeneration dimension is maximal exactly at r = 0, n",
           all((d == top) == (r in (0, n)) and d <= top for r, d in enumerate(degs)), f"got {degs}")

    rep = fforacle.verify_cellularity(k, n, p, dims)
    cl.add(f"F_{p} point count = P({p}) and class sizes = {p}^dim", rep.passed, "; ".join(rep.mismatches))
    return cl


def cmd_verify(args) -> tuple[str, int]:
    cl = run_verify(args.k, args.n, args.prime)
    return cl.text(), 1 if cl.failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="positroid", description="Quiver Grassmannians of the cyclic quiver X(k, n).")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-k", "--k", type=int)
    common.add_argument("-n", "--n", type=int)
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, formats=("text", "json"), default=None, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        p.add_argument("--format", choices=formats, default=default or formats[0])
        p.set_defaults(func=func, subparser=p, needs_kn=True, needs_p=False)
        return p

    add("necklaces", cmd_necklaces, help="list Grassmann necklaces")
    add("poset", cmd_poset, ("text", "json", "dot"), help="Hasse diagram of the cell closure order")
    p = add("perm", cmd_perm, help="necklace / bounded affine permutation / juggling conversions")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--necklace", help='e.g. "13|34|34|14" or "121" for k = 1')
    src.add_argument("--window", help="bounded affine permutation window, e.g. 4,2,5,7")
    p.set_defaults(needs_kn=False)
    add("moment-graph", cmd_moment_graph, ("dot", "json"), help="moment graph as DOT or JSON")
    add("poincare", cmd_poincare, help="Poincare polynomial and its tnn dual")
    p = add("gkm-verify", cmd_gkm_verify, help="check GKM conditions")
    p.add_argument("--tuple", metavar="FILE", help="GKM tuple JSON; default is the X(1,3) fixture")
    p.set_defaults(needs_kn=False)
    p = add("desing", cmd_desing, help="dimension vector grid and fibration tower for J")
    p.add_argument("-J", required=True, help="comma separated subset of [n]")
    p.set_defaults(needs_kn=False)
    p = add("hom-dim", cmd_hom_dim, help="dim Hom between direct sums of segments")
    p.add_argument("--source", help='segments "i:l,..." (default U_[n])')
    p.add_argument("--target", help='segments "i:l,..." (default U_[n])')
    p.set_defaults(needs_kn=False)
    p = add("degeneration-dim", cmd_degeneration_dim, help="dimension of the degeneration stratum")
    p.add_argument("-r", type=int, required=True)
    for name, func in (("count-points", cmd_count_points), ("verify", cmd_verify)):
        p = add(name, func, help="F_p point count" if name == "count-points" else "run all checks for (k, n, p)")
        p.add_argument("-p", "--prime", type=int, default=2)
        p.set_defaults(needs_p=True)
        if name == "verify":
            p.set_defaults(k=2, n=4)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    sp = args.subparser
    if args.needs_kn:
        _kn(sp, args)
    if args.needs_p:
        _prime(sp, args)
    if args.command in ("desing", "hom-dim") and (args.n is None or args.n < 1):
        sp.error("-n is required")
    if args.command == "perm" and args.necklace and (args.k is None or args.n is None):
        sp.error("--necklace needs -k and -n")
    try:
        out, code = args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"positroid {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)
    return code


def main() -> None:
    sys.exit(run())
