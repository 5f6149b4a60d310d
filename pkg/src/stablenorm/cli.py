"""Command-line front end.

Results go to stdout as JSON (``circuits`` prints plain lines), diagnostics
to stderr. Exit status: 0 success, 1 verification failure, 2 input error.
Negative class coordinates need the ``--class=-1,2`` spelling.
"""

from __future__ import annotations

import argparse
import json
import sys

from .circuits import enumerate_circuits
from .errors import CapExceeded, StableNormError
from .graph import homology_basis, parse_rational
from .io import (
    ball_to_dict,
    decomposition_to_dict,
    export_plot,
    format_circuits,
    format_rational,
    gen_corpus,
    load_graph,
    serialize_graph,
)
from .norm import decompose_class, stable_ball, stable_norm, verify_vertices
from .oracle import DEFAULT_EDGE_CAP, ball_by_intersection


def _parse_class(text: str):
    parts = [p for p in text.split(",") if p.strip()]
    return [parse_rational(p) for p in parts]


def _dump(obj, out):
    json.dump(obj, out, indent=2)
    out.write("\n")


def cmd_ball(args, out, err) -> int:
    G = load_graph(args.graph)
    H = homology_basis(G)
    ball = stable_ball(G, H, enumerate_circuits(G))
    _dump(ball_to_dict(ball), out)
    status = 0
    if args.check_bound:
        bound = 2 * (2 ** ball.betti - 1)
        ok = len(ball) <= bound
        print(f"vertex count {len(ball)} vs bound 2(2^{ball.betti} - 1) = {bound}: "
              f"{'ok' if ok else 'VIOLATED'}", file=err)
        status = 0 if ok else 1
    if args.plot:
        with open(args.plot, "w", encoding="utf-8") as fh:
            fh.write(export_plot(G, ball))
        print(f"wrote {args.plot}", file=err)
    return status


def cmd_norm(args, out, err) -> int:
    G = load_graph(args.graph)
    H = homology_basis(G)
    y = _parse_class(args.klass)
    value = stable_norm(G, H, y)
    _dump({"class": [format_rational(x) for x in y], "norm": format_rational(value)}, out)
    return 0


def cmd_decompose(args, out, err) -> int:
    G = load_graph(args.graph)
    H = homology_basis(G)
    a = _parse_class(args.klass)
    d = decompose_class(G, H, a)
    report = decomposition_to_dict(G, d)
    report["class"] = [format_rational(x) for x in a]
    report["norm_identity"] = d.norm == d.total_length()
    _dump(report, out)
    print(f"norm {d.norm} = sum of multiplicity x length {d.total_length()}", file=err)
    return 0


def cmd_circuits(args, out, err) -> int:
    G = load_graph(args.graph)
    out.write(format_circuits(enumerate_circuits(G)))
    return 0


def cmd_verify(args, out, err) -> int:
    G = load_graph(args.graph)
    H = homology_basis(G)
    ball = stable_ball(G, H, enumerate_circuits(G))
    report = verify_vertices(ball)
    result = {
        "betti": ball.betti,
        "vertex_count": len(ball),
        "bound": 2 * (2 ** ball.betti - 1),
        "vertices": [
            {"index": e.index,
             "circuit": e.circuit.signed_string() if e.circuit else None,
             "extreme": e.extreme}
            for e in report.entries
        ],
    }
    ok = report.passed and len(ball) <= result["bound"]
    if ball.betti == 0:
        result["oracle"] = "not applicable (b = 0)"
    else:
        try:
            oracle = ball_by_intersection(G, H, cap=args.oracle_cap)
        except CapExceeded as exc:
            result["oracle"] = f"skipped: {exc}"
            print(f"oracle skipped: {exc}", file=err)
        else:
            agree = set(oracle.points) == set(ball.vertices_basis)
            result["oracle"] = "agree" if agree else "DISAGREE"
            ok = ok and agree
    result["passed"] = ok
    _dump(result, out)
    print("verification " + ("passed" if ok else "FAILED"), file=err)
    return 0 if ok else 1


def cmd_gen(args, out, err) -> int:
    G = gen_corpus(args.name, seed=args.seed, vertices=args.vertices, edges=args.edges)
    out.write(serialize_graph(G))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stablenorm", description="Exact stable norm balls of weighted graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ball", help="vertices of the stable-norm unit ball")
    s.add_argument("graph")
    s.add_argument("--plot", metavar="OUT_CSV", help="write vertices and 1-skeleton as CSV (b <= 3)")
    s.add_argument("--check-bound", action="store_true", help="check the 2(2^b - 1) vertex bound")
    s.set_defaults(func=cmd_ball)

    s = sub.add_parser("norm", help="stable norm of a class given in cycle coordinates")
    s.add_argument("graph")
    s.add_argument("--class", dest="klass", required=True, metavar="P1/Q1,...")
    s.set_defaults(func=cmd_norm)

    s = sub.add_parser("decompose", help="split an integral class into simple circuits")
    s.add_argument("graph")
    s.add_argument("--class", dest="klass", required=True, metavar="N1,...")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("circuits", help="list simple oriented circuits")
    s.add_argument("graph")
    s.set_defaults(func=cmd_circuits)

    s = sub.add_parser("verify", help="certify vertices and compare with the brute-force oracle")
    s.add_argument("graph")
    s.add_argument("--oracle-cap", type=int, default=DEFAULT_EDGE_CAP, metavar="K")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", help="emit a corpus graph as JSON")
    s.add_argument("name", help="bouquet-<k>, theta, K4, K33, random or random(seed,v,e)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--vertices", type=int, default=5)
    s.add_argument("--edges", type=int, default=8)
    s.set_defaults(func=cmd_gen)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except (StableNormError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())
