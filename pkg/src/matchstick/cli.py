"""Command-line interface.

Output is JSON-lines (one JSON document per line) except for `render`, which
writes an SVG file.  `-` means stdin for file arguments.  Exit codes:
0 success, 1 validation failure, 2 usage error, 3 internal-consistency error
(a theorem-level invariant failed, which should never happen).

The environment variable MATCHSTICK_THREADS (positive integer) caps internal
parallelism; the current implementation is sequential, so any cap is honored.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .builders import build_extremal, build_hexagon_patch, random_lattice_subgraph
from .census import check_harborth, face_census
from .components import decompose
from .graph import ConsistencyError, MatchstickGraph
from .isoperimetry import DirectionSet, check_classic, check_hexagonal, polygon
from .lattice import BudgetError, harborth_bound
from .oracle import max_area_rearrangement, max_edges_lattice
from .render import render_svg
from .trace import claim_trace

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> MatchstickGraph:
    return MatchstickGraph.from_json(_read(path))


def _load_polygon(path: str):
    data = json.loads(_read(path))
    return polygon(data["vertices"])


def _emit(obj) -> None:
    print(json.dumps(obj) if not isinstance(obj, str) else obj)


def cmd_validate(args) -> int:
    g = _load_graph(args.file)
    report = g.validate(tol=args.tol, penny_mode=args.penny)
    _emit(report.to_json())
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_stats(args) -> int:
    g = _load_graph(args.file)
    report = g.validate(tol=args.tol)
    if not report.ok:
        _emit(report.to_json())
        return EXIT_INVALID
    try:
        census = face_census(g)
    except ValueError as exc:
        _emit({"error": str(exc)})
        return EXIT_INVALID
    bound = check_harborth(g)
    _emit({
        "n": census.n, "e": census.e, "b": census.b,
        "f": {str(k): v for k, v in sorted(census.f.items())},
        "F": census.F, "f3": census.f3,
        "bound": bound.bound, "tight": bound.tight,
    })
    return EXIT_OK


def cmd_bound(args) -> int:
    print(harborth_bound(args.n))
    return EXIT_OK


def cmd_build(args) -> int:
    if args.kind == "extremal":
        g = build_extremal(args.size)
    elif args.kind == "hexagon":
        g = build_hexagon_patch(args.size)
    else:
        g = random_lattice_subgraph(args.size, seed=args.seed,
                                    require_2connected=args.two_connected)
    _emit(g.to_json())
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = _load_graph(args.file)
    report = g.validate(tol=args.tol)
    if not report.ok:
        _emit(report.to_json())
        return EXIT_INVALID
    try:
        dec = decompose(g, tol=args.tol)
    except ValueError as exc:
        _emit({"error": str(exc)})
        return EXIT_INVALID
    _emit(dec.to_json())
    return EXIT_OK


def cmd_iso(args) -> int:
    p = _load_polygon(args.file)
    if args.variant == "classic":
        _emit(check_classic(p))
    else:
        _emit(check_hexagonal(p, DirectionSet(theta0=args.theta0)))
    return EXIT_OK


def cmd_trace(args) -> int:
    g = _load_graph(args.file)
    report = g.validate(tol=args.tol)
    if not report.ok:
        _emit(report.to_json())
        return EXIT_INVALID
    _emit(claim_trace(g).to_json())
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.mode == "max-edges":
        max_e, witness = max_edges_lattice(args.n)
        _emit({"n": args.n, "max_e": max_e, "bound": harborth_bound(args.n),
               "witness_points": [[p.m, p.n] for p in witness.points]})
    else:
        p = _load_polygon(args.file)
        _emit({"max_area": max_area_rearrangement(p), "original_area": p.area})
    return EXIT_OK


def cmd_render(args) -> int:
    g = _load_graph(args.file)
    report = g.validate()
    dec = None
    if report.ok:
        try:
            dec = decompose(g)
        except ValueError:
            dec = None
    svg = render_svg(g, dec)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return EXIT_OK


def _check_thread_cap() -> None:
    raw = os.environ.get("MATCHSTICK_THREADS")
    if raw is None:
        return
    try:
        cap = int(raw)
    except ValueError:
        raise SystemExit(EXIT_USAGE)
    if cap < 1:
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="matchstick",
                                 description="Matchstick-graph toolbox")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="geometric validation report")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--penny", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("stats", help="face census and edge-bound check")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("bound", help="max edges of an n-vertex matchstick graph")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("build", help="construct lattice graphs")
    p.add_argument("kind", choices=["extremal", "hexagon", "random"])
    p.add_argument("size", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--two-connected", action="store_true")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("decompose", help="lattice-component decomposition")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("iso", help="isoperimetric inequality checks")
    p.add_argument("variant", choices=["classic", "hex"])
    p.add_argument("file")
    p.add_argument("--theta0", type=float, default=0.0)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("trace", help="diagnostic claim trace")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("oracle", help="brute-force oracles")
    osub = p.add_subparsers(dest="mode", required=True)
    q = osub.add_parser("max-edges")
    q.add_argument("n", type=int)
    q.set_defaults(func=cmd_oracle, mode="max-edges")
    q = osub.add_parser("rearrange")
    q.add_argument("file")
    q.set_defaults(func=cmd_oracle, mode="rearrange")

    p = sub.add_parser("render", help="emit an SVG drawing")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_render)

    return ap


def main(argv=None) -> int:
    _check_thread_cap()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(json.dumps({"consistency_error": str(exc)}), file=sys.stderr)
        return EXIT_INCONSISTENT
    except (BudgetError, ValueError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
