"""Command-line interface: ``latpoly <command> ...``.

Exit codes: 0 success, 2 invalid input or parameters, 3 a verification
found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import affine, appending as app, bezout, constructions, enumeration, io, render
from .core import PolygonError, analyze

EXIT_OK, EXIT_INPUT, EXIT_COUNTEREXAMPLE = 0, 2, 3


class UsageError(Exception):
    pass


_PAIR = re.compile(r"\[\s*(-?\d+),\s*(-?\d+)\s*\]")


def _emit(obj) -> None:
    # keep [x, y] pairs on one line
    print(_PAIR.sub(r"[\1, \2]", json.dumps(obj, indent=2)))


def _parse_xy(text: str) -> tuple[int, int]:
    try:
        x, y = text.split(",")
        return int(x), int(y)
    except ValueError:
        raise UsageError(f"expected x,y but got {text!r}") from None


def cmd_analyze(args) -> int:
    P = io.read_polygon(args.file)
    _emit({"polygon": io.polygon_to_dict(P), **analyze(P).to_dict()})
    return EXIT_OK


def cmd_apex(args) -> int:
    P = io.read_polygon(args.file)
    u, v = P.edge(args.edge)
    if args.all:
        cands = bezout.apex_candidates(P, args.edge, include_canonical=True)
        _emit({"edge": args.edge, "candidates": [c.to_dict() for c in cands]})
    else:
        w = bezout.canonical_apex(u, v)
        d = app.can_append(P, args.edge)
        _emit({"edge": args.edge, "apex": list(w), "appendable": d.ok, "reason": d.reason})
    return EXIT_OK


def cmd_append(args) -> int:
    P = io.read_polygon(args.file)
    if args.saturate:
        res = app.saturate(P)
        _emit({
            "reports": [r.to_dict() for r in res.reports],
            "appends": res.count,
            "polygon": io.polygon_to_dict(res.final),
        })
        return EXIT_OK
    if args.edge is None:
        raise UsageError("append needs --edge or --saturate")
    apex = _parse_xy(args.apex) if args.apex else None
    report = app.append(P, args.edge, apex)
    _emit({"reports": [report.to_dict()], "polygon": io.polygon_to_dict(report.after)})
    return EXIT_OK


def cmd_construct(args) -> int:
    P = constructions.construct(args.kind, args.k, args.n)
    _emit(io.polygon_to_dict(P))
    return EXIT_OK


def cmd_normalize(args) -> int:
    pts = io.read_points(args.file)
    F = affine.normalize_collinear(pts)
    _emit({"map": F.to_dict(), "points": [list(F(p)) for p in pts]})
    return EXIT_OK


def _verify_classification(args) -> int:
    kmax = args.kmax if args.kmax is not None else args.k
    reports, failed = [], False
    for k in range(args.k, kmax + 1):
        rep = enumeration.classify(k, args.margin)
        reports.append(rep.to_dict())
        failed |= rep.achievable_n != {3, 4, 5, 6}
    _emit({"classification": reports, "counterexample": failed})
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def _verify_append_once(args) -> int:
    bad, nested = [], 0
    polys = enumeration.corpus(args.seed, args.box, args.count)
    for P in polys:
        bad.extend(app.verify_append_once(P))
        nested += len(app.saturate(P).nested)
    _emit({
        "polygons": len(polys),
        "counterexamples": [b.to_dict() for b in bad],
        # saturation appends on edges created by an earlier append
        "nested_appends": nested,
    })
    return EXIT_COUNTEREXAMPLE if bad else EXIT_OK


def _verify_coleman(args) -> int:
    polys = enumeration.corpus(args.seed, args.box, args.count)
    bad = enumeration.inequality_violations(polys)
    _emit({"polygons": len(polys), "violations": [b.to_dict() for b in bad]})
    return EXIT_COUNTEREXAMPLE if bad else EXIT_OK


def _verify_strip(args) -> int:
    res = enumeration.strip_violation_search(args.k)
    _emit(res.to_dict())
    return EXIT_COUNTEREXAMPLE if res.counterexample is not None else EXIT_OK


def cmd_verify(args) -> int:
    return {
        "classification": _verify_classification,
        "append-once": _verify_append_once,
        "coleman": _verify_coleman,
        "strip": _verify_strip,
    }[args.check](args)


def cmd_render(args) -> int:
    P = io.read_polygon(args.file)
    overlay = io.read_polygon(args.overlay) if args.overlay else None
    opts = render.RenderOptions(
        format=args.format,
        grid=args.grid,
        highlight_interior=args.interior,
        overlay=overlay,
        scale=args.scale,
    )
    sys.stdout.write(render.render(P, opts))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latpoly", description="Convex lattice polygon toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="count boundary and interior points")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("apex", help="closest exterior lattice point to an edge")
    p.add_argument("file")
    p.add_argument("--edge", type=int, required=True)
    p.add_argument("--all", action="store_true", help="list every candidate apex")
    p.set_defaults(func=cmd_apex)

    p = sub.add_parser("append", help="append primitive triangles")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--edge", type=int)
    g.add_argument("--saturate", action="store_true")
    p.add_argument("--apex", help="explicit apex x,y")
    p.set_defaults(func=cmd_append)

    p = sub.add_parser("construct", help="build a polygon family member")
    p.add_argument("kind", choices=["collinear", "noncollinear"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("normalize", help="map collinear points to (1,0)..(k,0)")
    p.add_argument("file")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("verify", help="run a verification search")
    p.add_argument("check", choices=["classification", "append-once", "coleman", "strip"])
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--kmax", type=int)
    p.add_argument("--margin", type=int, default=2)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--box", type=int, default=16)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a polygon as SVG or TikZ")
    p.add_argument("file")
    p.add_argument("--format", choices=["svg", "tikz"], default="svg")
    p.add_argument("--grid", action="store_true")
    p.add_argument("--interior", action="store_true")
    p.add_argument("--overlay")
    p.add_argument("--scale", type=int, default=40)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (PolygonError, ValueError, IndexError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
