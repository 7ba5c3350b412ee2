"""Command-line interface.

Subcommands: generate, transform, orbit, tile, color, verify, render.
Exit codes: 0 on success, 1 on validation failure, 2 on usage error.
Outputs carry no timestamps, so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

import numpy as np

from .algebra import MobiusMap
from .conformal import MapSpec, map_set
from .jsonio import (
    DocumentError,
    PointSetDocument,
    TilingDocument,
    read_pointset,
    read_tiling,
    write_pointset,
    write_tiling,
)
from .quasilattice import (
    generate_periodic,
    generate_quasilattice,
    point_group_order,
    sets_match,
    verify_self_similarity,
)
from .svg import RenderOptions, write_svg
from .symmetry import SymbolParseError, orbit, parse_symbol
from .tiling import COLOR_SCHEMES, build_tiling, color_partition


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasisym",
        description="Generate, transform, and render symmetric point sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a periodic or quasiperiodic set")
    p.add_argument("--kind", choices=("quasilattice", "square", "hexagonal"),
                   default="quasilattice")
    p.add_argument("--n", type=int, default=8,
                   help="rotational order (quasilattice only)")
    p.add_argument("--bound", type=int, default=1,
                   help="max |coefficient| (quasilattice only)")
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--metric", choices=("euclidean", "chebyshev"),
                   default="euclidean", help="cut shape (periodic kinds only)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed recorded in metadata; generation is deterministic")
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("transform", help="apply a conformal/anticonformal map")
    p.add_argument("--map", dest="map_kind", required=True,
                   choices=("square", "reciprocal", "inversion", "mobius",
                            "stereographic"))
    p.add_argument("--input", required=True)
    p.add_argument("--coeffs", type=float, nargs=8,
                   metavar=("aRE", "aIM", "bRE", "bIM", "cRE", "cIM", "dRE", "dIM"),
                   help="Möbius coefficients (required for --map mobius)")
    p.add_argument("--anticonformal", action="store_true",
                   help="conjugate the input first (mobius only)")
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("orbit", help="orbit of a seed under a parsed group symbol")
    p.add_argument("--symbol", required=True, help='e.g. "10L(phi=-pi/5)" or "8mK"')
    p.add_argument("--seed-point", type=float, nargs=2, default=(1.0, 0.0),
                   metavar=("X", "Y"))
    p.add_argument("--center", type=float, nargs=2, default=(0.0, 0.0),
                   metavar=("X", "Y"))
    p.add_argument("--annulus", type=float, nargs=2, metavar=("RMIN", "RMAX"))
    p.add_argument("--coefficient", type=float,
                   help="override the similarity coefficient k")
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=0,
                   help="seed recorded in metadata; orbits are deterministic")
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("tile", help="build nearest-neighbor edges, sectors, shells")
    p.add_argument("--input", required=True)
    p.add_argument("--sectors", type=int,
                   help="number of sectors (default: the document's n)")
    p.add_argument("--factor", type=float, default=1.05)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("color", help="color a tiling by a named scheme")
    p.add_argument("--input", required=True, help="tiling JSON")
    p.add_argument("--scheme", required=True, choices=COLOR_SCHEMES)
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("verify", help="run a property suite and print pass/fail")
    p.add_argument("--suite", required=True,
                   choices=("self-similarity", "rotation-order", "dihedral"))
    p.add_argument("--input", required=True)
    p.add_argument("--expect", type=int,
                   help="expected order (rotation-order / dihedral)")
    p.add_argument("--tolerance", type=float,
                   help="override the document tolerance")

    p = sub.add_parser("render", help="render a point set or tiling to SVG")
    p.add_argument("--input", help="point-set JSON")
    p.add_argument("--tiling", help="tiling JSON (takes precedence for vertices)")
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--height", type=int, default=800)
    p.add_argument("--point-radius", type=float, default=3.0)
    p.add_argument("--no-edges", action="store_true")
    p.add_argument("--rays", action="store_true", help="draw sector rays")
    p.add_argument("-o", "--output", required=True)

    return parser


def _cmd_generate(args) -> int:
    if args.kind == "quasilattice":
        s = generate_quasilattice(args.n, args.bound, args.radius,
                                  tolerance=args.tolerance)
        meta = {"bound": str(args.bound)}
    else:
        s = generate_periodic(args.kind, args.radius, metric=args.metric)
        meta = {"metric": args.metric}
    meta["seed"] = str(args.seed)
    doc = PointSetDocument.from_crystal_set(s, metadata=meta)
    write_pointset(doc, args.output)
    print(f"wrote {len(doc.points)} points to {args.output}")
    return 0


def _cmd_transform(args) -> int:
    doc = read_pointset(args.input)
    if args.map_kind == "mobius":
        if args.coeffs is None:
            raise ValueError("--map mobius requires --coeffs (8 reals)")
        a, b, c, d = (complex(args.coeffs[i], args.coeffs[i + 1])
                      for i in (0, 2, 4, 6))
        spec = MapSpec.from_mobius(
            MobiusMap(a, b, c, d, anticonformal=args.anticonformal))
    else:
        factory = {"square": MapSpec.square,
                   "reciprocal": MapSpec.reciprocal,
                   "inversion": MapSpec.inversion_unit_circle,
                   "stereographic": MapSpec.stereographic}[args.map_kind]
        spec = factory()
    image = map_set(spec, doc.embedded())
    meta = {"map": args.map_kind, "source": Path(args.input).name}
    if image.dropped:
        meta["dropped"] = str(image.dropped)
    out = PointSetDocument.from_points(image.points, n=doc.n,
                                       tolerance=doc.tolerance, metadata=meta)
    write_pointset(out, args.output)
    print(f"wrote {len(out.points)} points to {args.output}"
          + (f" ({image.dropped} at infinity dropped)" if image.dropped else ""))
    return 0


def _cmd_orbit(args) -> int:
    annulus = tuple(args.annulus) if args.annulus else None
    group = parse_symbol(args.symbol, center=complex(*args.center),
                         annulus=annulus, coefficient=args.coefficient)
    pts = orbit(group, [complex(*args.seed_point)], budget=args.budget,
                tolerance=args.tolerance)
    meta = {
        "symbol": args.symbol,
        "annulus": f"{group.annulus[0]!r},{group.annulus[1]!r}",
        "seed_point": f"{args.seed_point[0]!r},{args.seed_point[1]!r}",
        "seed": str(args.seed),
    }
    n_match = re.match(r"\s*(\d+)", args.symbol)
    n = int(n_match.group(1)) if n_match else 1
    doc = PointSetDocument.from_points(pts, n=n, tolerance=args.tolerance,
                                       metadata=meta)
    write_pointset(doc, args.output)
    print(f"wrote {len(doc.points)} orbit points to {args.output}")
    return 0


def _cmd_tile(args) -> int:
    doc = read_pointset(args.input)
    n_sectors = args.sectors if args.sectors is not None else doc.n
    t = build_tiling(doc.embedded(), n_sectors, neighbor_factor=args.factor,
                     tolerance=args.tolerance)
    out = TilingDocument.from_tiling(t, metadata={"source": Path(args.input).name})
    write_tiling(out, args.output)
    print(f"wrote tiling with {len(out.vertices)} vertices, "
          f"{len(out.edges)} edges to {args.output}")
    return 0


def _cmd_color(args) -> int:
    doc = read_tiling(args.input)
    t = doc.to_tiling()
    colored = t.with_colors(color_partition(t, args.scheme))
    meta = dict(doc.metadata)
    meta["scheme"] = args.scheme
    out = TilingDocument.from_tiling(colored, metadata=meta)
    write_tiling(out, args.output)
    n_colors = len(set(out.colors))
    print(f"wrote {args.scheme} coloring ({n_colors} colors) to {args.output}")
    return 0


def _cmd_verify(args) -> int:
    doc = read_pointset(args.input)
    tol = args.tolerance if args.tolerance is not None else doc.tolerance
    rows: list[tuple[str, bool, str]] = []

    if args.suite == "self-similarity":
        s = doc.to_crystal_set()
        report = verify_self_similarity(s)
        detail = (f"contained = checked ({report.contained}/{report.checked})"
                  if report.ok
                  else f"contained {report.contained} of {report.checked}")
        rows.append(("self-similarity", report.ok, detail))
    else:
        pts = doc.embedded()
        order = point_group_order(pts, tolerance=tol)
        ok = True if args.expect is None else order == args.expect
        detail = f"order = {order}"
        if args.expect is not None:
            detail += f" (expected {args.expect})"
        rows.append(("rotation-order", ok, detail))
        if args.suite == "dihedral":
            mirror = sets_match(pts, np.conj(pts), tol)
            rows.append(("mirror-closure", mirror,
                         "set closed under conjugation" if mirror
                         else "conjugation moves the set"))

    width = max(len(r[0]) for r in rows)
    for name, ok, detail in rows:
        print(f"[{'PASS' if ok else 'FAIL'}] {name:<{width}}  {detail}")
    return 0 if all(ok for _, ok, _ in rows) else 1


def _cmd_render(args) -> int:
    if args.input is None and args.tiling is None:
        raise ValueError("render needs --input and/or --tiling")
    tiling = read_tiling(args.tiling).to_tiling() if args.tiling else None
    points = read_pointset(args.input).embedded() if args.input else None
    options = RenderOptions(
        width_px=args.width,
        height_px=args.height,
        point_radius_px=args.point_radius,
        draw_edges=not args.no_edges,
        draw_rays=args.rays,
    )
    text = write_svg(points, tiling=tiling, options=options)
    Path(args.output).write_text(text, encoding="utf-8")
    print(f"wrote SVG to {args.output}")
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "transform": _cmd_transform,
    "orbit": _cmd_orbit,
    "tile": _cmd_tile,
    "color": _cmd_color,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def cli_run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 on --help; pass both through.
        return int(e.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except SymbolParseError as e:
        print(f"error: {e} (at position {e.position})", file=sys.stderr)
        return 1
    except (DocumentError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_run())


if __name__ == "__main__":
    main()
