"""Command-line front end.

Subcommands: project (JSON projection + trace), trace (CSV iterate table),
polygon (JSON vertex/support-line dump), regions (JSON classification),
hausdorff (JSON polygon-vs-curve diagnostics), plot (SVG rendering).

Exit statuses: 0 success, 1 runtime failure (no region matched, I/O), 2
usage or validation error.  Identical invocations print identical bytes:
JSON carries full shortest-round-trip floats, human-facing CSV is fixed at
10 decimal places.

An optional ``--defaults-file FILE`` supplies flag defaults as simple
``key=value`` lines (keys are flag names with dashes as underscores, e.g.
``max_refine=40``); explicit flags always win.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from .geometry import Point2, SuperellipseParams
from .oracle import hausdorff_estimate, max_chord
from .polygon import PolygonSpec, support_line, vertex
from .projector import InvalidConfig, ProjectionTrace, project
from .regions import NoRegionMatched, RegionKind, classify
from .svgplot import render_svg

_POLYGON_DUMP_MAX = 1 << 20


@dataclass(frozen=True)
class RunConfig:
    """Validated invocation: shape parameters plus the command's options."""

    params: SuperellipseParams
    command: str
    options: dict[str, Any]


def build_parser() -> argparse.ArgumentParser:
    return _build_parsers()[0]


def _build_parsers() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(
        prog="superproj",
        description="Metric projection onto superelliptic disks by polygonal refinement.",
    )
    parser.add_argument(
        "--defaults-file",
        default=None,
        help="file of key=value lines supplying flag defaults",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_shape(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--a", type=float, default=None, help="semi-axis a > 0")
        sp.add_argument("--b", type=float, default=None, help="semi-axis b > 0")
        sp.add_argument("--p", type=float, default=None, help="exponent p > 1")

    def add_refine(sp: argparse.ArgumentParser, tol_default: float | None) -> None:
        sp.add_argument("--k0", type=int, default=6, help="initial vertex count (default 6)")
        sp.add_argument(
            "--tol",
            type=float,
            default=tol_default,
            help="stop once two consecutive displacements fall below this"
            + ("" if tol_default else " (default: run all requested steps)"),
        )
        sp.add_argument(
            "--max-refine", type=int, default=60, help="iterate cap (default 60)"
        )

    commands: dict[str, argparse.ArgumentParser] = {}

    sp = commands["project"] = sub.add_parser(
        "project", help="project a point, print JSON with full trace"
    )
    add_shape(sp)
    sp.add_argument("--x", type=float, default=None, help="query x")
    sp.add_argument("--y", type=float, default=None, help="query y")
    add_refine(sp, 1e-10)
    sp.add_argument(
        "--points-file",
        default=None,
        help="CSV of x,y query rows; prints a JSON array instead of one object",
    )

    sp = commands["trace"] = sub.add_parser("trace", help="print the iterate table as CSV")
    add_shape(sp)
    sp.add_argument("--x", type=float, default=None, help="query x")
    sp.add_argument("--y", type=float, default=None, help="query y")
    sp.add_argument("--steps", type=int, default=None, help="number of iterates to run")
    sp.add_argument("--reference-x", type=float, default=None, help="reference point x")
    sp.add_argument("--reference-y", type=float, default=None, help="reference point y")
    add_refine(sp, None)

    sp = commands["polygon"] = sub.add_parser(
        "polygon", help="dump polygon vertices and support lines as JSON"
    )
    add_shape(sp)
    sp.add_argument("--k", type=int, default=None, help="vertex count")

    sp = commands["regions"] = sub.add_parser(
        "regions", help="classify a point against the region partition"
    )
    add_shape(sp)
    sp.add_argument("--k", type=int, default=None, help="vertex count")
    sp.add_argument("--x", type=float, default=None, help="query x")
    sp.add_argument("--y", type=float, default=None, help="query y")

    sp = commands["hausdorff"] = sub.add_parser(
        "hausdorff", help="polygon-vs-curve distance diagnostics"
    )
    add_shape(sp)
    sp.add_argument("--k", type=int, default=None, help="vertex count")
    sp.add_argument("--samples", type=int, default=10**4, help="sample count (default 10000)")

    sp = commands["plot"] = sub.add_parser(
        "plot", help="render curve/polygon/regions/trace to SVG"
    )
    add_shape(sp)
    sp.add_argument("--k", type=int, default=None, help="polygon vertex count to draw")
    sp.add_argument("--x", type=float, default=None, help="query x (draws its trace)")
    sp.add_argument("--y", type=float, default=None, help="query y")
    add_refine(sp, 1e-10)
    sp.add_argument("--out", default=None, help="output SVG path")

    # accepted (and already handled by the pre-parse) in either position
    for sp in commands.values():
        sp.add_argument("--defaults-file", default=None, help=argparse.SUPPRESS)
    return parser, commands


class _UsageError(ValueError):
    pass


def _require(args: argparse.Namespace, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise _UsageError(f"--{name.replace('_', '-')} is required")


def _shape(args: argparse.Namespace) -> SuperellipseParams:
    _require(args, "a", "b", "p")
    return SuperellipseParams(args.a, args.b, args.p)


def _query(args: argparse.Namespace) -> Point2:
    _require(args, "x", "y")
    return Point2(args.x, args.y)


def _trace_json(trace: ProjectionTrace) -> dict[str, Any]:
    return {
        "projection": [trace.final_point.x, trace.final_point.y],
        "inside": trace.inside,
        "iterations": trace.iterations,
        "k_final": trace.k_final,
        "stop_reason": trace.stop_reason.value,
        "trace": [
            {
                "n": s.n,
                "k": s.k,
                "point": [s.point.x, s.point.y],
                "locus": None
                if s.locus is None
                else {"type": s.locus.kind.value, "index": s.locus.index},
            }
            for s in trace.steps
        ],
    }


def _read_points_file(path: str) -> list[Point2]:
    points: list[Point2] = []
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            cells = [c.strip() for c in row if c.strip()]
            if not cells:
                continue
            if [c.lower() for c in cells] == ["x", "y"]:
                continue  # optional header row
            if len(cells) != 2:
                raise _UsageError(f"points file rows must be x,y — got {row!r}")
            points.append(Point2(float(cells[0]), float(cells[1])))
    if not points:
        raise _UsageError(f"points file {path!r} contains no points")
    return points


def _cmd_project(cfg: RunConfig, args: argparse.Namespace) -> int:
    kwargs = dict(k0=args.k0, tol=args.tol, max_refine=args.max_refine)
    if args.points_file is not None:
        results = [
            _trace_json(project(cfg.params, q, **kwargs))
            for q in _read_points_file(args.points_file)
        ]
        print(json.dumps(results, indent=2))
        return 0
    trace = project(cfg.params, _query(args), **kwargs)
    print(json.dumps(_trace_json(trace), indent=2))
    return 0


def _cmd_trace(cfg: RunConfig, args: argparse.Namespace) -> int:
    _require(args, "steps")
    if args.steps < 0:
        raise _UsageError(f"--steps must be >= 0, got {args.steps}")
    if (args.reference_x is None) != (args.reference_y is None):
        raise _UsageError("--reference-x and --reference-y must be given together")
    reference = None
    if args.reference_x is not None:
        reference = Point2(args.reference_x, args.reference_y)

    header = "n,k,x,y" + (",abs_error" if reference is not None else "")
    print(header)
    if args.steps == 0:
        return 0
    trace = project(
        cfg.params, _query(args), k0=args.k0, tol=args.tol, max_refine=args.steps
    )
    for step in trace.steps:
        row = f"{step.n},{step.k},{step.point.x:.10f},{step.point.y:.10f}"
        if reference is not None:
            row += f",{step.point.dist(reference):.10f}"
        print(row)
    return 0


def _cmd_polygon(cfg: RunConfig, args: argparse.Namespace) -> int:
    _require(args, "k")
    if not 3 <= args.k <= _POLYGON_DUMP_MAX:
        raise _UsageError(f"--k must be in [3, {_POLYGON_DUMP_MAX}] for a full dump")
    spec = PolygonSpec(cfg.params, args.k)
    verts = [vertex(spec, t) for t in range(args.k)]
    lines = [support_line(spec, t) for t in range(args.k)]
    out = {
        "k": args.k,
        "vertices": [[v.x, v.y] for v in verts],
        "support_lines": [{"a": [ln.a.x, ln.a.y], "b": ln.b} for ln in lines],
    }
    print(json.dumps(out, indent=2))
    return 0


def _cmd_regions(cfg: RunConfig, args: argparse.Namespace) -> int:
    _require(args, "k")
    region = classify(PolygonSpec(cfg.params, args.k), _query(args))
    out = {"region": {"type": region.kind.value, "index": region.index}}
    print(json.dumps(out, indent=2))
    return 0


def _cmd_hausdorff(cfg: RunConfig, args: argparse.Namespace) -> int:
    _require(args, "k")
    spec = PolygonSpec(cfg.params, args.k)
    out = {
        "estimate": hausdorff_estimate(spec, samples=args.samples),
        "max_chord": max_chord(spec),
    }
    print(json.dumps(out, indent=2))
    return 0


def _cmd_plot(cfg: RunConfig, args: argparse.Namespace) -> int:
    _require(args, "out")
    if (args.x is None) != (args.y is None):
        raise _UsageError("--x and --y must be given together")
    query = trace = None
    if args.x is not None:
        query = Point2(args.x, args.y)
        trace = project(
            cfg.params, query, k0=args.k0, tol=args.tol, max_refine=args.max_refine
        )
    svg = render_svg(cfg.params, k=args.k, query=query, trace=trace)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


_DISPATCH = {
    "project": _cmd_project,
    "trace": _cmd_trace,
    "polygon": _cmd_polygon,
    "regions": _cmd_regions,
    "hausdorff": _cmd_hausdorff,
    "plot": _cmd_plot,
}

# Flags settable through --defaults-file, mapped to their value parser.
_DEFAULTABLE: dict[str, Any] = {
    "a": float,
    "b": float,
    "p": float,
    "x": float,
    "y": float,
    "k0": int,
    "tol": float,
    "max_refine": int,
    "steps": int,
    "k": int,
    "samples": int,
    "reference_x": float,
    "reference_y": float,
    "points_file": str,
    "out": str,
}


def _load_defaults_file(path: str) -> dict[str, Any]:
    defaults: dict[str, Any] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise _UsageError(f"{path}:{lineno}: expected key=value, got {raw.rstrip()!r}")
            key, _, value = line.partition("=")
            key = key.strip().replace("-", "_")
            if key not in _DEFAULTABLE:
                raise _UsageError(f"{path}:{lineno}: unknown key {key!r}")
            try:
                defaults[key] = _DEFAULTABLE[key](value.strip())
            except ValueError as exc:
                raise _UsageError(f"{path}:{lineno}: bad value for {key!r}: {exc}") from exc
    return defaults


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, commands = _build_parsers()

    # Two-phase parse: pull --defaults-file out first so its values can be
    # installed as parser defaults before the real parse.  Defaults must be
    # set on every subcommand parser as well — a subparser parses into a
    # fresh namespace, so top-level defaults alone never reach its flags.
    try:
        probe = argparse.ArgumentParser(add_help=False)
        probe.add_argument("--defaults-file", default=None)
        known, _rest = probe.parse_known_args(argv)
        if known.defaults_file is not None:
            defaults = _load_defaults_file(known.defaults_file)
            parser.set_defaults(**defaults)
            for sp in commands.values():
                sp.set_defaults(**defaults)
    except (_UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        cfg = RunConfig(params=_shape(args), command=args.command, options=vars(args))
        return _DISPATCH[args.command](cfg, args)
    except NoRegionMatched as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InvalidConfig, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
