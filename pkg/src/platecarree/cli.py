"""Command-line interface.

Coordinates are always given as ``lat,lon`` in degrees (latitude first).
Option precedence: command-line flags, then ``--config FILE``
(``key = value`` lines), then built-in defaults.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from pathlib import Path

from platecarree.distance import (
    arc_from_chord_paper_variant,
    chord_distance,
    distance_report,
    great_circle_distance,
    haversine_distance,
    planar_distance,
)
from platecarree.errors import GeodesyError
from platecarree.geo import GeoPoint, SphereModel, deg_to_rad
from platecarree.projection import MapPoint, ProjectionParams, forward, inverse
from platecarree.report import fmt, format_survey, load_pairs, write_atomic
from platecarree.survey import GridSpec, random_pairs, run_survey

log = logging.getLogger("platecarree")

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2

CONFIG_DEFAULTS = {
    "radius_km": "6371",
    "central_meridian_deg": "0",
    "standard_parallel_deg": "0",
    "output": None,
    "format": None,
}

METHODS = ("planar", "chord", "great-circle", "haversine", "paper-arcsin", "report")

# value-taking flags whose argument may legitimately start with "-"
_VALUE_FLAGS = {"--lat", "--lon", "--x", "--y", "--from", "--to", "--central-meridian", "--standard-parallel"}
_NEGATIVE = re.compile(r"^-[\d.]")


class UsageError(GeodesyError):
    pass


def _normalize_argv(argv: list[str]) -> list[str]:
    # argparse would read "-3.67,-39.2" as an option; glue it to its flag
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and _NEGATIVE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def read_config(path: str) -> dict[str, str]:
    values = {}
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in CONFIG_DEFAULTS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value
    return values


def parse_latlon(text: str) -> GeoPoint:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected LAT,LON in degrees, got {text!r}")
    try:
        lat, lon = float(parts[0]), float(parts[1])
    except ValueError:
        raise UsageError(f"expected LAT,LON in degrees, got {text!r}") from None
    return GeoPoint.from_degrees(lat, lon)


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("model")
    g.add_argument("--radius", type=float, dest="radius_km", help="sphere radius in km (default 6371)")
    g.add_argument("--central-meridian", type=float, dest="central_meridian_deg", help="degrees (default 0)")
    g.add_argument("--standard-parallel", type=float, dest="standard_parallel_deg", help="degrees (default 0)")
    g.add_argument("--config", help="key = value file; flags override it")
    g.add_argument("-o", "--output", help="write to this file instead of stdout")
    g.add_argument("--format", choices=("csv", "svg", "text"), help="output format")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="platecarree",
        description="Equidistant cylindrical projection and distance distortion. "
        "Points are LAT,LON in degrees (latitude first).",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("project", parents=[common], help="geographic -> map coordinates (km)")
    p.add_argument("--lat", type=float, help="latitude in degrees")
    p.add_argument("--lon", type=float, help="longitude in degrees")
    p.add_argument("--inverse", action="store_true", help="map -> geographic; takes --x/--y")
    p.add_argument("--x", type=float, help="easting in km (with --inverse)")
    p.add_argument("--y", type=float, help="northing in km (with --inverse)")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("distance", parents=[common], help="distance between two points (km)")
    p.add_argument("--from", dest="src", required=True, metavar="LAT,LON")
    p.add_argument("--to", dest="dst", required=True, metavar="LAT,LON")
    p.add_argument("--method", choices=METHODS, default="report")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("survey", parents=[common], help="distance report over many pairs (CSV)")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--pairs", metavar="CSV", help="pair file: name_a,lat_a,lon_a,name_b,lat_b,lon_b")
    src.add_argument("--random", type=int, metavar="N", help="N area-uniform random pairs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--wrapped-planar", action="store_true", help="add antimeridian-wrapped planar distance")
    p.add_argument("--plot", metavar="PATH", help="also save an error-vs-latitude figure")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("tissot", parents=[common], help="SVG of the graticule with Tissot indicatrices")
    p.add_argument("--grid-step", type=float, default=30.0, help="degrees (default 30)")
    p.add_argument("--ellipse-scale", type=float, default=500.0, help="km radius of a unit indicatrix (default 500)")
    p.add_argument("--margin", type=float, default=10.0, help="pole exclusion in degrees (default 10)")
    p.set_defaults(func=cmd_tissot)
    return parser


def resolve(args: argparse.Namespace) -> None:
    """Fill unset model options from the config file, then built-in defaults."""
    config = read_config(args.config) if args.config else {}
    for key, default in CONFIG_DEFAULTS.items():
        if getattr(args, key) is None:
            setattr(args, key, config.get(key, default))
    try:
        args.radius_km = float(args.radius_km)
        args.central_meridian_deg = float(args.central_meridian_deg)
        args.standard_parallel_deg = float(args.standard_parallel_deg)
    except ValueError as exc:
        raise UsageError(f"bad numeric setting: {exc}") from None
    if args.format not in (None, "csv", "svg", "text"):
        raise UsageError(f"unknown format {args.format!r}")
    args.sphere = SphereModel(args.radius_km)
    args.params = ProjectionParams(deg_to_rad(args.central_meridian_deg), deg_to_rad(args.standard_parallel_deg))


def _want(args, allowed: tuple[str, ...]) -> str:
    fmt_ = args.format or allowed[0]
    if fmt_ not in allowed:
        raise UsageError(f"{args.command} supports --format {'|'.join(allowed)}, not {fmt_}")
    return fmt_


def cmd_project(args) -> str:
    kind = _want(args, ("text", "csv"))
    if args.inverse:
        if args.x is None or args.y is None:
            raise UsageError("--inverse needs --x and --y")
        g = inverse(MapPoint(args.x, args.y), args.params, args.sphere)
        lat, lon = fmt(g.lat_deg, 6), fmt(g.lon_deg, 6)
        return f"lat_deg,lon_deg\n{lat},{lon}\n" if kind == "csv" else f"{lat}, {lon}\n"
    if args.lat is None or args.lon is None:
        raise UsageError("project needs --lat and --lon (or --inverse with --x/--y)")
    m = forward(GeoPoint.from_degrees(args.lat, args.lon), args.params, args.sphere)
    x, y = fmt(m.x, 6), fmt(m.y, 6)
    return f"x_km,y_km\n{x},{y}\n" if kind == "csv" else f"{x}, {y}\n"


def cmd_distance(args) -> str:
    kind = _want(args, ("text", "csv"))
    p, q = parse_latlon(args.src), parse_latlon(args.dst)
    s, params = args.sphere, args.params
    if args.method == "report":
        rep = distance_report(p, q, params, s)
        cols = {
            "planar_km": rep.planar_km,
            "chord_km": rep.chord_km,
            "great_circle_km": rep.great_circle_km,
            "haversine_km": rep.haversine_km,
            "paper_arcsin_km": rep.paper_arcsin_km,
            "error_pct": rep.planar_error_pct,
        }
        if kind == "csv":
            return ",".join(cols) + "\n" + ",".join(fmt(v, 3) for v in cols.values()) + "\n"
        return "".join(f"{k}: {fmt(v, 3)}\n" for k, v in cols.items())
    compute = {
        "planar": lambda: planar_distance(p, q, params, s),
        "chord": lambda: chord_distance(p, q, s),
        "great-circle": lambda: great_circle_distance(p, q, s),
        "haversine": lambda: haversine_distance(p, q, s),
        "paper-arcsin": lambda: arc_from_chord_paper_variant(chord_distance(p, q, s), s),
    }[args.method]
    value = fmt(compute(), 3)
    return f"{args.method.replace('-', '_')}_km\n{value}\n" if kind == "csv" else f"{value}\n"


def cmd_survey(args) -> str:
    _want(args, ("csv",))
    if args.pairs is not None:
        pairs = load_pairs(args.pairs)
    else:
        if args.random <= 0:
            raise UsageError(f"--random must be positive, got {args.random}")
        pairs = random_pairs(args.random, args.seed)
    rows = run_survey(pairs, args.params, args.sphere, wrapped_planar=args.wrapped_planar)
    if args.plot:
        from platecarree.plotting import plot_survey

        plot_survey(rows, args.plot)
        log.info("wrote figure %s", args.plot)
    return format_survey(rows, wrapped_planar=args.wrapped_planar)


def cmd_tissot(args) -> str:
    from platecarree.svg import tissot_svg

    _want(args, ("svg",))
    if not args.ellipse_scale > 0:
        raise UsageError(f"--ellipse-scale must be positive, got {args.ellipse_scale}")
    grid = GridSpec(args.grid_step, args.grid_step, args.margin)
    return tissot_svg(grid, args.ellipse_scale, args.params, args.sphere)


def main(argv: list[str] | None = None) -> int:
    argv = _normalize_argv(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        resolve(args)
        text = args.func(args)
        if args.output:
            write_atomic(Path(args.output), text)
        else:
            sys.stdout.write(text)
    except GeodesyError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        log.exception("internal error")
        print(f"{parser.prog} {args.command}: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
