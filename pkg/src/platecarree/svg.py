"""Deterministic SVG rendering of the projected graticule and Tissot ellipses.

Output is plain text assembled in a fixed order with three-decimal
coordinates, so identical inputs give byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from platecarree.geo import GeoPoint, SphereModel
from platecarree.projection import (
    DEFAULT_PARAMS,
    DEFAULT_SPHERE,
    ProjectionParams,
    forward,
    map_bounds,
)
from platecarree.report import fmt
from platecarree.survey import GridSpec, distortion_field

CANVAS_WIDTH_PX = 1024.0


@dataclass(frozen=True)
class Ellipse:
    cx: float
    cy: float
    rx: float
    ry: float
    lat_deg: float
    lon_deg: float


@dataclass(frozen=True)
class Line:
    x1: float
    y1: float
    x2: float
    y2: float
    kind: str  # "meridian" or "parallel"


@dataclass
class SvgScene:
    width: float
    height: float
    px_per_km: float
    lines: list[Line] = field(default_factory=list)
    ellipses: list[Ellipse] = field(default_factory=list)
    annotations: list[tuple[float, float, str]] = field(default_factory=list)


def build_scene(
    grid: GridSpec = GridSpec(),
    ellipse_scale_km: float = 500.0,
    params: ProjectionParams = DEFAULT_PARAMS,
    s: SphereModel = DEFAULT_SPHERE,
    width_px: float = CANVAS_WIDTH_PX,
) -> SvgScene:
    """Lay out the map rectangle at ``width_px`` wide (2:1 for default parameters)."""
    xmin, ymin, xmax, ymax = map_bounds(params, s)
    px_per_km = width_px / (xmax - xmin)
    height_px = (ymax - ymin) * px_per_km

    def to_px(x: float, y: float) -> tuple[float, float]:
        # SVG y grows downward
        return (x - xmin) * px_per_km, (ymax - y) * px_per_km

    scene = SvgScene(width_px, height_px, px_per_km)

    for lon in grid.longitudes():
        top = forward(GeoPoint.from_degrees(90.0, lon), params, s)
        bottom = forward(GeoPoint.from_degrees(-90.0, lon), params, s)
        scene.lines.append(Line(*to_px(*top), *to_px(*bottom), "meridian"))
    n_par = round(180.0 / grid.lat_step)
    for i in range(n_par + 1):
        lat = 90.0 - i * grid.lat_step
        west = forward(GeoPoint.from_degrees(lat, -180.0), params, s)
        east = forward(GeoPoint.from_degrees(lat, 180.0), params, s)
        scene.lines.append(Line(*to_px(*west), *to_px(*east), "parallel"))

    base = ellipse_scale_km * px_per_km
    for point, ell, _ in distortion_field(grid, params):
        cx, cy = to_px(*forward(point, params, s))
        scene.ellipses.append(
            Ellipse(
                cx,
                cy,
                ell.semi_axis_parallel * base,
                ell.semi_axis_meridian * base,
                point.lat_deg,
                point.lon_deg,
            )
        )

    scene.annotations.append((4.0, height_px - 4.0, "(-Rπ, -Rπ/2)"))
    scene.annotations.append((width_px - 4.0, 14.0, "(Rπ, Rπ/2)"))
    return scene


def render_svg(scene: SvgScene) -> str:
    w, h = fmt(scene.width, 3), fmt(scene.height, 3)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<title>Tissot indicatrices, equidistant cylindrical projection '
        f'({fmt(scene.px_per_km, 9)} px/km)</title>',
        f'<rect x="0.000" y="0.000" width="{w}" height="{h}" '
        f'fill="white" stroke="black" stroke-width="1.5"/>',
        '<g id="graticule" stroke="#999999" stroke-width="0.5" fill="none">',
    ]
    for ln in scene.lines:
        out.append(
            f'<line class="{ln.kind}" x1="{fmt(ln.x1, 3)}" y1="{fmt(ln.y1, 3)}" '
            f'x2="{fmt(ln.x2, 3)}" y2="{fmt(ln.y2, 3)}"/>'
        )
    out.append("</g>")
    out.append('<g id="indicatrices" stroke="#cc3311" stroke-width="0.8" fill="#cc3311" fill-opacity="0.25">')
    for e in scene.ellipses:
        out.append(
            f'<ellipse data-lat="{fmt(e.lat_deg, 3)}" data-lon="{fmt(e.lon_deg, 3)}" '
            f'cx="{fmt(e.cx, 3)}" cy="{fmt(e.cy, 3)}" rx="{fmt(e.rx, 3)}" ry="{fmt(e.ry, 3)}"/>'
        )
    out.append("</g>")
    out.append('<g id="annotations" font-family="sans-serif" font-size="10" fill="black">')
    for i, (x, y, text) in enumerate(scene.annotations):
        anchor = "start" if i == 0 else "end"
        out.append(
            f'<text x="{fmt(x, 3)}" y="{fmt(y, 3)}" text-anchor="{anchor}">{escape(text)}</text>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def tissot_svg(
    grid: GridSpec = GridSpec(),
    ellipse_scale_km: float = 500.0,
    params: ProjectionParams = DEFAULT_PARAMS,
    s: SphereModel = DEFAULT_SPHERE,
) -> str:
    return render_svg(build_scene(grid, ellipse_scale_km, params, s))
