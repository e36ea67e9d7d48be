"""Distances between two points: on the map, through the sphere and along it.

``planar_distance`` is what a ruler on the projected map measures.
``chord_distance`` is the straight line through the Earth, and
``arc_from_chord`` turns it into the surface (great-circle) distance.
``haversine_distance`` reaches the same surface distance by an independent
identity, so the two routes can check each other.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from platecarree.errors import InvalidChordError
from platecarree.geo import GeoPoint, SphereModel, spherical_to_cartesian
from platecarree.projection import DEFAULT_PARAMS, DEFAULT_SPHERE, ProjectionParams, forward

# tolerated relative overshoot of a chord past the diameter (round-off only)
_CHORD_SLACK = 1e-12


def planar_distance(
    p: GeoPoint,
    q: GeoPoint,
    params: ProjectionParams = DEFAULT_PARAMS,
    s: SphereModel = DEFAULT_SPHERE,
) -> float:
    """Euclidean distance between the projected points, in km.

    No antimeridian wrapping: (170E, 150W) are measured the long way
    across the map. See :func:`wrapped_planar_distance`.
    """
    a = forward(p, params, s)
    b = forward(q, params, s)
    return math.hypot(a.x - b.x, a.y - b.y)


def wrap_angle(angle: float) -> float:
    """Wrap an angle difference into [-pi, pi]."""
    return math.remainder(angle, math.tau)


def wrapped_planar_distance(
    p: GeoPoint,
    q: GeoPoint,
    params: ProjectionParams = DEFAULT_PARAMS,
    s: SphereModel = DEFAULT_SPHERE,
) -> float:
    """Planar distance with the longitude difference taken the short way round."""
    r = s.radius_km
    dx = r * wrap_angle(p.lon - q.lon) * params.cos_standard_parallel
    dy = r * (p.lat - q.lat)
    return math.hypot(dx, dy)


def chord_distance(p: GeoPoint, q: GeoPoint, s: SphereModel = DEFAULT_SPHERE) -> float:
    """Straight-line distance through the sphere, in km.

    Algebraically ``R sqrt(2 - 2 cos(lat1) cos(lat2) cos(lon1 - lon2) - 2 sin(lat1) sin(lat2))``;
    evaluated as the norm of the Cartesian difference, which does not
    cancel catastrophically for nearby points.
    """
    a = spherical_to_cartesian(p, s)
    b = spherical_to_cartesian(q, s)
    return math.sqrt((a.x - b.x) ** 2 + (a.y - b.y) ** 2 + (a.z - b.z) ** 2)


def _chord_ratio(d: float, s: SphereModel) -> float:
    diameter = 2.0 * s.radius_km
    if not math.isfinite(d) or d < 0 or d > diameter * (1 + _CHORD_SLACK):
        raise InvalidChordError(f"chord must lie in [0, {diameter}] km, got {d!r}")
    return min(d / diameter, 1.0)


def arc_from_chord(d: float, s: SphereModel = DEFAULT_SPHERE) -> float:
    """Surface distance subtended by a chord of length ``d``: ``2R asin(d / 2R)``.

    Valid for every central angle up to pi.
    """
    return 2.0 * s.radius_km * math.asin(_chord_ratio(d, s))


def arc_from_chord_paper_variant(d: float, s: SphereModel = DEFAULT_SPHERE) -> float:
    """``R asin(d / (2R^2) * sqrt(4R^2 - d^2))`` with the principal arcsine.

    Matches :func:`arc_from_chord` while the central angle is at most
    pi/2 (``d <= R sqrt 2``). Past that the principal branch returns the
    supplementary angle, so the result is ``pi R - arc_from_chord(d)``
    and drops to 0 for antipodal points. Kept for reproducing published
    figures that used this form.
    """
    ratio = _chord_ratio(d, s)
    # sin(alpha) = 2 (d/2R) sqrt(1 - (d/2R)^2)
    sin_alpha = 2.0 * ratio * math.sqrt(max(0.0, 1.0 - ratio * ratio))
    return s.radius_km * math.asin(min(sin_alpha, 1.0))


def haversin(angle: float) -> float:
    return math.sin(angle / 2.0) ** 2


def haversine_distance(p: GeoPoint, q: GeoPoint, s: SphereModel = DEFAULT_SPHERE) -> float:
    h = haversin(p.lat - q.lat) + math.cos(p.lat) * math.cos(q.lat) * haversin(p.lon - q.lon)
    return 2.0 * s.radius_km * math.asin(math.sqrt(min(h, 1.0)))


def great_circle_distance(p: GeoPoint, q: GeoPoint, s: SphereModel = DEFAULT_SPHERE) -> float:
    """Surface distance via the chord: ``arc_from_chord(chord_distance(p, q))``."""
    return arc_from_chord(chord_distance(p, q, s), s)


@dataclass(frozen=True)
class DistanceReport:
    planar_km: float
    chord_km: float
    great_circle_km: float
    haversine_km: float
    paper_arcsin_km: float
    planar_error_pct: float

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


def percent_error(measured: float, reference: float) -> float:
    if reference == 0.0:
        return 0.0 if measured == 0.0 else math.inf
    return (measured - reference) / reference * 100.0


def distance_report(
    p: GeoPoint,
    q: GeoPoint,
    params: ProjectionParams = DEFAULT_PARAMS,
    s: SphereModel = DEFAULT_SPHERE,
) -> DistanceReport:
    """Every distance formulation for one pair.

    ``planar_error_pct`` is the map distance's error relative to the
    great-circle ("real") distance.
    """
    planar = planar_distance(p, q, params, s)
    chord = chord_distance(p, q, s)
    great_circle = arc_from_chord(chord, s)
    return DistanceReport(
        planar_km=planar,
        chord_km=chord,
        great_circle_km=great_circle,
        haversine_km=haversine_distance(p, q, s),
        paper_arcsin_km=arc_from_chord_paper_variant(chord, s),
        planar_error_pct=percent_error(planar, great_circle),
    )
