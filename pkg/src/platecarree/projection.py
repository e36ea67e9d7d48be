"""Forward/inverse equidistant cylindrical transform and its scale factors.

General form with central meridian ``lon0`` and standard parallel ``lat1``::

    x = R (lon - lon0) cos(lat1)
    y = R lat
    h = 1
    k = cos(lat1) / cos(lat)

The defaults (0, 0) give the plain plate carree ``x = R lon, y = R lat``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from platecarree.errors import DomainError, InvalidInputError, PoleSingularityError
from platecarree.geo import HALF_PI, GeoPoint, SphereModel, check_lon

DEFAULT_SPHERE = SphereModel()

_ROUNDOFF = 1e-12


@dataclass(frozen=True)
class ProjectionParams:
    central_meridian: float = 0.0
    standard_parallel: float = 0.0

    def __post_init__(self):
        lon0 = self.central_meridian
        lat1 = self.standard_parallel
        try:
            check_lon(lon0)
        except DomainError:
            raise InvalidInputError(
                f"central_meridian must lie in [-pi, pi] radians, got {lon0!r}"
            ) from None
        # cos(lat1) == 0 collapses the x axis, so the poles are excluded
        if not (math.isfinite(lat1) and -HALF_PI < lat1 < HALF_PI):
            raise InvalidInputError(
                f"standard_parallel must lie strictly inside (-pi/2, pi/2), got {lat1!r}"
            )
        object.__setattr__(self, "central_meridian", float(lon0))
        object.__setattr__(self, "standard_parallel", float(lat1))

    @property
    def cos_standard_parallel(self) -> float:
        return math.cos(self.standard_parallel)


DEFAULT_PARAMS = ProjectionParams()


class MapPoint(NamedTuple):
    """Projected position in km; ``x`` east-west, ``y`` north-south."""

    x: float
    y: float


class ScaleFactors(NamedTuple):
    h: float  # along the meridian
    k: float  # along the parallel


def forward(
    p: GeoPoint,
    params: ProjectionParams = DEFAULT_PARAMS,
    s: SphereModel = DEFAULT_SPHERE,
) -> MapPoint:
    """Project ``p`` onto the map plane.

    ``lon - lon0`` is not wrapped into [-pi, pi]; points past the
    antimeridian of a shifted central meridian land outside the usual
    rectangle.
    """
    r = s.radius_km
    return MapPoint(
        r * (p.lon - params.central_meridian) * params.cos_standard_parallel,
        r * p.lat,
    )


def inverse(
    m: MapPoint,
    params: ProjectionParams = DEFAULT_PARAMS,
    s: SphereModel = DEFAULT_SPHERE,
) -> GeoPoint:
    """Recover the geographic point for map coordinates ``m``.

    Raises :class:`DomainError` naming ``lat`` or ``lon`` when the
    result leaves the sphere's domain.
    """
    x, y = m
    if not (math.isfinite(x) and math.isfinite(y)):
        raise InvalidInputError(f"map coordinates must be finite, got {m!r}")
    r = s.radius_km
    lat = _snap(y / r, HALF_PI)
    lon = _snap(x / (r * params.cos_standard_parallel) + params.central_meridian, math.pi)
    if not -HALF_PI <= lat <= HALF_PI:
        raise DomainError("lat", lat, f"y={y!r} km maps to lat={lat!r} rad, outside [-pi/2, pi/2]")
    if not -math.pi <= lon <= math.pi:
        raise DomainError("lon", lon, f"x={x!r} km maps to lon={lon!r} rad, outside [-pi, pi]")
    return GeoPoint(lat, lon)


def _snap(value: float, limit: float) -> float:
    # division round-off can overshoot an endpoint by an ulp or two
    if limit < abs(value) <= limit + _ROUNDOFF:
        return math.copysign(limit, value)
    return value


def scale_factors(lat: float, params: ProjectionParams = DEFAULT_PARAMS) -> ScaleFactors:
    if not math.isfinite(lat) or not -HALF_PI <= lat <= HALF_PI:
        raise DomainError("lat", lat)
    if abs(lat) == HALF_PI:
        raise PoleSingularityError(f"parallel scale factor is unbounded at lat={lat!r}")
    return ScaleFactors(1.0, params.cos_standard_parallel / math.cos(lat))


def map_bounds(
    params: ProjectionParams = DEFAULT_PARAMS, s: SphereModel = DEFAULT_SPHERE
) -> tuple[float, float, float, float]:
    """``(xmin, ymin, xmax, ymax)`` of the image of the full lat/lon domain."""
    r = s.radius_km
    c = params.cos_standard_parallel
    lon0 = params.central_meridian
    return (r * (-math.pi - lon0) * c, -r * HALF_PI, r * (math.pi - lon0) * c, r * HALF_PI)
