"""Angles, points on the sphere and the spherical -> Cartesian conversion.

All angles are radians internally. Degrees only appear at I/O boundaries,
through :func:`deg_to_rad` / :func:`rad_to_deg` and :meth:`GeoPoint.from_degrees`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from platecarree.errors import DomainError, InvalidInputError

EARTH_RADIUS_KM = 6371.0

HALF_PI = math.pi / 2


def deg_to_rad(d: float) -> float:
    """Convert degrees to radians (``d * pi / 180``)."""
    if not math.isfinite(d):
        raise InvalidInputError(f"angle must be finite, got {d!r}")
    return d * math.pi / 180.0


def rad_to_deg(r: float) -> float:
    if not math.isfinite(r):
        raise InvalidInputError(f"angle must be finite, got {r!r}")
    return r * 180.0 / math.pi


def check_lat(lat: float) -> float:
    if not math.isfinite(lat) or not -HALF_PI <= lat <= HALF_PI:
        raise DomainError("lat", lat, f"lat must lie in [-pi/2, pi/2] radians, got {lat!r}")
    return float(lat)


def check_lon(lon: float) -> float:
    if not math.isfinite(lon) or not -math.pi <= lon <= math.pi:
        raise DomainError("lon", lon, f"lon must lie in [-pi, pi] radians, got {lon!r}")
    return float(lon)


@dataclass(frozen=True)
class GeoPoint:
    """Latitude/longitude on the sphere, in radians.

    Out-of-range values are rejected, never wrapped or clamped. The
    endpoints (lat = +/-pi/2, lon = +/-pi) are valid.
    """

    lat: float
    lon: float

    def __post_init__(self):
        object.__setattr__(self, "lat", check_lat(self.lat))
        object.__setattr__(self, "lon", check_lon(self.lon))

    @classmethod
    def from_degrees(cls, lat_deg: float, lon_deg: float) -> GeoPoint:
        lat = deg_to_rad(lat_deg)
        lon = deg_to_rad(lon_deg)
        # 90 deg and 180 deg must map onto the exact domain endpoints
        if lat_deg == 90.0 or lat_deg == -90.0:
            lat = math.copysign(HALF_PI, lat_deg)
        if lon_deg == 180.0 or lon_deg == -180.0:
            lon = math.copysign(math.pi, lon_deg)
        if not -90.0 <= lat_deg <= 90.0:
            raise DomainError("lat", lat_deg, f"lat must lie in [-90, 90] degrees, got {lat_deg!r}")
        if not -180.0 <= lon_deg <= 180.0:
            raise DomainError("lon", lon_deg, f"lon must lie in [-180, 180] degrees, got {lon_deg!r}")
        return cls(lat, lon)

    @property
    def lat_deg(self) -> float:
        return rad_to_deg(self.lat)

    @property
    def lon_deg(self) -> float:
        return rad_to_deg(self.lon)


@dataclass(frozen=True)
class SphereModel:
    """Spherical Earth of radius ``radius_km``."""

    radius_km: float = EARTH_RADIUS_KM

    def __post_init__(self):
        r = self.radius_km
        if not (math.isfinite(r) and r > 0):
            raise InvalidInputError(f"radius_km must be finite and positive, got {r!r}")
        object.__setattr__(self, "radius_km", float(r))


class Cartesian3(NamedTuple):
    x: float
    y: float
    z: float

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)


def spherical_to_cartesian(p: GeoPoint, s: SphereModel = SphereModel()) -> Cartesian3:
    """Earth-centred coordinates in km: ``(R cos(lon) cos(lat), R sin(lon) cos(lat), R sin(lat))``."""
    r = s.radius_km
    cos_lat = math.cos(p.lat)
    return Cartesian3(
        r * math.cos(p.lon) * cos_lat,
        r * math.sin(p.lon) * cos_lat,
        r * math.sin(p.lat),
    )
