"""Tissot indicatrix geometry and closed-form distortion measures."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from platecarree.errors import DomainError, InvalidInputError, PoleSingularityError
from platecarree.geo import HALF_PI, GeoPoint
from platecarree.projection import DEFAULT_PARAMS, ProjectionParams, scale_factors


def _check_fraction(a: float) -> float:
    if not (math.isfinite(a) and 0.0 <= a <= 1.0):
        raise InvalidInputError(f"a must lie in [0, 1], got {a!r}")
    return a


def angular_distortion(a: float) -> float:
    """Angular distortion ``arctan((1 - a) / (1 + a))`` for a vertical fraction ``a`` in [0, 1].

    Largest (pi/4) at ``a = 0`` and zero at ``a = 1``.
    """
    a = _check_fraction(a)
    return math.atan((1.0 - a) / (1.0 + a))


def angular_distortion_derivative(a: float) -> float:
    """d/da of :func:`angular_distortion`, which simplifies to ``-1 / (1 + a^2)``."""
    a = _check_fraction(a)
    return -1.0 / (1.0 + a * a)


def angular_distortion_curve(n: int = 101) -> list[tuple[float, float]]:
    """``n`` evenly spaced ``(a, omega)`` samples over [0, 1]."""
    if n < 2:
        raise InvalidInputError(f"need at least 2 samples, got {n}")
    return [(float(a), angular_distortion(float(a))) for a in np.linspace(0.0, 1.0, n)]


def distance_distortion(dlambda: float, lat: float) -> float:
    """Distance distortion in units of the sphere radius.

    ``sqrt(lat^2 + dlambda^2 sec^2(lat)) - sqrt(dlambda^2 + lat^2)``: the
    gap between the scale-corrected hypotenuse and the one drawn on the
    map. Zero on the equator and along meridians, unbounded toward the
    poles. Multiply by R for kilometres.
    """
    if not (math.isfinite(dlambda) and -math.pi <= dlambda <= math.pi):
        raise InvalidInputError(f"dlambda must lie in [-pi, pi], got {dlambda!r}")
    if not math.isfinite(lat) or not -HALF_PI <= lat <= HALF_PI:
        raise DomainError("lat", lat)
    if abs(lat) == HALF_PI:
        raise PoleSingularityError(f"distance distortion is unbounded at lat={lat!r}")
    stretched = math.hypot(lat, dlambda / math.cos(lat))
    drawn = math.hypot(dlambda, lat)
    return max(stretched - drawn, 0.0)


@dataclass(frozen=True)
class TissotEllipse:
    """Image of an infinitesimal unit circle centred on ``center``.

    Axes follow the graticule: ``semi_axis_parallel`` is k and
    ``semi_axis_meridian`` is h (always 1 here).
    """

    center: GeoPoint
    semi_axis_parallel: float
    semi_axis_meridian: float
    max_angular_distortion: float

    @property
    def axis_ratio(self) -> float:
        return self.semi_axis_parallel / self.semi_axis_meridian


def indicatrix(at: GeoPoint, params: ProjectionParams = DEFAULT_PARAMS) -> TissotEllipse:
    h, k = scale_factors(at.lat, params)
    return TissotEllipse(
        center=at,
        semi_axis_parallel=k,
        semi_axis_meridian=h,
        max_angular_distortion=angular_distortion(0.0),
    )
