"""Batch evaluation over point pairs and over graticule grids."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, fields
from typing import Iterable, Sequence

import numpy as np

from platecarree.distance import DistanceReport, distance_report, wrapped_planar_distance
from platecarree.distortion import TissotEllipse, distance_distortion, indicatrix
from platecarree.errors import GeodesyError, GridSpecError, InvalidInputError
from platecarree.geo import GeoPoint, SphereModel, deg_to_rad, rad_to_deg
from platecarree.projection import DEFAULT_PARAMS, DEFAULT_SPHERE, ProjectionParams

BAND_WIDTH_DEG = 20.0


@dataclass(frozen=True)
class PairRecord:
    name_a: str
    name_b: str
    a: GeoPoint
    b: GeoPoint

    def __post_init__(self):
        if not self.name_a or not self.name_b:
            raise InvalidInputError("pair labels must be non-empty")


@dataclass(frozen=True)
class SurveyRow:
    name_a: str
    name_b: str
    a: GeoPoint
    b: GeoPoint
    report: DistanceReport
    lat_band: float
    wrapped_planar_km: float | None = None

    @property
    def error_pct(self) -> float:
        return self.report.planar_error_pct


def midpoint_lat_band(a: GeoPoint, b: GeoPoint, width: float = BAND_WIDTH_DEG) -> float:
    """Lower edge, in degrees, of the ``|latitude|`` band holding the pair's mean latitude."""
    mid = abs(rad_to_deg((a.lat + b.lat) / 2.0))
    return math.floor(mid / width) * width


class SurveyError(GeodesyError):
    """A pair could not be evaluated; ``index`` is its position in the input."""

    def __init__(self, index: int, reason: str):
        self.index = index
        self.reason = reason
        super().__init__(f"pair {index}: {reason}")


def run_survey(
    pairs: Sequence[PairRecord],
    params: ProjectionParams = DEFAULT_PARAMS,
    s: SphereModel = DEFAULT_SPHERE,
    wrapped_planar: bool = False,
) -> list[SurveyRow]:
    """One :class:`SurveyRow` per pair, in input order."""
    if not pairs:
        raise InvalidInputError("survey needs at least one pair")
    rows = []
    for i, pair in enumerate(pairs):
        try:
            report = distance_report(pair.a, pair.b, params, s)
            wrapped = wrapped_planar_distance(pair.a, pair.b, params, s) if wrapped_planar else None
        except GeodesyError as exc:
            raise SurveyError(i, str(exc)) from exc
        rows.append(
            SurveyRow(
                pair.name_a,
                pair.name_b,
                pair.a,
                pair.b,
                report,
                midpoint_lat_band(pair.a, pair.b),
                wrapped,
            )
        )
    return rows


def random_pairs(n: int, seed: int) -> list[PairRecord]:
    """``n`` pairs of points spread uniformly over the sphere's area.

    Latitudes are drawn uniform in ``sin(lat)`` so the poles are not
    oversampled; longitudes uniform in [-pi, pi).
    """
    if n <= 0:
        raise InvalidInputError(f"n must be positive, got {n}")
    rng = np.random.default_rng(seed)
    lats = np.arcsin(rng.uniform(-1.0, 1.0, size=(n, 2)))
    lons = rng.uniform(-math.pi, math.pi, size=(n, 2))
    return [
        PairRecord(
            f"r{i}a",
            f"r{i}b",
            GeoPoint(float(lats[i, 0]), float(lons[i, 0])),
            GeoPoint(float(lats[i, 1]), float(lons[i, 1])),
        )
        for i in range(n)
    ]


def band_means(rows: Iterable[SurveyRow]) -> dict[float, tuple[int, float]]:
    """``{band lower edge: (count, mean error_pct)}``, sorted by band."""
    buckets: dict[float, list[float]] = defaultdict(list)
    for row in rows:
        buckets[row.lat_band].append(row.error_pct)
    return {band: (len(v), math.fsum(v) / len(v)) for band, v in sorted(buckets.items())}


def mean_error_in_band(rows: Iterable[SurveyRow], lo_deg: float, hi_deg: float) -> float:
    """Mean error_pct over rows whose ``|midpoint latitude|`` lies in [lo, hi)."""
    values = [
        r.error_pct
        for r in rows
        if lo_deg <= abs(rad_to_deg((r.a.lat + r.b.lat) / 2.0)) < hi_deg
    ]
    if not values:
        raise InvalidInputError(f"no rows in band [{lo_deg}, {hi_deg})")
    return math.fsum(values) / len(values)


def _divides(total: float, step: float) -> bool:
    n = total / step
    return abs(n - round(n)) < 1e-9


@dataclass(frozen=True)
class GridSpec:
    lat_step: float = 30.0
    lon_step: float = 30.0
    margin: float = 10.0

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not math.isfinite(v):
                raise GridSpecError(f"{f.name} must be finite, got {v!r}")
        if self.lat_step <= 0 or not _divides(180.0, self.lat_step):
            raise GridSpecError(f"lat_step must be positive and divide 180, got {self.lat_step!r}")
        if self.lon_step <= 0 or not _divides(360.0, self.lon_step):
            raise GridSpecError(f"lon_step must be positive and divide 360, got {self.lon_step!r}")
        if not 0 <= self.margin < 90:
            raise GridSpecError(f"margin must lie in [0, 90), got {self.margin!r}")

    def latitudes(self) -> list[float]:
        """Graticule latitudes in degrees, north to south, pole margin removed."""
        n = round(180.0 / self.lat_step)
        lats = [90.0 - i * self.lat_step for i in range(n + 1)]
        # the poles themselves are always dropped: k is singular there
        return [lat for lat in lats if abs(lat) <= 90.0 - self.margin and abs(lat) < 90.0]

    def longitudes(self) -> list[float]:
        n = round(360.0 / self.lon_step)
        return [-180.0 + i * self.lon_step for i in range(n + 1)]


def distortion_field(
    grid: GridSpec, params: ProjectionParams = DEFAULT_PARAMS
) -> list[tuple[GeoPoint, TissotEllipse, float]]:
    """Indicatrix and distance distortion at every graticule intersection.

    Row-major, north to south and west to east. The distance distortion
    is evaluated for a longitude offset of one ``lon_step``.
    """
    dlambda = deg_to_rad(grid.lon_step)
    if dlambda > math.pi:
        dlambda = math.pi
    out = []
    for lat in grid.latitudes():
        for lon in grid.longitudes():
            p = GeoPoint.from_degrees(lat, lon)
            out.append((p, indicatrix(p, params), distance_distortion(dlambda, p.lat)))
    return out
