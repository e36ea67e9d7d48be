"""Equidistant cylindrical (plate carree) projection and its distance distortion."""

from platecarree.errors import (
    DomainError,
    GeodesyError,
    GridSpecError,
    InvalidChordError,
    InvalidInputError,
    PoleSingularityError,
)
from platecarree.geo import (
    Cartesian3,
    GeoPoint,
    SphereModel,
    deg_to_rad,
    rad_to_deg,
    spherical_to_cartesian,
)
from platecarree.projection import (
    MapPoint,
    ProjectionParams,
    ScaleFactors,
    forward,
    inverse,
    scale_factors,
)
from platecarree.distance import (
    DistanceReport,
    arc_from_chord,
    arc_from_chord_paper_variant,
    chord_distance,
    distance_report,
    great_circle_distance,
    haversine_distance,
    planar_distance,
    wrapped_planar_distance,
)
from platecarree.distortion import (
    TissotEllipse,
    angular_distortion,
    angular_distortion_curve,
    angular_distortion_derivative,
    distance_distortion,
    indicatrix,
)

__version__ = "0.1.0"

__all__ = [
    "Cartesian3",
    "DistanceReport",
    "DomainError",
    "GeoPoint",
    "GeodesyError",
    "GridSpecError",
    "InvalidChordError",
    "InvalidInputError",
    "MapPoint",
    "PoleSingularityError",
    "ProjectionParams",
    "ScaleFactors",
    "SphereModel",
    "TissotEllipse",
    "angular_distortion",
    "angular_distortion_curve",
    "angular_distortion_derivative",
    "arc_from_chord",
    "arc_from_chord_paper_variant",
    "chord_distance",
    "deg_to_rad",
    "distance_distortion",
    "distance_report",
    "forward",
    "great_circle_distance",
    "haversine_distance",
    "indicatrix",
    "inverse",
    "planar_distance",
    "rad_to_deg",
    "scale_factors",
    "spherical_to_cartesian",
    "wrapped_planar_distance",
]
