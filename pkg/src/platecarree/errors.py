class GeodesyError(ValueError):
    """Base class for every error raised by this package."""


class InvalidInputError(GeodesyError):
    pass


class DomainError(GeodesyError):
    """A coordinate fell outside the sphere's latitude/longitude domain.

    ``coordinate`` names the offending axis ("lat" or "lon").
    """

    def __init__(self, coordinate, value, message=None):
        self.coordinate = coordinate
        self.value = value
        super().__init__(message or f"{coordinate} out of range: {value!r}")


class PoleSingularityError(GeodesyError):
    """The parallel scale factor diverges at the poles."""


class InvalidChordError(GeodesyError):
    pass


class GridSpecError(GeodesyError):
    pass
