import math

import pytest

from platecarree import GeoPoint, SphereModel

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def earth():
    return SphereModel(6371.0)


@pytest.fixture
def p1():
    return GeoPoint.from_degrees(23.4, 24.3)


@pytest.fixture
def p2():
    return GeoPoint.from_degrees(-3.67, -39.2)


# worked-example points, lat/lon in degrees
PAPER_POINTS = {
    "P1": (23.4, 24.3),
    "P2": (-3.67, -39.2),
    "A": (-9.2, -41.0),
    "B": (21.8, 48.1),
    "C": (65.1, 170.8),
    "D": (64.7, -152.7),
}


def point(name):
    return GeoPoint.from_degrees(*PAPER_POINTS[name])


def rel(a, b):
    return abs(a - b) / max(abs(b), math.ulp(1.0))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
