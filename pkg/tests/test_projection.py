import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from platecarree import (
    DomainError,
    GeoPoint,
    InvalidInputError,
    MapPoint,
    PoleSingularityError,
    ProjectionParams,
    forward,
    inverse,
    scale_factors,
)
from platecarree.projection import map_bounds

R = 6371.0
points = st.builds(GeoPoint, st.floats(-math.pi / 2, math.pi / 2), st.floats(-math.pi, math.pi))


def test_forward_origin():
    assert forward(GeoPoint(0, 0)) == (0.0, 0.0)


def test_forward_worked_point(p1):
    # the printed 2702.036665 / 2601.960997 come from radians rounded to 6 places
    x, y = forward(p1)
    assert x == pytest.approx(2702.04, abs=0.05)
    assert y == pytest.approx(2601.96, abs=0.05)
    assert forward(GeoPoint(0.408407, 0.424115)) == pytest.approx((2702.036665, 2601.960997), abs=5e-6)


def test_forward_corner():
    x, y = forward(GeoPoint(math.pi / 2, math.pi))
    assert x == pytest.approx(20015.087, abs=1e-3)
    assert y == pytest.approx(10007.543, abs=1e-3)


def test_forward_general_form():
    params = ProjectionParams(central_meridian=0.5, standard_parallel=math.pi / 3)
    x, y = forward(GeoPoint(0.2, 1.0), params)
    assert x == pytest.approx(R * 0.5 * 0.5)
    assert y == pytest.approx(R * 0.2)


def test_forward_does_not_wrap():
    params = ProjectionParams(central_meridian=-math.pi / 2)
    x, _ = forward(GeoPoint(0, math.pi), params)
    assert x == pytest.approx(R * 1.5 * math.pi)


def test_inverse_examples():
    assert inverse(MapPoint(0, 0)) == GeoPoint(0, 0)
    g = inverse(MapPoint(2702.036665, 2601.960997))
    assert g.lat == pytest.approx(0.408407, abs=1e-6)
    assert g.lon == pytest.approx(0.424115, abs=1e-6)


def test_inverse_domain_error_names_axis():
    with pytest.raises(DomainError) as info:
        inverse(MapPoint(0, 10007.543 + 1))
    assert info.value.coordinate == "lat"
    with pytest.raises(DomainError) as info:
        inverse(MapPoint(20015.087 + 1, 0))
    assert info.value.coordinate == "lon"


@given(points)
def test_round_trip(g):
    back = inverse(forward(g))
    assert back.lat == pytest.approx(g.lat, abs=1e-12)
    assert back.lon == pytest.approx(g.lon, abs=1e-12)


@given(st.floats(-20015.0, 20015.0), st.floats(-10007.0, 10007.0))
def test_forward_inverse_on_map(x, y):
    m = forward(inverse(MapPoint(x, y)))
    assert m.x == pytest.approx(x, abs=1e-9)
    assert m.y == pytest.approx(y, abs=1e-9)


@given(points)
def test_default_image_inside_rectangle(g):
    x, y = forward(g)
    assert -R * math.pi <= x <= R * math.pi
    assert -R * math.pi / 2 <= y <= R * math.pi / 2


@given(st.floats(-math.pi / 2, math.pi / 2), st.floats(-math.pi / 2, math.pi / 2), st.floats(-math.pi, math.pi))
def test_meridian_isometry(a, b, lon):
    pa, pb = forward(GeoPoint(a, lon)), forward(GeoPoint(b, lon))
    assert math.hypot(pa.x - pb.x, pa.y - pb.y) == pytest.approx(R * abs(a - b), rel=1e-12, abs=1e-9)


def test_aspect_two_to_one():
    xmin, ymin, xmax, ymax = map_bounds()
    assert (xmax - xmin) == pytest.approx(2 * (ymax - ymin))


def test_scale_factor_examples():
    assert scale_factors(0.0) == (1.0, 1.0)
    h, k = scale_factors(math.pi / 3)
    assert h == 1.0
    assert k == pytest.approx(2.0, rel=1e-15)
    for lat in (math.pi / 2, -math.pi / 2):
        with pytest.raises(PoleSingularityError):
            scale_factors(lat)


def test_scale_factor_general():
    params = ProjectionParams(standard_parallel=math.pi / 4)
    h, k = scale_factors(math.pi / 4, params)
    assert (h, k) == (1.0, pytest.approx(1.0))
    assert scale_factors(0.0, params).k == pytest.approx(math.cos(math.pi / 4))


def test_k_monotone_and_even():
    lats = [i * (math.pi / 2) / 1000 for i in range(1000)]
    ks = [scale_factors(v).k for v in lats]
    assert all(b > a for a, b in zip(ks, ks[1:]))
    assert all(scale_factors(-v).k == k for v, k in zip(lats, ks))


@given(st.floats(-math.pi / 2 + 1e-6, math.pi / 2 - 1e-6), st.floats(-1.5, 1.5))
def test_k_at_least_cos_standard_parallel(lat, lat1):
    params = ProjectionParams(standard_parallel=lat1)
    assert scale_factors(lat, params).k >= math.cos(lat1) * (1 - 1e-15)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"standard_parallel": math.pi / 2},
        {"standard_parallel": -math.pi / 2},
        {"central_meridian": 4.0},
        {"central_meridian": math.nan},
    ],
)
def test_params_validation(kwargs):
    with pytest.raises(InvalidInputError):
        ProjectionParams(**kwargs)
