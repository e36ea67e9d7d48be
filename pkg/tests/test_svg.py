import math
import re
import xml.etree.ElementTree as ET

import pytest

from platecarree import ProjectionParams
from platecarree.svg import build_scene, render_svg, tissot_svg
from platecarree.survey import GridSpec

NS = {"svg": "http://www.w3.org/2000/svg"}


def test_default_scene_geometry():
    scene = build_scene()
    assert (scene.width, scene.height) == pytest.approx((1024.0, 512.0))
    assert len(scene.ellipses) == 65
    assert len([l for l in scene.lines if l.kind == "meridian"]) == 13
    assert len([l for l in scene.lines if l.kind == "parallel"]) == 7
    for e in scene.ellipses:
        assert e.ry == pytest.approx(500 * scene.px_per_km)
        if abs(e.lat_deg) < 1e-9:
            assert e.rx == e.ry
        if abs(abs(e.lat_deg) - 60) < 1e-9:
            assert abs(e.rx - 2 * e.ry) <= 1e-9 * e.ry


def test_equator_is_centre_line():
    scene = build_scene()
    eq = [e for e in scene.ellipses if abs(e.lat_deg) < 1e-9]
    assert {round(e.cy, 9) for e in eq} == {256.0}
    assert eq[0].cx == pytest.approx(0.0) and eq[-1].cx == pytest.approx(1024.0)


def test_svg_parses_and_counts():
    root = ET.fromstring(tissot_svg().encode())
    assert root.get("viewBox") == "0 0 1024.000 512.000"
    ellipses = root.findall(".//svg:ellipse", NS)
    assert len(ellipses) == 65
    for el in ellipses:
        rx, ry = float(el.get("rx")), float(el.get("ry"))
        lat = float(el.get("data-lat"))
        if lat == 0:
            assert rx == ry
        if abs(lat) == 60:
            assert rx == pytest.approx(2 * ry, abs=2e-3)


def test_three_decimal_formatting():
    text = tissot_svg()
    numbers = re.findall(r'(?:cx|cy|rx|ry|x1|y1|x2|y2)="([^"]+)"', text)
    assert numbers and all(re.fullmatch(r"-?\d+\.\d{3}", n) for n in numbers)


def test_deterministic():
    assert tissot_svg() == tissot_svg()


def test_standard_parallel_changes_aspect():
    scene = build_scene(params=ProjectionParams(standard_parallel=math.pi / 3))
    assert scene.width / scene.height == pytest.approx(1.0)
    # the standard parallel itself carries unit indicatrices
    at_60 = [e for e in scene.ellipses if abs(e.lat_deg - 60) < 1e-9]
    assert at_60[0].rx == pytest.approx(at_60[0].ry)


def test_finer_grid():
    scene = build_scene(GridSpec(15, 15, 0))
    assert len(scene.ellipses) == 11 * 25


def test_render_escapes_text():
    scene = build_scene()
    scene.annotations.append((1.0, 1.0, "a<b & c"))
    assert "a&lt;b &amp; c" in render_svg(scene)
