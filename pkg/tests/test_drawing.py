import math
import xml.etree.ElementTree as ET

import pytest

from penopt.drawing import (
    boundary_edge_count,
    chain_polygons,
    chain_svg,
    regular_polygon,
    spiral_polygons,
    spiral_svg,
)
from penopt.errors import InvalidSpec
from penopt.spiral_packing import SpiralShape, spiral_side_count

SVG = "{http://www.w3.org/2000/svg}"


def _overlap_free(polys):
    cents = [(sum(x for x, _ in p) / len(p), sum(y for _, y in p) / len(p)) for p in polys]
    for i in range(len(cents)):
        for j in range(i):
            # centres of edge-sharing unit tiles are at least one apothem pair apart
            assert math.dist(cents[i], cents[j]) > 0.5


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_regular_polygon_sides(n):
    p = regular_polygon(n, 2.0)
    assert len(p) == n
    assert all(math.dist(p[i], p[(i + 1) % n]) == pytest.approx(2.0) for i in range(n))


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
@pytest.mark.parametrize("k", [1, 2, 5, 12])
def test_chain_edge_count(n, k):
    polys = chain_polygons(n, k)
    assert len(polys) == k
    assert boundary_edge_count(polys) == k * (n - 1) + 1


@pytest.mark.parametrize("shape", list(SpiralShape))
def test_spiral_edge_count_matches_closed_form(shape):
    polys = spiral_polygons(shape, 149)
    _overlap_free(polys)
    for k in range(1, 150):
        assert boundary_edge_count(polys[:k]) == spiral_side_count(shape, k), k


def test_spiral_is_a_prefix_sequence():
    a = spiral_polygons("square", 20)
    b = spiral_polygons("square", 9)
    assert a[:9] == b


@pytest.mark.parametrize("svg", [chain_svg(7, 2), spiral_svg("hexagon", 7), spiral_svg(3, 10, labels=False)])
def test_svg_well_formed(svg):
    root = ET.fromstring(svg)
    assert root.tag == SVG + "svg" and root.get("version") == "1.1"
    assert root.iter(SVG + "polygon")


def test_svg_labels_follow_placement_order():
    root = ET.fromstring(spiral_svg("triangle", 6))
    labels = [t.text for t in root.iter(SVG + "text")]
    assert labels == [str(i) for i in range(1, 7)]
    assert len(list(root.iter(SVG + "polygon"))) == 6


def test_invalid_drawings():
    with pytest.raises(InvalidSpec):
        regular_polygon(2)
    with pytest.raises(InvalidSpec):
        chain_polygons(5, 0)
    with pytest.raises(InvalidSpec):
        spiral_polygons("pentagon", 3)
