"""SVG pictures of polygon chains and spiral packings.

Geometry here is for display only; no area in the package is computed
from these coordinates.  Neighbouring tiles are produced by reflecting a
regular polygon across one of its edges, which for triangles, squares and
hexagons is also how the regular tilings are generated.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterable, Sequence

from .errors import InvalidSpec
from .spiral_packing import SpiralShape

__all__ = [
    "regular_polygon",
    "chain_polygons",
    "spiral_polygons",
    "boundary_edge_count",
    "render_svg",
    "chain_svg",
    "spiral_svg",
]

Point = tuple[float, float]
Polygon = tuple[Point, ...]

_KEY_DIGITS = 6


def regular_polygon(n: int, side: float = 1.0) -> Polygon:
    """Regular n-gon with one horizontal bottom edge starting at the origin."""
    if n < 3:
        raise InvalidSpec("a polygon needs at least 3 sides")
    pts = [(0.0, 0.0)]
    heading = 0.0
    for _ in range(n - 1):
        x, y = pts[-1]
        pts.append((x + side * math.cos(heading), y + side * math.sin(heading)))
        heading += 2 * math.pi / n
    return tuple(pts)


def _reflect(poly: Polygon, a: Point, b: Point) -> Polygon:
    ax, ay = a
    dx, dy = b[0] - ax, b[1] - ay
    norm = dx * dx + dy * dy
    out = []
    for px, py in poly:
        t = ((px - ax) * dx + (py - ay) * dy) / norm
        fx, fy = ax + t * dx, ay + t * dy
        out.append((2 * fx - px, 2 * fy - py))
    # reflection flips orientation; reverse to keep counter-clockwise order
    return tuple(reversed(out))


def _centroid(poly: Polygon) -> Point:
    return (sum(p[0] for p in poly) / len(poly), sum(p[1] for p in poly) / len(poly))


def _pkey(p: Point) -> Point:
    return (round(p[0], _KEY_DIGITS) + 0.0, round(p[1], _KEY_DIGITS) + 0.0)


def _edges(poly: Polygon):
    for i in range(len(poly)):
        yield poly[i], poly[(i + 1) % len(poly)]


def _ekey(a: Point, b: Point) -> frozenset:
    return frozenset((_pkey(a), _pkey(b)))


def chain_polygons(n: int, k: int, side: float = 1.0) -> list[Polygon]:
    """``k`` regular n-gons, each sharing one edge with the next.

    Each new polygon is the reflection of the previous one across its
    rightmost free edge, so the chain runs left to right.
    """
    if k < 1:
        raise InvalidSpec("need at least one pen")
    polys = [regular_polygon(n, side)]
    used: set[frozenset] = set()
    for _ in range(k - 1):
        cur = polys[-1]
        cx, cy = _centroid(cur)
        best = None
        for a, b in _edges(cur):
            if _ekey(a, b) in used:
                continue
            mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
            # prefer edges facing right, then the lower one
            score = (round((mx - cx) / side, 9), -round((my - cy) / side, 9))
            if best is None or score > best[0]:
                best = (score, a, b)
        _, a, b = best
        used.add(_ekey(a, b))
        polys.append(_reflect(cur, a, b))
    return polys


def _angle(v: Point) -> float:
    return math.atan2(v[1], v[0])


# direction of the first step, matching the usual numbered pictures
_FIRST_HEADING = {
    SpiralShape.TRIANGLE: 5 * math.pi / 6,
    SpiralShape.SQUARE: math.pi,
    SpiralShape.HEXAGON: -math.pi / 6,
}


def spiral_polygons(shape: SpiralShape | str | int, k: int, side: float = 1.0) -> list[Polygon]:
    """Tiles of a spiral packing in placement order.

    Grows greedily from the last tile: the next tile is the free neighbour
    touching the most placed tiles, with ties broken by the sharpest
    clockwise turn, which winds the tiles into a spiral.
    """
    shape = SpiralShape.parse(shape)
    if k < 1:
        raise InvalidSpec("need at least one pen")
    first = regular_polygon(int(shape), side)
    tiles = [first]
    placed = {_pkey(_centroid(first))}
    edge_count: Counter = Counter(_ekey(a, b) for a, b in _edges(first))
    heading = _FIRST_HEADING[shape]
    while len(tiles) < k:
        cur = tiles[-1]
        cc = _centroid(cur)
        best = None
        for a, b in _edges(cur):
            cand = _reflect(cur, a, b)
            cen = _centroid(cand)
            if _pkey(cen) in placed:
                continue
            contacts = sum(1 for e in _edges(cand) if _ekey(*e) in edge_count)
            turn = _angle((cen[0] - cc[0], cen[1] - cc[1])) - heading
            turn = (turn + math.pi) % (2 * math.pi) - math.pi
            # the first step has no history and simply follows the initial heading
            score = (contacts, -abs(round(turn, 9)) if len(tiles) == 1 else -round(turn, 9))
            if best is None or score > best[0]:
                best = (score, cand, cen)
        _, cand, cen = best
        heading = _angle((cen[0] - cc[0], cen[1] - cc[1]))
        tiles.append(cand)
        placed.add(_pkey(cen))
        edge_count.update(_ekey(a, b) for a, b in _edges(cand))
    return tiles


def boundary_edge_count(polys: Iterable[Polygon]) -> int:
    """Number of distinct unit edges (walls) in a set of tiles."""
    return len({_ekey(a, b) for p in polys for a, b in _edges(p)})


def _fmt(v: float) -> str:
    return f"{v:.4f}".rstrip("0").rstrip(".")


def render_svg(polys: Sequence[Polygon], *, labels: bool = True, title: str = "", scale: float = 40.0) -> str:
    """SVG 1.1 document drawing ``polys`` numbered in order."""
    if not polys:
        raise InvalidSpec("nothing to draw")
    xs = [p[0] for poly in polys for p in poly]
    ys = [p[1] for poly in polys for p in poly]
    pad = 0.5
    min_x, max_x = min(xs) - pad, max(xs) + pad
    min_y, max_y = min(ys) - pad, max(ys) + pad
    width = (max_x - min_x) * scale
    height = (max_y - min_y) * scale

    def tx(p: Point) -> Point:
        # flip y so the picture is not mirrored
        return ((p[0] - min_x) * scale, (max_y - p[1]) * scale)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    if title:
        out.append(f"  <title>{title}</title>")
    out.append('  <g fill="none" stroke="black" stroke-width="2" stroke-linejoin="round">')
    for poly in polys:
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in map(tx, poly))
        out.append(f'    <polygon points="{pts}"/>')
    out.append("  </g>")
    if labels:
        size = max(8.0, scale * 0.3)
        out.append(
            f'  <g font-family="sans-serif" font-size="{_fmt(size)}" '
            'text-anchor="middle" dominant-baseline="central">'
        )
        for i, poly in enumerate(polys, 1):
            x, y = tx(_centroid(poly))
            out.append(f'    <text x="{_fmt(x)}" y="{_fmt(y)}">{i}</text>')
        out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def chain_svg(n: int, k: int, **kwargs) -> str:
    return render_svg(chain_polygons(n, k), title=f"chain of {k} {n}-gons", **kwargs)


def spiral_svg(shape: SpiralShape | str | int, k: int, **kwargs) -> str:
    shape = SpiralShape.parse(shape)
    return render_svg(spiral_polygons(shape, k), title=f"spiral of {k} {shape.name.lower()}s", **kwargs)
