"""Chains of regular polygon pens under a fixed perimeter.

``k`` congruent regular n-gons are laid in a chain, each sharing one side
with each neighbour, so the fence uses ``s * (k*(n-1) + 1)`` of length.
Circles share nothing and act as the ``n -> infinity`` baseline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Union

from .errors import InvalidSpec

__all__ = [
    "CIRCLE",
    "DEFAULT_CANDIDATES",
    "Shape",
    "ChainSpec",
    "ChainSolution",
    "BestPolygon",
    "area",
    "chain_area",
    "derivative_sign",
    "sine_bound_check",
    "pairwise_less",
    "best_polygon",
    "circle_vs_triangle",
    "shape_name",
]

CIRCLE: Literal["circle"] = "circle"

Shape = Union[int, Literal["circle"]]

DEFAULT_CANDIDATES: tuple[Shape, ...] = (3, 4, 5, 6, 7, 8, CIRCLE)

_NAMES = {
    3: "triangle",
    4: "square",
    5: "pentagon",
    6: "hexagon",
    7: "heptagon",
    8: "octagon",
    9: "nonagon",
    10: "decagon",
    12: "dodecagon",
}


def shape_name(shape: Shape) -> str:
    if shape == CIRCLE:
        return "circle"
    return _NAMES.get(shape, f"{shape}-gon")


def _check_shape(shape: Shape) -> None:
    if shape == CIRCLE:
        return
    if isinstance(shape, bool) or not isinstance(shape, int) or shape < 3:
        raise InvalidSpec(f"sides must be an integer >= 3 or 'circle', got {shape!r}")


def _check_pens(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InvalidSpec(f"pen count must be a positive integer, got {k!r}")


def _check_perimeter(p: float) -> None:
    if not (math.isfinite(p) and p > 0):
        raise InvalidSpec(f"perimeter must be positive, got {p!r}")


@dataclass(frozen=True)
class ChainSpec:
    pens: int
    sides: Shape
    perimeter: float

    def __post_init__(self) -> None:
        _check_pens(self.pens)
        _check_shape(self.sides)
        _check_perimeter(self.perimeter)


@dataclass(frozen=True)
class ChainSolution:
    """Side length (radius for circles), enclosed area and recomputed perimeter."""

    side_length: float
    total_area: float
    boundary_check: float


def area(k: int, n: Shape, perimeter: float = 1.0) -> float:
    """Total area of ``k`` chained n-gons (or circles) with the given perimeter."""
    if n == CIRCLE:
        return perimeter * perimeter / (4.0 * math.pi * k)
    denom = k * (n - 1) + 1
    return perimeter * perimeter * k / 4.0 * n / math.tan(math.pi / n) / (denom * denom)


def chain_area(spec: ChainSpec) -> ChainSolution:
    k, n, p = spec.pens, spec.sides, spec.perimeter
    if n == CIRCLE:
        r = p / (2.0 * math.pi * k)
        return ChainSolution(r, area(k, n, p), 2.0 * math.pi * r * k)
    s = p / (k * (n - 1) + 1)
    return ChainSolution(s, area(k, n, p), s * (k * (n - 1) + 1))


def derivative_sign(k: int, x: float) -> float:
    """Numerator of d/dx of the chain area, treating the side count as continuous.

    For ``x >= 3`` the remaining factor of the derivative is positive, so the
    sign of this value is the sign of the derivative.
    """
    _check_pens(k)
    if not x >= 3:
        raise InvalidSpec(f"x must be at least 3, got {x!r}")
    return 0.5 * math.sin(2 * math.pi / x) * (1 - k * (x + 1)) + math.pi / x * (k * (x - 1) + 1)


def sine_bound_check(x: float) -> bool:
    """Whether ``sin(2*pi/x) > 2*pi/(x+1)``; holds for every ``x >= 7.5``."""
    if not x > 0:
        raise InvalidSpec(f"x must be positive, got {x!r}")
    return math.sin(2 * math.pi / x) > 2 * math.pi / (x + 1)


def pairwise_less(k: int, n: int, m: int) -> bool:
    """``A_k(n) < A_k(m)`` decided by the rearranged inequality.

    Compares the chain-length ratio ``(k(m-1)+1)/(k(n-1)+1)`` with
    ``sqrt(m cot(pi/m) / (n cot(pi/n)))`` instead of the areas themselves.
    """
    lhs = (k * (m - 1) + 1) / (k * (n - 1) + 1)
    rhs = math.sqrt((m / math.tan(math.pi / m)) / (n / math.tan(math.pi / n)))
    return lhs < rhs


@dataclass(frozen=True)
class BestPolygon:
    winner: Shape
    ranking: tuple[tuple[Shape, float], ...]


def _tie_key(shape: Shape) -> float:
    return math.inf if shape == CIRCLE else shape


def best_polygon(
    k: int, perimeter: float = 1.0, candidates: Iterable[Shape] = DEFAULT_CANDIDATES
) -> BestPolygon:
    """Rank candidate shapes by chain area; ties go to the smaller side count."""
    _check_pens(k)
    _check_perimeter(perimeter)
    shapes = list(dict.fromkeys(candidates))
    if not shapes:
        raise InvalidSpec("candidate set is empty")
    for s in shapes:
        _check_shape(s)
    ranked = sorted(((s, area(k, s, perimeter)) for s in shapes), key=lambda t: (-t[1], _tie_key(t[0])))
    return BestPolygon(ranked[0][0], tuple(ranked))


def circle_vs_triangle(k: int) -> Shape:
    """Return whichever of circles or triangles encloses more area for ``k`` pens."""
    _check_pens(k)
    return CIRCLE if area(k, CIRCLE) > area(k, 3) else 3
