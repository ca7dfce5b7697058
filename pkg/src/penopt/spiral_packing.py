"""Spiral packings of triangles, squares and hexagons under a fixed perimeter.

The spiral arrangement of ``k`` congruent tiles shares the most sides
possible, and its side count has a closed form:

    triangles  k  + ceil((k + sqrt(6k)) / 2)
    squares    2k + ceil(2 sqrt(k))
    hexagons   3k + ceil(sqrt(12k - 3))

Ceilings are computed with integer square roots so perfect squares never
misround.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpec

__all__ = [
    "SpiralShape",
    "SpiralArrangement",
    "SpiralComparison",
    "UNIT_AREA",
    "spiral_side_count",
    "spiral_side_counts",
    "spiral_area",
    "spiral_areas",
    "spiral_compare",
    "square_triangle_bound_ratio",
    "hexagon_square_bound_ratio",
]


class SpiralShape(enum.IntEnum):
    TRIANGLE = 3
    SQUARE = 4
    HEXAGON = 6

    @classmethod
    def parse(cls, value: object) -> SpiralShape:
        if isinstance(value, SpiralShape):
            return value
        if isinstance(value, str):
            key = value.strip().upper()
            if key.isdigit():
                value = int(key)
            elif key in cls.__members__:
                return cls[key]
        try:
            return cls(value)
        except ValueError:
            raise InvalidSpec(f"unknown spiral shape {value!r}") from None


# area of one tile with unit side
UNIT_AREA = {
    SpiralShape.TRIANGLE: math.sqrt(3) / 4,
    SpiralShape.SQUARE: 1.0,
    SpiralShape.HEXAGON: 3 * math.sqrt(3) / 2,
}


def _ceil_sqrt(m: int) -> int:
    """Exact ``ceil(sqrt(m))`` for a non-negative integer."""
    if m <= 0:
        return 0
    return math.isqrt(m - 1) + 1


def _check_pens(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 1:
        raise InvalidSpec(f"pen count must be a positive integer, got {k!r}")


def spiral_side_count(shape: SpiralShape | str | int, k: int) -> int:
    shape = SpiralShape.parse(shape)
    _check_pens(k)
    k = int(k)
    if shape is SpiralShape.TRIANGLE:
        # ceil((k + sqrt(6k))/2) = ceil((k + r)/2) with r = ceil(sqrt(6k)),
        # since 2m - k is an integer
        r = _ceil_sqrt(6 * k)
        return k + (k + r + 1) // 2
    if shape is SpiralShape.SQUARE:
        return 2 * k + _ceil_sqrt(4 * k)
    return 3 * k + _ceil_sqrt(12 * k - 3)


def _ceil_sqrt_array(m: np.ndarray) -> np.ndarray:
    # float guess, then exact integer correction in both directions
    r = np.ceil(np.sqrt(m.astype(np.float64))).astype(np.int64)
    r = np.where(r * r < m, r + 1, r)
    r = np.where((r - 1) * (r - 1) >= m, r - 1, r)
    return r


def spiral_side_counts(shape: SpiralShape | str | int, ks: np.ndarray) -> np.ndarray:
    """Vectorized :func:`spiral_side_count` over an integer array of pen counts."""
    shape = SpiralShape.parse(shape)
    k = np.asarray(ks, dtype=np.int64)
    if k.size and k.min() < 1:
        raise InvalidSpec("pen counts must be positive")
    if shape is SpiralShape.TRIANGLE:
        r = _ceil_sqrt_array(6 * k)
        return k + (k + r + 1) // 2
    if shape is SpiralShape.SQUARE:
        return 2 * k + _ceil_sqrt_array(4 * k)
    return 3 * k + _ceil_sqrt_array(12 * k - 3)


def _bounds(shape: SpiralShape, k: int, perimeter: float) -> tuple[float | None, float | None]:
    """Ceiling-free area bounds; ``None`` marks the side the bound leaves open."""
    p2 = perimeter * perimeter
    if shape is SpiralShape.TRIANGLE:
        return None, math.sqrt(3) * k * p2 / (3 * k + math.sqrt(6 * k)) ** 2
    if shape is SpiralShape.SQUARE:
        root = math.sqrt(k)
        return k * p2 / (2 * k + 2 * root + 1) ** 2, k * p2 / (2 * k + 2 * root) ** 2
    return 6 * math.sqrt(3) * k * p2 / (4 * (3 * k + math.sqrt(12 * k - 3) + 1) ** 2), None


@dataclass(frozen=True)
class SpiralArrangement:
    shape: SpiralShape
    pens: int
    side_count: int
    side_length: float
    area: float
    area_lower: float
    area_upper: float


def spiral_area(shape: SpiralShape | str | int, k: int, perimeter: float = 1.0) -> SpiralArrangement:
    """Exact area of the spiral of ``k`` tiles, with its bounding envelope.

    The exact value fills whichever side of the envelope the closed-form
    bound leaves open.
    """
    shape = SpiralShape.parse(shape)
    if not (math.isfinite(perimeter) and perimeter > 0):
        raise InvalidSpec(f"perimeter must be positive, got {perimeter!r}")
    sides = spiral_side_count(shape, k)
    s = perimeter / sides
    exact = k * UNIT_AREA[shape] * s * s
    lower, upper = _bounds(shape, k, perimeter)
    return SpiralArrangement(
        shape=shape,
        pens=int(k),
        side_count=sides,
        side_length=s,
        area=exact,
        area_lower=exact if lower is None else lower,
        area_upper=exact if upper is None else upper,
    )


def spiral_areas(shape: SpiralShape | str | int, ks: np.ndarray, perimeter: float = 1.0) -> np.ndarray:
    shape = SpiralShape.parse(shape)
    k = np.asarray(ks, dtype=np.int64)
    sides = spiral_side_counts(shape, k).astype(np.float64)
    return k * UNIT_AREA[shape] * (perimeter / sides) ** 2


@dataclass(frozen=True)
class SpiralComparison:
    pens: int
    areas: dict[SpiralShape, float]
    ordering: tuple[SpiralShape, ...]


def spiral_compare(k: int, perimeter: float = 1.0) -> SpiralComparison:
    """Order the three tilings by spiral area, largest first."""
    areas = {shape: spiral_area(shape, k, perimeter).area for shape in SpiralShape}
    ordering = tuple(sorted(areas, key=lambda s: (-areas[s], int(s))))
    return SpiralComparison(int(k), areas, ordering)


def square_triangle_bound_ratio(k: float) -> float:
    """Squares provably beat triangles wherever this drops below ``3**-0.25``."""
    return (2 * k + 2 * math.sqrt(k) + 1) / (3 * k + math.sqrt(6 * k))


def hexagon_square_bound_ratio(k: float) -> float:
    """Hexagons provably beat squares wherever this drops below ``108**0.25``."""
    return (3 * k + math.sqrt(12 * k - 3) + 1) / (k + math.sqrt(k))
