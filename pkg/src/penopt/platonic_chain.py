"""Chains of platonic solid pens under a total surface-area budget.

A single solid with surface area ``A`` holds ``A**1.5 / q_f``.  In a chain
of ``k`` solids sharing one face with each neighbour, the per-solid area
(shared faces counted on both sides) is ``A = T*f / (k*(f-1) + 1)``.
Spheres share nothing: ``V = T**1.5 / (6*sqrt(pi*k))``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Literal, Union

from .errors import InvalidSpec

__all__ = [
    "SPHERE",
    "Solid",
    "SolidLike",
    "SolidChainSolution",
    "PairwiseOrder",
    "q_constant",
    "volume",
    "chain_volume",
    "pairwise_order",
    "pairwise_bound",
    "full_ordering",
    "sphere_comparison",
    "parse_solid",
    "solid_name",
]

SPHERE: Literal["sphere"] = "sphere"


class Solid(enum.IntEnum):
    TETRAHEDRON = 4
    CUBE = 6
    OCTAHEDRON = 8
    DODECAHEDRON = 12
    ICOSAHEDRON = 20


SolidLike = Union[Solid, Literal["sphere"]]

_SQRT3 = math.sqrt(3)
_SQRT5 = math.sqrt(5)

_Q = {
    Solid.TETRAHEDRON: 6 * math.sqrt(6 * _SQRT3),
    Solid.CUBE: 6 * math.sqrt(6),
    Solid.OCTAHEDRON: 6 * math.sqrt(3 * _SQRT3),
    Solid.DODECAHEDRON: 6 * math.sqrt(10 - 2 * _SQRT5) * (225 + 90 * _SQRT5) ** 0.25 / (3 + _SQRT5),
    Solid.ICOSAHEDRON: 12 * math.sqrt(15 * _SQRT3) / (3 + _SQRT5),
}
_Q_SPHERE = 6 * math.sqrt(math.pi)


def parse_solid(value: object) -> SolidLike:
    if isinstance(value, Solid) or value == SPHERE:
        return value
    if isinstance(value, str):
        key = value.strip().upper()
        if key == "SPHERE":
            return SPHERE
        if key in Solid.__members__:
            return Solid[key]
        if key.isdigit():
            value = int(key)
    if isinstance(value, bool):
        raise InvalidSpec(f"unknown solid {value!r}")
    try:
        return Solid(value)
    except ValueError:
        raise InvalidSpec(f"faces must be one of 4, 6, 8, 12, 20 or 'sphere', got {value!r}") from None


def solid_name(solid: SolidLike) -> str:
    return "sphere" if solid == SPHERE else solid.name.lower()


def q_constant(solid: SolidLike) -> float:
    """``A**1.5 / V`` for a single solid; smaller holds more per unit area."""
    solid = parse_solid(solid)
    return _Q_SPHERE if solid == SPHERE else _Q[solid]


@dataclass(frozen=True)
class SolidChainSolution:
    per_solid_area: float
    total_volume: float
    surface_check: float


def _check(k: int, total_area: float) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InvalidSpec(f"pen count must be a positive integer, got {k!r}")
    if not (math.isfinite(total_area) and total_area > 0):
        raise InvalidSpec(f"surface area budget must be positive, got {total_area!r}")


def volume(solid: SolidLike, k: int, total_area: float = 1.0) -> float:
    if solid == SPHERE:
        return total_area**1.5 / (6 * math.sqrt(math.pi * k))
    f = int(solid)
    a = total_area * f / (k * (f - 1) + 1)
    return k * a**1.5 / _Q[solid]


def chain_volume(solid: SolidLike | int | str, k: int, total_area: float) -> SolidChainSolution:
    solid = parse_solid(solid)
    _check(k, total_area)
    if solid == SPHERE:
        a = total_area / k
        return SolidChainSolution(a, volume(solid, k, total_area), k * a)
    f = int(solid)
    a = total_area * f / (k * (f - 1) + 1)
    return SolidChainSolution(a, volume(solid, k, total_area), (k * f - (k - 1)) / f * a)


def pairwise_bound(f: Solid, big: Solid) -> float:
    """Constant ``(F/f) * (q_f/q_F)**(2/3)`` that the chain-length ratio is compared with."""
    return int(big) / int(f) * (_Q[f] / _Q[big]) ** (2 / 3)


@dataclass(frozen=True)
class PairwiseOrder:
    """Outcome of comparing two solids at one pen count.

    ``first_smaller`` is true when the first solid encloses less volume.
    ``margin`` is ``(lhs - rhs) / rhs`` from the rearranged inequality.
    """

    first: Solid
    second: Solid
    pens: int
    first_smaller: bool
    lhs: float
    rhs: float
    margin: float

    @property
    def winner(self) -> Solid:
        return self.second if self.first_smaller else self.first


def pairwise_order(f: Solid | int | str, big: Solid | int | str, k: int) -> PairwiseOrder:
    """Decide ``V_k(f) < V_k(F)`` through the chain-length ratio inequality."""
    f, big = parse_solid(f), parse_solid(big)
    if SPHERE in (f, big):
        raise InvalidSpec("pairwise_order compares platonic solids only; use sphere_comparison")
    if f == big:
        raise InvalidSpec("pairwise_order needs two different solids")
    _check(k, 1.0)
    lhs = (k * (int(big) - 1) + 1) / (k * (int(f) - 1) + 1)
    rhs = pairwise_bound(f, big)
    return PairwiseOrder(f, big, k, lhs < rhs, lhs, rhs, (lhs - rhs) / rhs)


def full_ordering(k: int, total_area: float = 1.0) -> tuple[Solid, ...]:
    """The five solids ranked by chain volume, most first."""
    _check(k, total_area)
    vols = {s: volume(s, k, total_area) for s in Solid}
    return tuple(sorted(vols, key=lambda s: (-vols[s], int(s))))


def sphere_comparison(solid: Solid | int | str, k: int) -> SolidLike:
    """Return whichever of spheres or ``solid`` holds more volume for ``k`` pens."""
    solid = parse_solid(solid)
    if solid == SPHERE:
        raise InvalidSpec("compare a platonic solid against spheres")
    _check(k, 1.0)
    return SPHERE if volume(SPHERE, k) > volume(solid, k) else solid
