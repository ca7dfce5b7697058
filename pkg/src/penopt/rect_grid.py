"""Rectangular grids of pens in n dimensions under a cost budget.

A ``b_1 x ... x b_n`` grid of identical chambers with side lengths
``x_1, ..., x_n`` holds hypervolume ``prod(x_j * b_j)``.  The walls
perpendicular to axis ``i`` cost ``C_i * prod_{j != i}(x_j * b_j)``, where
``C_i`` is the raw wall-cost combination ``c_i`` divided by the chamber
counts of the other axes.

At the optimum each axis receives exactly ``budget / n`` of the spending.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidSpec, NotUnbounded, UnboundedProblem

__all__ = [
    "MAX_DIMS",
    "GridSpec",
    "RectSolution",
    "WitnessSolution",
    "solve_grid",
    "unbounded_witness",
    "surface_area_spec",
    "hypervolume",
    "direction_costs",
    "total_cost",
]

MAX_DIMS = 16


@dataclass(frozen=True)
class GridSpec:
    """An n-dimensional grid problem with normalized direction costs."""

    dims: int
    chamber_counts: tuple[int, ...]
    cost_coeffs: tuple[float, ...]
    budget: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "chamber_counts", tuple(self.chamber_counts))
        object.__setattr__(self, "cost_coeffs", tuple(float(c) for c in self.cost_coeffs))
        n = self.dims
        if isinstance(n, bool) or not isinstance(n, int):
            raise InvalidSpec(f"dims must be an integer, got {n!r}")
        if not 2 <= n <= MAX_DIMS:
            raise InvalidSpec(f"dims must lie in 2..{MAX_DIMS}, got {n}")
        if len(self.chamber_counts) != n or len(self.cost_coeffs) != n:
            raise InvalidSpec(
                f"expected {n} chamber counts and {n} cost coefficients, got "
                f"{len(self.chamber_counts)} and {len(self.cost_coeffs)}"
            )
        for b in self.chamber_counts:
            if isinstance(b, bool) or not isinstance(b, int) or b < 1:
                raise InvalidSpec(f"chamber counts must be positive integers, got {b!r}")
        for c in self.cost_coeffs:
            if not math.isfinite(c) or c < 0:
                raise InvalidSpec(f"cost coefficients must be finite and non-negative, got {c!r}")
        if not (math.isfinite(self.budget) and self.budget > 0):
            raise InvalidSpec(f"budget must be positive, got {self.budget!r}")

    @classmethod
    def from_raw_costs(
        cls, chamber_counts: Sequence[int], raw_costs: Sequence[float], budget: float
    ) -> GridSpec:
        """Build a spec from raw wall-cost combinations ``c_i``.

        Each ``c_i`` is divided by the product of the chamber counts of the
        other axes to give the normalized coefficient ``C_i``.
        """
        counts = tuple(chamber_counts)
        if len(raw_costs) != len(counts):
            raise InvalidSpec("raw_costs and chamber_counts differ in length")
        coeffs = []
        for i, c in enumerate(raw_costs):
            others = math.prod(b for j, b in enumerate(counts) if j != i)
            coeffs.append(c / others)
        return cls(len(counts), counts, tuple(coeffs), budget)

    def raw_costs(self) -> tuple[float, ...]:
        n = self.dims
        return tuple(
            self.cost_coeffs[i] * math.prod(self.chamber_counts[j] for j in range(n) if j != i)
            for i in range(n)
        )


@dataclass(frozen=True)
class RectSolution:
    side_lengths: tuple[float, ...]
    multiplier: float
    hypervolume: float
    direction_costs: tuple[float, ...]


@dataclass(frozen=True)
class WitnessSolution:
    """A feasible configuration whose hypervolume grows linearly in ``x1``."""

    side_lengths: tuple[float, ...]
    free_axis: int
    hypervolume: float
    cost: float


def hypervolume(spec: GridSpec, x: Sequence[float]) -> float:
    return math.prod(xi * bi for xi, bi in zip(x, spec.chamber_counts))


def direction_costs(spec: GridSpec, x: Sequence[float]) -> tuple[float, ...]:
    """Cost of the walls perpendicular to each axis at side lengths ``x``."""
    spans = [xi * bi for xi, bi in zip(x, spec.chamber_counts)]
    n = spec.dims
    return tuple(
        spec.cost_coeffs[i] * math.prod(spans[j] for j in range(n) if j != i)
        for i in range(n)
    )


def total_cost(spec: GridSpec, x: Sequence[float]) -> float:
    return math.fsum(direction_costs(spec, x))


def solve_grid(spec: GridSpec) -> RectSolution:
    """Return the hypervolume-maximizing side lengths for ``spec``.

    With every ``C_i > 0`` the unique positive critical point is
    ``x_i = (C_i / b_i) * t`` where ``t = (C / (n * prod C_j))**(1/(n-1))``,
    and the Lagrange multiplier is ``t / (n - 1)``.

    Raises:
        UnboundedProblem: if any cost coefficient is zero.
    """
    zeros = [i for i, c in enumerate(spec.cost_coeffs) if c == 0]
    if zeros:
        raise UnboundedProblem(
            f"cost coefficient(s) at axis {zeros} are zero; hypervolume is unbounded"
        )
    n = spec.dims
    # log space keeps prod(C_j) safe from overflow for n up to MAX_DIMS
    log_t = (
        math.log(spec.budget) - math.log(n) - math.fsum(math.log(c) for c in spec.cost_coeffs)
    ) / (n - 1)
    t = math.exp(log_t)
    x = tuple(c / b * t for c, b in zip(spec.cost_coeffs, spec.chamber_counts))
    return RectSolution(
        side_lengths=x,
        multiplier=t / (n - 1),
        hypervolume=hypervolume(spec, x),
        direction_costs=direction_costs(spec, x),
    )


def unbounded_witness(spec: GridSpec, x1: float) -> WitnessSolution:
    """Construct a budget-exhausting configuration with hypervolume linear in ``x1``.

    The last zero-cost axis is left free; every other side is set to ``x1``
    and the free side absorbs the budget.
    """
    zeros = [i for i, c in enumerate(spec.cost_coeffs) if c == 0]
    if not zeros:
        raise NotUnbounded("all cost coefficients are positive; a finite optimum exists")
    if not (math.isfinite(x1) and x1 > 0):
        raise InvalidSpec(f"x1 must be positive, got {x1!r}")
    free = zeros[-1]
    n = spec.dims
    b = spec.chamber_counts
    weight = math.fsum(
        spec.cost_coeffs[i] * math.prod(b[j] for j in range(n) if j != i)
        for i in range(n)
        if i != free
    )
    if weight == 0:
        raise InvalidSpec("every cost coefficient is zero; the budget cannot be spent")
    x = [x1] * n
    x[free] = spec.budget / (x1 ** (n - 2) * weight)
    x = tuple(x)
    return WitnessSolution(
        side_lengths=x,
        free_axis=free,
        hypervolume=hypervolume(spec, x),
        cost=total_cost(spec, x),
    )


def surface_area_spec(dims: int, chamber_counts: Sequence[int], area_budget: float) -> GridSpec:
    """Spec whose cost equation measures total hypersurface area.

    Axis ``i`` has ``b_i + 1`` full-length walls perpendicular to it, so the
    coefficients are ``b_i + 1`` and the budget is the area ``S``.
    """
    counts = tuple(chamber_counts)
    if len(counts) != dims:
        raise InvalidSpec(f"expected {dims} chamber counts, got {len(counts)}")
    return GridSpec(dims, counts, tuple(float(b + 1) for b in counts), area_budget)
