"""Optimal pen designs under a boundary budget.

Rectangular n-dimensional grids under a cost budget, chains and spiral
packings of regular polygons under a perimeter, and chains of platonic
solids under a surface area, each with an independent numerical check.
"""

from .errors import DidNotConverge, InvalidSpec, NotUnbounded, PenOptError, UnboundedProblem
from .numeric_oracle import OracleConfig, maximize_grid, scan_comparisons
from .platonic_chain import SPHERE, Solid, chain_volume, full_ordering, pairwise_order, sphere_comparison
from .polygon_chain import (
    CIRCLE,
    ChainSpec,
    best_polygon,
    chain_area,
    circle_vs_triangle,
    derivative_sign,
    sine_bound_check,
)
from .rect_grid import GridSpec, solve_grid, surface_area_spec, unbounded_witness
from .spiral_packing import SpiralShape, spiral_area, spiral_compare, spiral_side_count
from .threshold import RationalVsConstant, find_threshold

__version__ = "0.1.0"

__all__ = [
    "CIRCLE",
    "SPHERE",
    "ChainSpec",
    "DidNotConverge",
    "GridSpec",
    "InvalidSpec",
    "NotUnbounded",
    "OracleConfig",
    "PenOptError",
    "RationalVsConstant",
    "Solid",
    "SpiralShape",
    "UnboundedProblem",
    "best_polygon",
    "chain_area",
    "chain_volume",
    "circle_vs_triangle",
    "derivative_sign",
    "find_threshold",
    "full_ordering",
    "maximize_grid",
    "pairwise_order",
    "scan_comparisons",
    "sine_bound_check",
    "solve_grid",
    "sphere_comparison",
    "spiral_area",
    "spiral_compare",
    "spiral_side_count",
    "surface_area_spec",
    "unbounded_witness",
]
