"""Acceptance checks for every published result, runnable as one batch.

Each check returns a :class:`CriterionResult`; ``run_criteria`` runs all of
them in order.  ``penopt verify`` and the test suite both call into here.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import numeric_oracle, platonic_chain, polygon_chain, rect_grid, spiral_packing
from .platonic_chain import Solid
from .polygon_chain import CIRCLE
from .spiral_packing import SpiralShape

__all__ = ["CriterionResult", "CRITERIA", "run_criteria", "random_grid_specs", "random_degenerate_specs"]


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.title} ({self.seconds:.3f}s) {self.detail}"


def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b)


def random_grid_specs(count: int, seed: int) -> list[rect_grid.GridSpec]:
    """Specs with n in 2..6, b_i in 1..5, C_i in (0.1, 10), budget in (1, 100)."""
    rng = np.random.default_rng(seed)
    specs = []
    for _ in range(count):
        n = int(rng.integers(2, 7))
        counts = tuple(int(b) for b in rng.integers(1, 6, size=n))
        coeffs = tuple(float(c) for c in rng.uniform(0.1, 10.0, size=n))
        specs.append(rect_grid.GridSpec(n, counts, coeffs, float(rng.uniform(1.0, 100.0))))
    return specs


def random_degenerate_specs(count: int, seed: int) -> list[rect_grid.GridSpec]:
    """Like :func:`random_grid_specs` but with one cost coefficient zeroed."""
    rng = np.random.default_rng(seed)
    specs = []
    for spec in random_grid_specs(count, seed):
        coeffs = list(spec.cost_coeffs)
        coeffs[int(rng.integers(0, spec.dims))] = 0.0
        specs.append(rect_grid.GridSpec(spec.dims, spec.chamber_counts, tuple(coeffs), spec.budget))
    return specs


def _check_example(spec: rect_grid.GridSpec, expected_x: tuple[float, ...], expected_cost: float):
    sol = rect_grid.solve_grid(spec)
    x_err = max(_rel(x, e) for x, e in zip(sol.side_lengths, expected_x))
    c_err = max(_rel(c, expected_cost) for c in sol.direction_costs)
    return sol, x_err, c_err


def c01_ostrich() -> tuple[bool, str]:
    spec = rect_grid.GridSpec(2, (3, 1), (4.0, 2.0), 1000.0)
    _, x_err, c_err = _check_example(spec, (250 / 3, 125.0), 500.0)
    best = math.inf
    for _ in range(20):
        t0 = time.perf_counter()
        rect_grid.solve_grid(spec)
        best = min(best, time.perf_counter() - t0)
    ok = x_err <= 1e-10 and c_err <= 1e-10 and best < 1e-3
    return ok, f"x err {x_err:.1e}, cost err {c_err:.1e}, solve {best * 1e6:.1f} us"


def c02_tv_stand() -> tuple[bool, str]:
    spec = rect_grid.GridSpec(3, (1, 1, 2), (6.0, 2.0, 9.0), 81.0)
    _, x_err, c_err = _check_example(spec, (3.0, 1.0, 2.25), 27.0)
    return x_err <= 1e-10 and c_err <= 1e-10, f"x err {x_err:.1e}, cost err {c_err:.1e}"


def c03_equal_split(seed: int = 2024) -> tuple[bool, str]:
    t0 = time.perf_counter()
    split_err = oracle_err = 0.0
    for i, spec in enumerate(random_grid_specs(200, seed)):
        sol = rect_grid.solve_grid(spec)
        share = spec.budget / spec.dims
        split_err = max(split_err, max(_rel(c, share) for c in sol.direction_costs))
        num = numeric_oracle.maximize_grid(spec, numeric_oracle.OracleConfig(seed=seed + i))
        oracle_err = max(oracle_err, _rel(num.hypervolume, sol.hypervolume))
    elapsed = time.perf_counter() - t0
    ok = split_err <= 1e-10 and oracle_err <= 1e-6 and elapsed < 30
    return ok, f"split err {split_err:.1e}, oracle err {oracle_err:.1e}, {elapsed:.1f}s"


def c04_unbounded(seed: int = 7) -> tuple[bool, str]:
    cost_err = ratio_err = 0.0
    for spec in random_degenerate_specs(20, seed):
        x1 = 0.5 + (spec.budget % 3)
        lo = rect_grid.unbounded_witness(spec, x1)
        hi = rect_grid.unbounded_witness(spec, 10 * x1)
        cost_err = max(cost_err, _rel(lo.cost, spec.budget), _rel(hi.cost, spec.budget))
        ratio_err = max(ratio_err, _rel(hi.hypervolume / lo.hypervolume, 10.0))
    return cost_err <= 1e-12 and ratio_err <= 1e-9, f"cost err {cost_err:.1e}, ratio err {ratio_err:.1e}"


def c05_polygon_regimes() -> tuple[bool, str]:
    t0 = time.perf_counter()
    expected = {1: CIRCLE, 2: 7, 3: 5, 4: 5}
    bad = [k for k, w in expected.items() if polygon_chain.best_polygon(k).winner != w]
    bad += [k for k in range(5, 10**4 + 1) if polygon_chain.best_polygon(k).winner != 4]
    elapsed = time.perf_counter() - t0
    return not bad and elapsed < 5, f"mismatched k: {bad[:5]}, {elapsed:.2f}s"


def c06_circles() -> tuple[bool, str]:
    bad = [k for k in (1, 2, 3) if polygon_chain.circle_vs_triangle(k) != CIRCLE]
    bad += [k for k in range(4, 1001) if polygon_chain.circle_vs_triangle(k) != 3]
    return not bad, f"mismatched k: {bad[:5]}"


def c07_domination() -> tuple[bool, str]:
    ns = np.arange(8, 201)
    worst = -math.inf
    for k in range(2, 51):
        areas = np.array([polygon_chain.area(k, int(n)) for n in ns])
        # every later (larger m) area must be below every earlier one
        worst = max(worst, float(np.max(np.diff(areas))))
        if np.any(np.diff(areas) >= 0):
            return False, f"k={k} not strictly decreasing in n"
    return True, f"largest consecutive difference {worst:.2e}"


def c08_sine_bound(seed: int = 11) -> tuple[bool, str]:
    xs = np.random.default_rng(seed).uniform(7.5, 1e4, size=10**4)
    xs[0], xs[-1] = 7.5, 1e4
    failures = [float(x) for x in xs if not polygon_chain.sine_bound_check(float(x))]
    ok = not failures and not polygon_chain.sine_bound_check(1.0)
    return ok, f"{len(failures)} failures in [7.5, 1e4]"


def c09_spiral_values() -> tuple[bool, str]:
    r3 = math.sqrt(3)
    expected = {
        (SpiralShape.SQUARE, 3): 3 / 100,
        (SpiralShape.SQUARE, 4): 1 / 36,
        (SpiralShape.SQUARE, 5): 1 / 45,
        (SpiralShape.SQUARE, 6): 6 / 289,
        (SpiralShape.HEXAGON, 3): 9 * r3 / 450,
        (SpiralShape.HEXAGON, 4): 6 * r3 / 361,
        (SpiralShape.HEXAGON, 5): 15 * r3 / 1058,
        (SpiralShape.HEXAGON, 6): r3 / 81,
    }
    perimeter = 7.0
    err = max(
        _rel(spiral_packing.spiral_area(s, k, perimeter).area, v * perimeter**2)
        for (s, k), v in expected.items()
    )
    return err <= 1e-12, f"max rel err {err:.1e}"


def c10_spiral_order() -> tuple[bool, str]:
    t0 = time.perf_counter()
    ks = np.arange(1, 10**6 + 1)
    tri = spiral_packing.spiral_areas(SpiralShape.TRIANGLE, ks)
    sq = spiral_packing.spiral_areas(SpiralShape.SQUARE, ks)
    hexa = spiral_packing.spiral_areas(SpiralShape.HEXAGON, ks)
    bad = np.flatnonzero(~((hexa > sq) & (sq > tri))) + 1
    elapsed = time.perf_counter() - t0
    return bad.size == 0 and elapsed < 10, f"{bad.size} violations, {elapsed:.2f}s"


def _flips(f: Solid, big: Solid, k_max: int) -> list[int]:
    prev = platonic_chain.pairwise_order(f, big, 1).first_smaller
    out = []
    for k in range(2, k_max + 1):
        cur = platonic_chain.pairwise_order(f, big, k).first_smaller
        if cur != prev:
            out.append(k)
        prev = cur
    return out


def c11_platonic_thresholds() -> tuple[bool, str]:
    S = Solid
    k_max = 10**4
    found = {
        (S.CUBE, S.OCTAHEDRON): _flips(S.CUBE, S.OCTAHEDRON, k_max),
        (S.DODECAHEDRON, S.ICOSAHEDRON): _flips(S.DODECAHEDRON, S.ICOSAHEDRON, k_max),
    }
    steady = [(4, 6), (8, 12), (6, 12), (8, 20), (6, 20)]
    for f, big in steady:
        found[(S(f), S(big))] = _flips(S(f), S(big), k_max)
    ok = found[(S.CUBE, S.OCTAHEDRON)] == [68] and found[(S.DODECAHEDRON, S.ICOSAHEDRON)] == [9]
    ok = ok and all(not found[(S(f), S(big))] for f, big in steady)
    ok = ok and platonic_chain.pairwise_order(6, 8, 67).first_smaller
    ok = ok and not platonic_chain.pairwise_order(6, 8, 68).first_smaller
    ok = ok and platonic_chain.pairwise_order(12, 20, 8).first_smaller
    ok = ok and not platonic_chain.pairwise_order(12, 20, 9).first_smaller
    detail = ", ".join(f"({int(a)},{int(b)}): {v or 'none'}" for (a, b), v in found.items())
    return ok, detail


def c12_platonic_table() -> tuple[bool, str]:
    S = Solid
    small = (S.ICOSAHEDRON, S.DODECAHEDRON, S.OCTAHEDRON, S.CUBE, S.TETRAHEDRON)
    middle = (S.DODECAHEDRON, S.ICOSAHEDRON, S.OCTAHEDRON, S.CUBE, S.TETRAHEDRON)
    large = (S.DODECAHEDRON, S.ICOSAHEDRON, S.CUBE, S.OCTAHEDRON, S.TETRAHEDRON)
    table = {1: small, 8: small, 9: middle, 67: middle, 68: large, 1000: large}
    bad = [k for k, want in table.items() if platonic_chain.full_ordering(k) != want]
    return not bad, f"mismatched k: {bad}"


def c13_spheres() -> tuple[bool, str]:
    bad = [
        (int(s), k)
        for s in Solid
        for k in range(1, 10**4 + 1)
        if platonic_chain.sphere_comparison(s, k) != platonic_chain.SPHERE
    ]
    return not bad, f"{len(bad)} losses for spheres"


# unit-edge volume and surface area of each solid
UNIT_SOLIDS = {
    Solid.TETRAHEDRON: (1 / (6 * math.sqrt(2)), math.sqrt(3)),
    Solid.CUBE: (1.0, 6.0),
    Solid.OCTAHEDRON: (math.sqrt(2) / 3, 2 * math.sqrt(3)),
    Solid.DODECAHEDRON: ((15 + 7 * math.sqrt(5)) / 4, 3 * math.sqrt(25 + 10 * math.sqrt(5))),
    Solid.ICOSAHEDRON: (5 * (3 + math.sqrt(5)) / 12, 5 * math.sqrt(3)),
}


def c14_q_constants() -> tuple[bool, str]:
    err = max(_rel(a**1.5 / v, platonic_chain.q_constant(s)) for s, (v, a) in UNIT_SOLIDS.items())
    return err <= 1e-9, f"max rel err {err:.1e}"


def c15_two_tetrahedra() -> tuple[bool, str]:
    got = platonic_chain.chain_volume(Solid.TETRAHEDRON, 2, 1.0).total_volume
    want = 8 / (21 * math.sqrt(42 * math.sqrt(3)))
    err = _rel(got, want)
    return err <= 1e-12, f"rel err {err:.1e}"


CRITERIA: dict[int, tuple[str, Callable[[], tuple[bool, str]]]] = {
    1: ("ostrich pen example", c01_ostrich),
    2: ("tv-stand example", c02_tv_stand),
    3: ("equal-split optimum with oracle agreement", c03_equal_split),
    4: ("zero-cost direction is unbounded", c04_unbounded),
    5: ("best polygon chain regimes", c05_polygon_regimes),
    6: ("circles versus triangles", c06_circles),
    7: ("more sides lose beyond octagons", c07_domination),
    8: ("sine lower bound", c08_sine_bound),
    9: ("exact spiral areas", c09_spiral_values),
    10: ("hexagon > square > triangle spirals", c10_spiral_order),
    11: ("platonic pairwise thresholds", c11_platonic_thresholds),
    12: ("platonic ordering table", c12_platonic_table),
    13: ("spheres beat every platonic chain", c13_spheres),
    14: ("q constants from unit solids", c14_q_constants),
    15: ("two-tetrahedron chain volume", c15_two_tetrahedra),
}


def run_criterion(number: int) -> CriterionResult:
    title, check = CRITERIA[number]
    t0 = time.perf_counter()
    try:
        passed, detail = check()
    except Exception as exc:  # a crash is a failure, reported not raised
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CriterionResult(number, title, bool(passed), detail, time.perf_counter() - t0)


def run_criteria(numbers=None) -> list[CriterionResult]:
    return [run_criterion(n) for n in (numbers or sorted(CRITERIA))]
