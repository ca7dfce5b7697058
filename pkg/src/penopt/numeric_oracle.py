"""Independent numerical checks for the closed-form results.

``maximize_grid`` finds the optimal grid by direct numerical search and
never touches the Lagrange solution.  ``scan_comparisons`` evaluates every
design in a family at every pen count and reports where orderings change.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Sequence

import numpy as np

from .errors import DidNotConverge, InvalidSpec, UnboundedProblem
from .rect_grid import GridSpec

__all__ = [
    "OracleConfig",
    "OracleResult",
    "maximize_grid",
    "project_to_budget",
    "Segment",
    "Flip",
    "ScanReport",
    "FAMILIES",
    "scan_comparisons",
]

Family = Literal["polygon-chain", "spiral", "platonic"]
FAMILIES: tuple[str, ...] = ("polygon-chain", "spiral", "platonic")

_MAX_SCAN_K = 10**6


@dataclass(frozen=True)
class OracleConfig:
    max_iterations: int = 10_000
    convergence_tol: float = 1e-10
    multi_start: int = 8
    seed: int = 0

    def __post_init__(self) -> None:
        if self.max_iterations < 1 or self.multi_start < 1:
            raise InvalidSpec("max_iterations and multi_start must be positive")
        if not self.convergence_tol > 0:
            raise InvalidSpec("convergence_tol must be positive")
        if not 0 <= self.seed < 2**64:
            raise InvalidSpec("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class OracleResult:
    side_lengths: tuple[float, ...]
    hypervolume: float
    start_volumes: tuple[float, ...]
    iterations: tuple[int, ...]


class _GridProblem:
    """Log-space objective with the budget enforced by homogeneous rescaling."""

    def __init__(self, spec: GridSpec):
        self.n = spec.dims
        self.budget = spec.budget
        self.log_b = np.log(np.asarray(spec.chamber_counts, dtype=float))
        self.log_c = np.log(np.asarray(spec.cost_coeffs, dtype=float))
        self.counts = np.asarray(spec.chamber_counts, dtype=float)

    def log_cost(self, u: np.ndarray) -> float:
        spans = u + self.log_b
        terms = self.log_c + (spans.sum() - spans)
        top = terms.max()
        return float(top + math.log(np.exp(terms - top).sum()))

    def objective(self, u: np.ndarray) -> float:
        """Negative log hypervolume after projecting ``exp(u)`` onto the budget."""
        n = self.n
        log_v = float((u + self.log_b).sum())
        return -(log_v + n / (n - 1) * (math.log(self.budget) - self.log_cost(u)))

    def gradient(self, u: np.ndarray, h: float = 1e-6) -> np.ndarray:
        g = np.empty_like(u)
        for i in range(u.size):
            up = u.copy()
            dn = u.copy()
            up[i] += h
            dn[i] -= h
            g[i] = (self.objective(up) - self.objective(dn)) / (2 * h)
        # the objective is flat along the all-ones direction (uniform rescaling)
        return g - g.mean()

    def project(self, u: np.ndarray) -> np.ndarray:
        x = np.exp(u)
        return x * np.exp((math.log(self.budget) - self.log_cost(u)) / (self.n - 1))


def project_to_budget(spec: GridSpec, x: Sequence[float]) -> np.ndarray:
    """Rescale positive side lengths so the cost equation holds exactly."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise InvalidSpec("side lengths must be positive")
    return _GridProblem(spec).project(np.log(x))


def _bfgs(problem: _GridProblem, u0: np.ndarray, cfg: OracleConfig) -> tuple[np.ndarray, int]:
    u = u0 - u0.mean()
    f = problem.objective(u)
    g = problem.gradient(u)
    H = np.eye(u.size)
    tol = cfg.convergence_tol
    for it in range(1, cfg.max_iterations + 1):
        d = -H @ g
        slope = float(g @ d)
        if slope >= 0:
            H = np.eye(u.size)
            d = -g
            slope = float(g @ d)
        t = 1.0
        while True:
            trial = u + t * d
            f_trial = problem.objective(trial)
            if f_trial <= f + 1e-4 * t * slope:
                break
            t *= 0.5
            if t * np.abs(d).max() < tol:
                # no descent left at resolution tol: stationary up to gradient noise
                return u, it
        s = trial - u
        g_new = problem.gradient(trial)
        y = g_new - g
        u, f, g = trial, f_trial, g_new
        if np.abs(s).max() < tol:
            return u, it
        sy = float(s @ y)
        if sy > 1e-12 * float(np.linalg.norm(s) * np.linalg.norm(y)):
            rho = 1.0 / sy
            eye = np.eye(u.size)
            H = (eye - rho * np.outer(s, y)) @ H @ (eye - rho * np.outer(y, s)) + rho * np.outer(s, s)
    raise DidNotConverge(
        f"relative step still above {tol:g} after {cfg.max_iterations} iterations"
    )


def maximize_grid(spec: GridSpec, cfg: OracleConfig | None = None) -> OracleResult:
    """Maximize ``prod(x_i b_i)`` on the budget surface by multi-start search.

    Iterates live in log coordinates; every point is mapped onto the budget
    surface by one scalar rescaling, which is exact because the cost is
    homogeneous of degree ``n - 1``.  Gradients are central differences.
    """
    cfg = cfg or OracleConfig()
    if any(c == 0 for c in spec.cost_coeffs):
        raise UnboundedProblem("a zero cost coefficient leaves the hypervolume unbounded")
    problem = _GridProblem(spec)
    rng = np.random.default_rng(cfg.seed)
    starts = rng.uniform(-3.0, 3.0, size=(cfg.multi_start, spec.dims))

    best_x: np.ndarray | None = None
    best_v = -math.inf
    volumes: list[float] = []
    iterations: list[int] = []
    for u0 in starts:
        try:
            u, its = _bfgs(problem, u0, cfg)
        except DidNotConverge:
            continue
        x = problem.project(u)
        v = float(np.prod(x * problem.counts))
        volumes.append(v)
        iterations.append(its)
        if v > best_v:
            best_v, best_x = v, x
    if best_x is None:
        raise DidNotConverge(f"none of {cfg.multi_start} starts converged")
    return OracleResult(tuple(float(v) for v in best_x), best_v, tuple(volumes), tuple(iterations))


# ---------------------------------------------------------------------------
# brute-force comparison scans
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Segment:
    """A maximal run of pen counts sharing one value (a winner or a ranking)."""

    k_start: int
    k_end: int
    value: object


@dataclass(frozen=True)
class Flip:
    """The order of ``first`` and ``second`` changes at pen count ``k``."""

    first: object
    second: object
    k: int
    winner_after: object


@dataclass(frozen=True)
class ScanReport:
    family: str
    k_min: int
    k_max: int
    labels: tuple[object, ...]
    winners: tuple[Segment, ...]
    rankings: tuple[Segment, ...]
    flips: tuple[Flip, ...]

    def winner(self, k: int) -> object:
        for seg in self.winners:
            if seg.k_start <= k <= seg.k_end:
                return seg.value
        raise KeyError(k)


def _polygon_family(ks: np.ndarray) -> tuple[list[object], np.ndarray]:
    from .polygon_chain import CIRCLE

    labels: list[object] = [3, 4, 5, 6, 7, 8, CIRCLE]
    k = ks.astype(float)
    rows = []
    for n in labels[:-1]:
        s = 1.0 / (k * (n - 1) + 1)
        rows.append(k * n * s * s / (4 * np.tan(np.pi / n)))
    r = 1.0 / (2 * np.pi * k)
    rows.append(k * np.pi * r * r)
    return labels, np.vstack(rows)


def _spiral_family(ks: np.ndarray) -> tuple[list[object], np.ndarray]:
    from .spiral_packing import SpiralShape, spiral_areas

    labels: list[object] = list(SpiralShape)
    return labels, np.vstack([spiral_areas(s, ks) for s in labels])


def _platonic_family(ks: np.ndarray) -> tuple[list[object], np.ndarray]:
    from .platonic_chain import Solid, q_constant

    labels: list[object] = list(Solid)
    k = ks.astype(float)
    rows = []
    for solid in labels:
        f = int(solid)
        a = f / (k * (f - 1) + 1)
        rows.append(k * a**1.5 / q_constant(solid))
    return labels, np.vstack(rows)


def _segments(ks: np.ndarray, codes: np.ndarray, decode) -> tuple[Segment, ...]:
    breaks = np.flatnonzero(codes[1:] != codes[:-1]) + 1
    starts = np.concatenate(([0], breaks))
    ends = np.concatenate((breaks - 1, [len(ks) - 1]))
    return tuple(Segment(int(ks[a]), int(ks[b]), decode(codes[a])) for a, b in zip(starts, ends))


def scan_comparisons(family: str, k_range: tuple[int, int]) -> ScanReport:
    """Evaluate every design of ``family`` at each k in the inclusive range.

    Reports the winner and full ranking as runs of k, and every pair whose
    order changes between consecutive k.  Exact ties keep list order.
    """
    k_min, k_max = k_range
    if not 1 <= k_min <= k_max <= _MAX_SCAN_K:
        raise InvalidSpec(f"k range must lie within 1..{_MAX_SCAN_K}, got {k_range!r}")
    builders = {
        "polygon-chain": _polygon_family,
        "spiral": _spiral_family,
        "platonic": _platonic_family,
    }
    if family not in builders:
        raise InvalidSpec(f"family must be one of {FAMILIES}, got {family!r}")
    ks = np.arange(k_min, k_max + 1, dtype=np.int64)
    labels, values = builders[family](ks)

    order = np.argsort(-values, axis=0, kind="stable")
    winners = _segments(ks, order[0], lambda i: labels[int(i)])
    # encode each ranking as one integer so runs can be found with array ops
    base = len(labels)
    weights = base ** np.arange(base - 1, -1, -1, dtype=np.int64)
    codes = weights @ order
    rank_lookup = {}
    for col in np.unique(codes, return_index=True)[1]:
        rank_lookup[int(codes[col])] = tuple(labels[int(i)] for i in order[:, col])
    rankings = _segments(ks, codes, lambda c: rank_lookup[int(c)])

    flips = []
    for i, j in combinations(range(len(labels)), 2):
        first_ahead = values[i] > values[j]
        for idx in np.flatnonzero(first_ahead[1:] != first_ahead[:-1]) + 1:
            after = labels[i] if first_ahead[idx] else labels[j]
            flips.append(Flip(labels[i], labels[j], int(ks[idx]), after))
    flips.sort(key=lambda fl: fl.k)
    return ScanReport(family, k_min, k_max, tuple(labels), winners, rankings, tuple(flips))
