"""Integer crossover thresholds for "rational function of k vs constant".

Every shape comparison in this package reduces to asking whether
``r(k) = (alpha*k + beta) / (gamma*k + delta)`` lies below (or above) a
positive constant.  ``r`` is monotone in ``k``, so the answer changes at
most once.  The real root of ``r(k) = c`` seeds the integer search and
direct evaluation at neighbouring integers decides the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Optional

from .errors import InvalidSpec
from .platonic_chain import SPHERE, Solid, pairwise_bound, parse_solid, q_constant

__all__ = [
    "RationalVsConstant",
    "CrossoverReport",
    "find_threshold",
    "polygon_comparison",
    "circle_polygon_comparison",
    "solid_comparison",
    "sphere_solid_comparison",
    "MARGINAL_LIMIT_TOL",
]

MARGINAL_LIMIT_TOL = 1e-12

Direction = Literal["below", "above"]
Kind = Literal["always_true", "always_false", "flip"]

# beyond this many unit steps from the seed, fall back to bisection
_MAX_LOCAL_STEPS = 64


@dataclass(frozen=True)
class RationalVsConstant:
    """The predicate ``r(k) < bound`` (``direction="below"``) or ``r(k) > bound``.

    The predicate being true means the first design wins.
    """

    alpha: float
    beta: float
    gamma: float
    delta: float
    bound: float
    direction: Direction = "below"
    tag: str = ""

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma", "delta", "bound"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidSpec(f"{name} must be finite")
        if self.bound <= 0:
            raise InvalidSpec(f"bound must be positive, got {self.bound!r}")
        if self.gamma < 0 or self.gamma + self.delta <= 0:
            raise InvalidSpec("denominator gamma*k + delta must stay positive for k >= 1")
        if self.direction not in ("below", "above"):
            raise InvalidSpec(f"direction must be 'below' or 'above', got {self.direction!r}")

    def ratio(self, k: float) -> float:
        return (self.alpha * k + self.beta) / (self.gamma * k + self.delta)

    def holds(self, k: float) -> bool:
        r = self.ratio(k)
        return r < self.bound if self.direction == "below" else r > self.bound

    @property
    def slope_sign(self) -> int:
        """Sign of dr/dk, constant on k >= 1."""
        det = self.alpha * self.delta - self.beta * self.gamma
        return (det > 0) - (det < 0)

    @property
    def limit(self) -> float:
        if self.gamma > 0:
            return self.alpha / self.gamma
        if self.alpha != 0:
            return math.copysign(math.inf, self.alpha)
        return self.beta / self.delta

    def root(self) -> Optional[float]:
        """Real k with ``r(k) == bound``, if the line crosses at all."""
        denom = self.alpha - self.bound * self.gamma
        if denom == 0 or self.slope_sign == 0:
            return None
        return (self.bound * self.delta - self.beta) / denom


@dataclass(frozen=True)
class CrossoverReport:
    """Result of :func:`find_threshold`.

    For ``kind == "flip"`` the predicate equals ``holds_before`` for every
    ``k < k0`` and its negation for every ``k >= k0``.  ``flip_beyond`` is
    set when the flip exists but lies past ``k_max``.  ``root`` is the real
    crossing and only a diagnostic.
    """

    kind: Kind
    k0: Optional[int]
    holds_before: bool
    k_max: int
    root: Optional[float]
    limit: float
    limit_holds: bool
    marginal_limit: bool
    flip_beyond: Optional[int] = None
    certified: bool = True
    margins: dict[int, float] = field(default_factory=dict)
    tag: str = ""


def _first_change(cmp: RationalVsConstant, start: bool, seed: int) -> int:
    """Smallest integer k >= 2 where the predicate differs from ``start``."""
    k = max(2, seed)
    for _ in range(_MAX_LOCAL_STEPS):
        if cmp.holds(k) == start:
            k += 1
        elif k > 2 and cmp.holds(k - 1) != start:
            k -= 1
        else:
            return k
    # seed was far off: bracket then bisect
    lo = 1
    hi = max(2, k)
    while cmp.holds(hi) == start:
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if cmp.holds(mid) == start:
            lo = mid
        else:
            hi = mid
    return hi


def find_threshold(cmp: RationalVsConstant, k_max: int) -> CrossoverReport:
    if isinstance(k_max, bool) or not isinstance(k_max, int) or k_max < 1:
        raise InvalidSpec(f"k_max must be a positive integer, got {k_max!r}")
    start = cmp.holds(1)
    limit = cmp.limit
    c = cmp.bound
    marginal = math.isfinite(limit) and abs(limit - c) <= MARGINAL_LIMIT_TOL * c
    limit_holds = limit < c if cmp.direction == "below" else limit > c
    root = cmp.root()
    constant_kind: Kind = "always_true" if start else "always_false"

    flips = cmp.slope_sign != 0 and limit != c and limit_holds != start
    if not flips:
        return CrossoverReport(
            kind=constant_kind,
            k0=None,
            holds_before=start,
            k_max=k_max,
            root=root,
            limit=limit,
            limit_holds=limit_holds,
            marginal_limit=marginal,
            tag=cmp.tag,
        )

    seed = math.ceil(root) if root is not None and math.isfinite(root) else 2
    k0 = _first_change(cmp, start, seed)
    certified = cmp.holds(k0 - 1) == start and cmp.holds(k0) != start
    margins = {k: (cmp.ratio(k) - c) / c for k in (k0 - 1, k0)}
    if k0 <= k_max:
        return CrossoverReport(
            kind="flip",
            k0=k0,
            holds_before=start,
            k_max=k_max,
            root=root,
            limit=limit,
            limit_holds=limit_holds,
            marginal_limit=marginal,
            certified=certified,
            margins=margins,
            tag=cmp.tag,
        )
    return CrossoverReport(
        kind=constant_kind,
        k0=None,
        holds_before=start,
        k_max=k_max,
        root=root,
        limit=limit,
        limit_holds=limit_holds,
        marginal_limit=marginal,
        flip_beyond=k0,
        certified=certified,
        margins=margins,
        tag=cmp.tag,
    )


def _cot_weight(n: int) -> float:
    return n / math.tan(math.pi / n)


def polygon_comparison(n: int, m: int) -> RationalVsConstant:
    """Predicate for ``A_k(n) < A_k(m)`` (k chained n-gons vs m-gons)."""
    if n < 3 or m < 3 or n == m:
        raise InvalidSpec("need two different side counts >= 3")
    return RationalVsConstant(
        alpha=m - 1,
        beta=1,
        gamma=n - 1,
        delta=1,
        bound=math.sqrt(_cot_weight(m) / _cot_weight(n)),
        tag=f"sqrt({m} cot(pi/{m}) / ({n} cot(pi/{n})))",
    )


def circle_polygon_comparison(n: int) -> RationalVsConstant:
    """Predicate for circles enclosing less than a chain of n-gons."""
    if n < 3:
        raise InvalidSpec("need a side count >= 3")
    return RationalVsConstant(
        alpha=n - 1,
        beta=1,
        gamma=1,
        delta=0,
        bound=math.sqrt(math.pi * _cot_weight(n)),
        tag=f"sqrt(pi * {n} cot(pi/{n}))",
    )


def solid_comparison(f: Solid | int | str, big: Solid | int | str) -> RationalVsConstant:
    """Predicate for ``V_k(f) < V_k(F)`` over chains of platonic solids."""
    f, big = parse_solid(f), parse_solid(big)
    if SPHERE in (f, big) or f == big:
        raise InvalidSpec("need two different platonic solids")
    return RationalVsConstant(
        alpha=int(big) - 1,
        beta=1,
        gamma=int(f) - 1,
        delta=1,
        bound=pairwise_bound(f, big),
        tag=f"({int(big)}/{int(f)}) (q_{int(f)}/q_{int(big)})^(2/3)",
    )


def sphere_solid_comparison(f: Solid | int | str) -> RationalVsConstant:
    """Predicate for a chain of solids holding less than the same number of spheres."""
    f = parse_solid(f)
    if f == SPHERE:
        raise InvalidSpec("need a platonic solid")
    faces = int(f)
    bound = (q_constant(f) / (6 * math.sqrt(math.pi) * faces**1.5)) ** (2 / 3)
    return RationalVsConstant(
        alpha=1,
        beta=0,
        gamma=faces - 1,
        delta=1,
        bound=bound,
        tag=f"(q_{faces} / (6 sqrt(pi) {faces}^(3/2)))^(2/3)",
    )
