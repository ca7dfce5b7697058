"""Command-line entry point: ``penopt <family> <action> [options]``.

Exit status is 0 on success, 1 on invalid input and 2 when ``verify``
finds a failing check.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from . import __version__
from . import numeric_oracle, platonic_chain, polygon_chain, rect_grid, spiral_packing, threshold, verify
from .drawing import chain_svg, spiral_svg
from .errors import InvalidSpec, PenOptError
from .output import DEFAULT_DIGITS, Result, render, write_text
from .platonic_chain import SPHERE, Solid, solid_name
from .polygon_chain import CIRCLE, shape_name
from .spiral_packing import SpiralShape

SCHEMA_VERSION = 1

# accepted keys of each JSON spec file (besides "schema")
SPEC_KEYS = {
    "rect": {"dims", "chamber_counts", "cost_coeffs", "raw_costs", "budget", "x1"},
    "polygon": {"pens", "sides", "budget", "candidates"},
    "spiral": {"shape", "pens", "budget"},
    "platonic": {"faces", "pens", "budget"},
    "crossover": {"alpha", "beta", "gamma", "delta", "bound", "direction", "tag", "k_max"},
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which is reserved
        raise UsageError(f"{self.prog}: error: {message}")


# ---------------------------------------------------------------------------
# input helpers
# ---------------------------------------------------------------------------


def load_spec(path: str | None, family: str) -> dict[str, Any]:
    if path is None:
        return {}
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InvalidSpec(f"cannot read spec file {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"spec file {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InvalidSpec("spec file must hold a JSON object")
    if data.get("schema") != SCHEMA_VERSION:
        raise InvalidSpec(f"spec file must declare \"schema\": {SCHEMA_VERSION}")
    unknown = set(data) - SPEC_KEYS[family] - {"schema"}
    if unknown:
        raise InvalidSpec(f"unknown field(s) in {family} spec: {', '.join(sorted(unknown))}")
    return data


def _pick(args: argparse.Namespace, spec: dict[str, Any], flag: str, key: str | None = None, default: Any = None):
    value = getattr(args, flag, None)
    if value is not None:
        return value
    return spec.get(key or flag, default)


def _require(value: Any, name: str) -> Any:
    if value is None:
        raise InvalidSpec(f"missing required value: {name}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _polygon_shape(value: Any) -> polygon_chain.Shape:
    if isinstance(value, str):
        if value.strip().lower() in ("circle", "inf", "infinity"):
            return CIRCLE
        try:
            return int(value)
        except ValueError:
            raise InvalidSpec(f"sides must be an integer or 'circle', got {value!r}") from None
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidSpec(f"sides must be an integer or 'circle', got {value!r}")
    return value


def _as_int(value: Any, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidSpec(f"{name} must be an integer, got {value!r}")
    return value


def _as_float(value: Any, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidSpec(f"{name} must be a number, got {value!r}")
    return float(value)


def _polygon_label(shape: polygon_chain.Shape) -> str:
    return shape_name(shape) if shape == CIRCLE else f"{shape_name(shape)} (n={shape})"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _grid_spec(args: argparse.Namespace) -> tuple[rect_grid.GridSpec, dict[str, Any]]:
    spec = load_spec(args.spec, "rect")
    counts = _require(_pick(args, spec, "counts", "chamber_counts"), "--counts / chamber_counts")
    budget = _as_float(_require(_pick(args, spec, "budget"), "--budget / budget"), "budget")
    coeffs = _pick(args, spec, "coeffs", "cost_coeffs")
    raw = _pick(args, spec, "raw_costs")
    if (coeffs is None) == (raw is None):
        raise InvalidSpec("give exactly one of cost coefficients or raw costs")
    counts = [_as_int(b, "chamber count") for b in counts]
    if "dims" in spec and spec["dims"] != len(counts):
        raise InvalidSpec(f"dims is {spec['dims']} but {len(counts)} chamber counts were given")
    if raw is not None:
        grid = rect_grid.GridSpec.from_raw_costs(counts, [_as_float(c, "raw cost") for c in raw], budget)
    else:
        grid = rect_grid.GridSpec(len(counts), tuple(counts), tuple(_as_float(c, "cost coefficient") for c in coeffs), budget)
    return grid, spec


def cmd_rect_solve(args: argparse.Namespace) -> Result:
    grid, _ = _grid_spec(args)
    sol = rect_grid.solve_grid(grid)
    rows = [
        {
            "axis": i + 1,
            "chambers": grid.chamber_counts[i],
            "cost_coeff": grid.cost_coeffs[i],
            "side_length": sol.side_lengths[i],
            "direction_cost": sol.direction_costs[i],
        }
        for i in range(grid.dims)
    ]
    summary = {"hypervolume": sol.hypervolume, "multiplier": sol.multiplier, "budget": grid.budget}
    return Result(rows, summary)


def cmd_rect_witness(args: argparse.Namespace) -> Result:
    grid, spec = _grid_spec(args)
    x1 = _as_float(_require(_pick(args, spec, "x1"), "--x1 / x1"), "x1")
    wit = rect_grid.unbounded_witness(grid, x1)
    rows = [{"axis": i + 1, "side_length": x, "free": i == wit.free_axis} for i, x in enumerate(wit.side_lengths)]
    return Result(rows, {"hypervolume": wit.hypervolume, "cost": wit.cost, "budget": grid.budget})


def _polygon_inputs(args: argparse.Namespace) -> tuple[dict[str, Any], float]:
    spec = load_spec(args.spec, "polygon")
    return spec, _as_float(_pick(args, spec, "budget", default=1.0), "budget")


def cmd_polygon_area(args: argparse.Namespace) -> Result:
    spec, budget = _polygon_inputs(args)
    pens = _as_int(_require(_pick(args, spec, "pens"), "--pens"), "pens")
    sides = _polygon_shape(_require(_pick(args, spec, "sides"), "--sides"))
    sol = polygon_chain.chain_area(polygon_chain.ChainSpec(pens, sides, budget))
    key = "radius" if sides == CIRCLE else "side_length"
    row = {"pens": pens, "shape": shape_name(sides), "perimeter": budget, key: sol.side_length, "area": sol.total_area}
    return Result([row])


def cmd_polygon_best(args: argparse.Namespace) -> Result:
    spec, budget = _polygon_inputs(args)
    pens = _as_int(_require(_pick(args, spec, "pens"), "--pens"), "pens")
    cands = _pick(args, spec, "candidates")
    if cands is None:
        cands = polygon_chain.DEFAULT_CANDIDATES
    elif isinstance(cands, str):
        cands = cands.split(",")
    best = polygon_chain.best_polygon(pens, budget, [_polygon_shape(c) for c in cands])
    rows = [
        {"rank": i + 1, "shape": shape_name(s), "sides": "inf" if s == CIRCLE else s, "area": a}
        for i, (s, a) in enumerate(best.ranking)
    ]
    return Result(rows, {"winner": _polygon_label(best.winner)})


def _k_range(args: argparse.Namespace) -> range:
    if args.k_min < 1 or args.k_max < args.k_min:
        raise InvalidSpec("need 1 <= k-min <= k-max")
    if args.k_max - args.k_min > 10**5:
        raise InvalidSpec("tables are limited to 100000 rows")
    return range(args.k_min, args.k_max + 1)


def cmd_polygon_table(args: argparse.Namespace) -> Result:
    budget = args.budget if args.budget is not None else 1.0
    rows = []
    for k in _k_range(args):
        best = polygon_chain.best_polygon(k, budget)
        row: dict[str, Any] = {"pens": k}
        for s in polygon_chain.DEFAULT_CANDIDATES:
            row["circle" if s == CIRCLE else f"n={s}"] = polygon_chain.area(k, s, budget)
        row["winner"] = shape_name(best.winner)
        rows.append(row)
    return Result(rows)


def _spiral_inputs(args: argparse.Namespace) -> tuple[dict[str, Any], float]:
    spec = load_spec(args.spec, "spiral")
    return spec, _as_float(_pick(args, spec, "budget", default=1.0), "budget")


def _spiral_row(arr: spiral_packing.SpiralArrangement) -> dict[str, Any]:
    return {
        "shape": arr.shape.name.lower(),
        "pens": arr.pens,
        "side_count": arr.side_count,
        "side_length": arr.side_length,
        "area": arr.area,
        "area_lower": arr.area_lower,
        "area_upper": arr.area_upper,
    }


def cmd_spiral_area(args: argparse.Namespace) -> Result:
    spec, budget = _spiral_inputs(args)
    shape = SpiralShape.parse(_require(_pick(args, spec, "shape"), "--shape"))
    pens = _as_int(_require(_pick(args, spec, "pens"), "--pens"), "pens")
    return Result([_spiral_row(spiral_packing.spiral_area(shape, pens, budget))])


def cmd_spiral_compare(args: argparse.Namespace) -> Result:
    spec, budget = _spiral_inputs(args)
    pens = _as_int(_require(_pick(args, spec, "pens"), "--pens"), "pens")
    cmp = spiral_packing.spiral_compare(pens, budget)
    rows = [dict(rank=i + 1, **_spiral_row(spiral_packing.spiral_area(s, pens, budget))) for i, s in enumerate(cmp.ordering)]
    return Result(rows, {"ordering": " > ".join(s.name.lower() for s in cmp.ordering)})


def cmd_spiral_table(args: argparse.Namespace) -> Result:
    budget = args.budget if args.budget is not None else 1.0
    rows = []
    for k in _k_range(args):
        cmp = spiral_packing.spiral_compare(k, budget)
        row: dict[str, Any] = {"pens": k}
        for s in SpiralShape:
            row[f"{s.name.lower()}_sides"] = spiral_packing.spiral_side_count(s, k)
        for s in SpiralShape:
            row[s.name.lower()] = cmp.areas[s]
        row["ordering"] = " > ".join(s.name.lower() for s in cmp.ordering)
        rows.append(row)
    return Result(rows)


def _platonic_inputs(args: argparse.Namespace) -> tuple[dict[str, Any], float]:
    spec = load_spec(args.spec, "platonic")
    return spec, _as_float(_pick(args, spec, "budget", default=1.0), "budget")


def cmd_platonic_volume(args: argparse.Namespace) -> Result:
    spec, budget = _platonic_inputs(args)
    solid = platonic_chain.parse_solid(_require(_pick(args, spec, "faces"), "--faces"))
    pens = _as_int(_require(_pick(args, spec, "pens"), "--pens"), "pens")
    sol = platonic_chain.chain_volume(solid, pens, budget)
    row = {
        "solid": solid_name(solid),
        "pens": pens,
        "surface_area": budget,
        "per_solid_area": sol.per_solid_area,
        "volume": sol.total_volume,
        "q": platonic_chain.q_constant(solid),
    }
    return Result([row])


def _ordering_row(k: int, budget: float) -> dict[str, Any]:
    order = platonic_chain.full_ordering(k, budget)
    row: dict[str, Any] = {"pens": k}
    for i, s in enumerate(order, 1):
        row[f"rank{i}"] = solid_name(s)
    return row


def cmd_platonic_order(args: argparse.Namespace) -> Result:
    spec, budget = _platonic_inputs(args)
    pens = _as_int(_require(_pick(args, spec, "pens"), "--pens"), "pens")
    return Result([_ordering_row(pens, budget)])


def cmd_platonic_table(args: argparse.Namespace) -> Result:
    budget = args.budget if args.budget is not None else 1.0
    return Result([_ordering_row(k, budget) for k in _k_range(args)])


def _comparison(args: argparse.Namespace) -> threshold.RationalVsConstant:
    spec = load_spec(args.spec, "crossover")
    if spec:
        fields = {k: spec[k] for k in ("alpha", "beta", "gamma", "delta", "bound") if k in spec}
        missing = {"alpha", "beta", "gamma", "delta", "bound"} - set(fields)
        if missing:
            raise InvalidSpec(f"crossover spec lacks {', '.join(sorted(missing))}")
        return threshold.RationalVsConstant(
            **{k: _as_float(v, k) for k, v in fields.items()},
            direction=spec.get("direction", "below"),
            tag=str(spec.get("tag", "")),
        )
    family = _require(args.family, "--family")
    if family == "polygon":
        pair = _require(args.sides, "--sides n,m")
        if len(pair) != 2:
            raise InvalidSpec("--sides needs two side counts, e.g. 6,7")
        return threshold.polygon_comparison(*pair)
    if family == "circle":
        sides = _require(args.sides, "--sides n")
        if len(sides) != 1:
            raise InvalidSpec("--sides needs one side count for the circle family")
        return threshold.circle_polygon_comparison(sides[0])
    faces = _require(args.faces, "--faces")
    if family == "platonic":
        if len(faces) != 2:
            raise InvalidSpec("--faces needs two face counts, e.g. 6,8")
        return threshold.solid_comparison(*faces)
    if len(faces) != 1:
        raise InvalidSpec("--faces needs one face count for the sphere family")
    return threshold.sphere_solid_comparison(faces[0])


def cmd_crossover(args: argparse.Namespace) -> Result:
    cmp = _comparison(args)
    spec_kmax = load_spec(args.spec, "crossover").get("k_max") if args.spec else None
    k_max = _as_int(args.k_max if args.k_max is not None else (spec_kmax or 10**4), "k_max")
    rep = threshold.find_threshold(cmp, k_max)
    row = {
        "kind": rep.kind,
        "k0": rep.k0,
        "holds_before": rep.holds_before,
        "k_max": rep.k_max,
        "flip_beyond": rep.flip_beyond,
        "root": rep.root,
        "limit": rep.limit,
        "bound": cmp.bound,
        "marginal_limit": rep.marginal_limit,
        "certified": rep.certified,
        "constant": rep.tag,
    }
    return Result([row])


def _label(value: object) -> str:
    if isinstance(value, Solid):
        return solid_name(value)
    if isinstance(value, SpiralShape):
        return value.name.lower()
    if value in (CIRCLE, SPHERE):
        return str(value)
    return shape_name(value)


def cmd_scan(args: argparse.Namespace) -> Result:
    rep = numeric_oracle.scan_comparisons(args.family, (args.k_min, args.k_max))
    rows = [
        {"k_start": seg.k_start, "k_end": seg.k_end, "ranking": " > ".join(_label(v) for v in seg.value)}
        for seg in rep.rankings
    ]
    flips = "; ".join(f"{_label(f.first)}/{_label(f.second)} at k={f.k}" for f in rep.flips)
    return Result(rows, {"family": rep.family, "flips": flips or "none"})


def cmd_verify(args: argparse.Namespace) -> Result:
    numbers = args.criteria or sorted(verify.CRITERIA)
    unknown = [n for n in numbers if n not in verify.CRITERIA]
    if unknown:
        raise InvalidSpec(f"unknown criteria: {unknown}")
    results = verify.run_criteria(numbers)
    rows = [
        {"criterion": r.number, "title": r.title, "status": "PASS" if r.passed else "FAIL", "seconds": r.seconds, "detail": r.detail}
        for r in results
    ]
    failed = sum(not r.passed for r in results)
    return Result(rows, {"passed": len(results) - failed, "failed": failed})


def cmd_draw(args: argparse.Namespace) -> str:
    pens = args.pens
    if pens is None or pens < 1:
        raise InvalidSpec("--pens must be a positive integer")
    if pens > 2000:
        raise InvalidSpec("drawings are limited to 2000 pens")
    labels = not args.no_labels
    if args.kind == "chain":
        sides = _polygon_shape(_require(args.sides, "--sides"))
        if sides == CIRCLE:
            raise InvalidSpec("circle chains share no walls; draw polygons only")
        polygon_chain.ChainSpec(pens, sides, 1.0)
        return chain_svg(sides, pens, labels=labels)
    return spiral_svg(_require(args.shape, "--shape"), pens, labels=labels)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common.add_argument("--out", help="write to this file instead of standard output")
    common.add_argument("--digits", type=int, default=DEFAULT_DIGITS, help="significant digits (default 12)")
    common.add_argument("--seed", type=int, default=None, help="seed recorded in JSON metadata")

    specfile = _Parser(add_help=False)
    specfile.add_argument("--spec", help="JSON problem spec (\"schema\": 1)")

    pens = _Parser(add_help=False)
    pens.add_argument("--pens", type=int)
    pens.add_argument("--budget", type=float, help="boundary budget: cost, perimeter or surface area")

    krange = _Parser(add_help=False)
    krange.add_argument("--k-min", type=int, default=1)
    krange.add_argument("--k-max", type=int, default=12)
    krange.add_argument("--budget", type=float)

    parser = _Parser(prog="penopt", description="Optimal pen designs under a boundary budget.")
    parser.add_argument("--version", action="version", version=f"penopt {__version__}")
    families = parser.add_subparsers(dest="family_cmd", required=True, parser_class=_Parser)

    def leaf(sub, name: str, func: Callable, parents, help_text: str):
        p = sub.add_parser(name, parents=parents, help=help_text)
        p.set_defaults(func=func)
        return p

    rect = families.add_parser("rect", help="n-dimensional rectangular grids").add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, func, text in (("solve", cmd_rect_solve, "optimal side lengths"), ("witness", cmd_rect_witness, "unbounded configuration for a zero-cost axis")):
        p = leaf(rect, name, func, [common, specfile], text)
        p.add_argument("--counts", type=_int_list, help="chamber counts, e.g. 3,1")
        p.add_argument("--coeffs", type=_float_list, help="normalized direction costs, e.g. 4,2")
        p.add_argument("--raw-costs", type=_float_list, help="raw wall-cost combinations c_i")
        p.add_argument("--budget", type=float)
        if name == "witness":
            p.add_argument("--x1", type=float)

    poly = families.add_parser("polygon", help="chains of regular polygons").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = leaf(poly, "area", cmd_polygon_area, [common, specfile, pens], "area of one chain")
    p.add_argument("--sides", help="side count or 'circle'")
    p = leaf(poly, "best", cmd_polygon_best, [common, specfile, pens], "best shape for k pens")
    p.add_argument("--candidates", help="comma-separated side counts and/or 'circle'")
    leaf(poly, "table", cmd_polygon_table, [common, krange], "areas over a range of k")

    spiral = families.add_parser("spiral", help="spiral packings").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = leaf(spiral, "area", cmd_spiral_area, [common, specfile, pens], "area of one spiral")
    p.add_argument("--shape", help="triangle, square or hexagon")
    leaf(spiral, "compare", cmd_spiral_compare, [common, specfile, pens], "rank the three tilings")
    leaf(spiral, "table", cmd_spiral_table, [common, krange], "side counts and areas over a range of k")

    plat = families.add_parser("platonic", help="chains of platonic solids").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = leaf(plat, "volume", cmd_platonic_volume, [common, specfile, pens], "volume of one chain")
    p.add_argument("--faces", help="4, 6, 8, 12, 20 or 'sphere'")
    leaf(plat, "order", cmd_platonic_order, [common, specfile, pens], "rank the five solids")
    leaf(plat, "table", cmd_platonic_table, [common, krange], "rankings over a range of k")

    p = leaf(families, "crossover", cmd_crossover, [common, specfile], "integer k where an ordering flips")
    p.add_argument("--family", choices=("polygon", "circle", "platonic", "sphere"))
    p.add_argument("--sides", type=_int_list)
    p.add_argument("--faces", type=_int_list)
    p.add_argument("--k-max", type=int)

    p = leaf(families, "scan", cmd_scan, [common], "brute-force ordering scan over k")
    p.add_argument("--family", choices=numeric_oracle.FAMILIES, required=True)
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, default=1000)

    p = leaf(families, "verify", cmd_verify, [common], "run every acceptance check")
    p.add_argument("--criteria", type=_int_list, help="subset to run, e.g. 1,2,9")

    p = families.add_parser("draw", help="SVG picture of a chain or spiral")
    p.set_defaults(func=cmd_draw)
    p.add_argument("kind", choices=("chain", "spiral"))
    p.add_argument("--pens", type=int)
    p.add_argument("--sides", help="side count for chains")
    p.add_argument("--shape", help="triangle, square or hexagon for spirals")
    p.add_argument("--format", choices=("svg",), default="svg")
    p.add_argument("--out")
    p.add_argument("--no-labels", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.func is cmd_draw:
            write_text(cmd_draw(args), args.out)
            return 0
        result = args.func(args)
        metadata = {"tool": "penopt", "version": __version__, "command": ["penopt", *argv]}
        if args.seed is not None:
            metadata["seed"] = args.seed
        if args.digits < 1 or args.digits > 17:
            raise InvalidSpec("--digits must lie in 1..17")
        write_text(render(result, args.format, digits=args.digits, metadata=metadata), args.out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (PenOptError, OSError) as exc:
        print(f"penopt: error: {exc}", file=sys.stderr)
        return 1
    if args.func is cmd_verify and result.summary["failed"]:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
