import math

import pytest
from hypothesis import assume, given, strategies as st

from penopt.errors import InvalidSpec
from penopt.platonic_chain import Solid, volume
from penopt.polygon_chain import CIRCLE, area
from penopt.threshold import (
    RationalVsConstant,
    circle_polygon_comparison,
    find_threshold,
    polygon_comparison,
    solid_comparison,
    sphere_solid_comparison,
)


def test_cube_octahedron_flip():
    rep = find_threshold(solid_comparison(6, 8), 10**4)
    assert rep.kind == "flip" and rep.k0 == 68 and rep.certified
    # cube below octahedron before the flip
    assert rep.holds_before
    assert rep.margins[67] < 0 < rep.margins[68]


def test_dodecahedron_icosahedron_flip():
    rep = find_threshold(solid_comparison(12, 20), 10**4)
    assert (rep.kind, rep.k0, rep.holds_before) == ("flip", 9, True)


@pytest.mark.parametrize("pair", [(4, 6), (8, 12), (6, 12), (8, 20), (6, 20)])
def test_platonic_pairs_without_flip(pair):
    rep = find_threshold(solid_comparison(*pair), 10**4)
    assert rep.kind in ("always_true", "always_false") and rep.flip_beyond is None


def test_triangle_square_always_true():
    rep = find_threshold(polygon_comparison(3, 4), 10**4)
    assert rep.kind == "always_true"


@pytest.mark.parametrize("n, m, k0", [(4, 5, 5), (5, 6, 3), (6, 7, 3), (7, 8, 2)])
def test_adjacent_polygon_flips(n, m, k0):
    rep = find_threshold(polygon_comparison(n, m), 10**4)
    assert rep.kind == "flip" and rep.k0 == k0


def test_circle_versus_triangle_flip():
    rep = find_threshold(circle_polygon_comparison(3), 10**3)
    assert rep.kind == "flip" and rep.k0 == 4 and not rep.holds_before


@pytest.mark.parametrize("solid", list(Solid))
def test_spheres_always_win(solid):
    assert find_threshold(sphere_solid_comparison(solid), 10**4).kind == "always_true"


@pytest.mark.parametrize("n, m", [(n, m) for n in range(3, 9) for m in range(3, 9) if n != m])
def test_certification_against_direct_scan(n, m):
    rep = find_threshold(polygon_comparison(n, m), 200)
    for k in range(1, 201):
        expected = rep.holds_before if rep.kind != "flip" or k < rep.k0 else not rep.holds_before
        assert (area(k, n) < area(k, m)) == expected


@pytest.mark.parametrize("n", range(3, 12))
def test_circle_predicate_matches_areas(n):
    cmp = circle_polygon_comparison(n)
    for k in range(1, 300):
        assert cmp.holds(k) == (area(k, CIRCLE) < area(k, n))


@pytest.mark.parametrize("solid", list(Solid))
def test_sphere_predicate_matches_volumes(solid):
    cmp = sphere_solid_comparison(solid)
    for k in range(1, 300):
        assert cmp.holds(k) == (volume(solid, k) < volume("sphere", k))


@given(
    st.floats(-50, 50),
    st.floats(-50, 50),
    st.floats(0, 50),
    st.floats(0.1, 50),
    st.floats(0.05, 20),
    st.sampled_from(["below", "above"]),
)
def test_report_agrees_with_brute_force(alpha, beta, gamma, delta, bound, direction):
    cmp = RationalVsConstant(alpha, beta, gamma, delta, bound, direction)
    rep = find_threshold(cmp, 400)
    # skip cases where floating rounding decides a near-tie
    assume(all(abs(cmp.ratio(k) - bound) > 1e-9 * bound for k in range(1, 401)))
    truth = [cmp.holds(k) for k in range(1, 401)]
    if rep.kind == "flip":
        assert truth[: rep.k0 - 1] == [rep.holds_before] * (rep.k0 - 1)
        assert truth[rep.k0 - 1 :] == [not rep.holds_before] * (401 - rep.k0)
    else:
        assert truth == [rep.kind == "always_true"] * 400
        if rep.flip_beyond is not None:
            assert rep.flip_beyond > 400 and cmp.holds(rep.flip_beyond) != rep.holds_before


@given(st.floats(0.5, 50), st.floats(-10, 10), st.floats(0.5, 50), st.floats(0.5, 10))
def test_limit_consistency(alpha, beta, gamma, delta):
    cmp = RationalVsConstant(alpha, beta, gamma, delta, 1.0)
    assert cmp.limit == pytest.approx(alpha / gamma)
    assert cmp.ratio(1e12) == pytest.approx(cmp.limit, rel=1e-6, abs=1e-6)
    root = cmp.root()
    if root is not None:
        assert cmp.ratio(root) == pytest.approx(1.0, rel=1e-6, abs=1e-9)


def test_marginal_limit_flagged():
    cmp = RationalVsConstant(2.0, 1.0, 1.0, 1.0, 2.0)
    rep = find_threshold(cmp, 100)
    # (2k+1)/(k+1) approaches 2 from below
    assert rep.marginal_limit and rep.kind == "always_true"


def test_flip_past_horizon():
    # r(k) = (k + 0)/(0 k + 1000) crosses 1 at k = 1000
    rep = find_threshold(RationalVsConstant(1, 0, 0, 1000, 1.0, "above"), 500)
    assert rep.kind == "always_false" and rep.flip_beyond == 1001


@pytest.mark.parametrize(
    "args",
    [
        dict(alpha=1, beta=1, gamma=1, delta=1, bound=0),
        dict(alpha=math.inf, beta=1, gamma=1, delta=1, bound=1),
        dict(alpha=1, beta=1, gamma=-1, delta=1, bound=1),
        dict(alpha=1, beta=1, gamma=0, delta=0, bound=1),
        dict(alpha=1, beta=1, gamma=1, delta=1, bound=1, direction="sideways"),
    ],
)
def test_invalid_comparisons(args):
    with pytest.raises(InvalidSpec):
        RationalVsConstant(**args)


def test_invalid_horizon_and_factories():
    with pytest.raises(InvalidSpec):
        find_threshold(polygon_comparison(3, 4), 0)
    with pytest.raises(InvalidSpec):
        polygon_comparison(4, 4)
    with pytest.raises(InvalidSpec):
        solid_comparison(6, "sphere")
