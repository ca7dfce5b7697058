import math

import mpmath as mp
import pytest
from hypothesis import given, strategies as st

from oracles import CUBE_MINUS_OCTA, DODECA_MINUS_ICOSA, Q, Q_SPHERE, V2_TETRA
from penopt.errors import InvalidSpec
from penopt.platonic_chain import (
    SPHERE,
    Solid,
    chain_volume,
    full_ordering,
    pairwise_order,
    parse_solid,
    q_constant,
    solid_name,
    sphere_comparison,
    volume,
)

TET, CUBE, OCTA, DODECA, ICOSA = Solid

EARLY = (ICOSA, DODECA, OCTA, CUBE, TET)
MIDDLE = (DODECA, ICOSA, OCTA, CUBE, TET)
LATE = (DODECA, ICOSA, CUBE, OCTA, TET)


@pytest.mark.parametrize("solid", list(Solid))
def test_q_constants_frozen(solid):
    assert q_constant(solid) == pytest.approx(Q[int(solid)], rel=1e-14)


def test_sphere_constant():
    assert q_constant(SPHERE) == pytest.approx(Q_SPHERE, rel=1e-15)
    assert all(q_constant(s) > Q_SPHERE for s in Solid)


def test_two_tetrahedra():
    expected = 8 / (21 * math.sqrt(42 * math.sqrt(3)))
    assert volume(TET, 2) == pytest.approx(expected, rel=1e-13)
    assert volume(TET, 2) == pytest.approx(V2_TETRA, rel=1e-13)


@given(st.integers(1, 10**4), st.sampled_from(list(Solid)), st.floats(0.01, 1e3))
def test_volume_matches_mpmath(k, solid, area):
    mp.mp.dps = 30
    f = int(solid)
    a = mp.mpf(area) * f / (k * (f - 1) + 1)
    ref = k * a ** mp.mpf(1.5) / mp.mpf(Q[f])
    assert volume(solid, k, area) == pytest.approx(float(ref), rel=1e-12)


@given(st.integers(1, 10**4), st.sampled_from(list(Solid) + [SPHERE]), st.floats(0.01, 1e3))
def test_chain_spends_whole_surface(k, solid, area):
    sol = chain_volume(solid, k, area)
    assert sol.surface_check == pytest.approx(area, rel=1e-12)
    assert sol.total_volume == pytest.approx(area**1.5 * volume(solid, k), rel=1e-12)


@pytest.mark.parametrize(
    "k, expected",
    [(1, EARLY), (8, EARLY), (9, MIDDLE), (67, MIDDLE), (68, LATE), (1000, LATE)],
)
def test_ordering_table(k, expected):
    assert full_ordering(k) == expected


def test_ordering_regimes_everywhere():
    for k in range(1, 2001):
        expected = EARLY if k <= 8 else MIDDLE if k <= 67 else LATE
        assert full_ordering(k) == expected, k


@pytest.mark.parametrize("k, diff", sorted(CUBE_MINUS_OCTA.items()))
def test_cube_octahedron_margin(k, diff):
    assert volume(CUBE, k) - volume(OCTA, k) == pytest.approx(diff, rel=1e-6)
    assert pairwise_order(CUBE, OCTA, k).winner == (CUBE if diff > 0 else OCTA)


@pytest.mark.parametrize("k, diff", sorted(DODECA_MINUS_ICOSA.items()))
def test_dodecahedron_icosahedron_margin(k, diff):
    assert volume(DODECA, k) - volume(ICOSA, k) == pytest.approx(diff, rel=1e-8)
    assert pairwise_order(DODECA, ICOSA, k).winner == (DODECA if diff > 0 else ICOSA)


@given(st.integers(1, 10**5), st.sampled_from(list(Solid)), st.sampled_from(list(Solid)))
def test_pairwise_inequality_matches_direct(k, f, g):
    if f == g:
        return
    res = pairwise_order(f, g, k)
    assert res.first_smaller == (volume(f, k) < volume(g, k))
    assert math.copysign(1, res.margin) == (-1 if res.first_smaller else 1)


def test_spheres_win():
    for k in range(1, 10**4 + 1, 7):
        assert all(sphere_comparison(s, k) == SPHERE for s in Solid)


@pytest.mark.parametrize("value, expected", [("cube", CUBE), ("12", DODECA), (20, ICOSA), ("Sphere", SPHERE)])
def test_parse_solid(value, expected):
    assert parse_solid(value) == expected


@pytest.mark.parametrize("bad", [5, "prism", True, 0])
def test_parse_solid_rejects(bad):
    with pytest.raises(InvalidSpec):
        parse_solid(bad)


def test_invalid_calls():
    with pytest.raises(InvalidSpec):
        chain_volume(CUBE, 0, 1.0)
    with pytest.raises(InvalidSpec):
        chain_volume(CUBE, 2, -1.0)
    with pytest.raises(InvalidSpec):
        pairwise_order(CUBE, CUBE, 3)
    with pytest.raises(InvalidSpec):
        pairwise_order(CUBE, SPHERE, 3)
    with pytest.raises(InvalidSpec):
        sphere_comparison(SPHERE, 3)


def test_names():
    assert [solid_name(s) for s in full_ordering(100)] == [
        "dodecahedron",
        "icosahedron",
        "cube",
        "octahedron",
        "tetrahedron",
    ]
