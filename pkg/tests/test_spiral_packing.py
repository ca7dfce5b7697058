import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from penopt.errors import InvalidSpec
from penopt.polygon_chain import area as chain_area_value
from penopt.spiral_packing import (
    SpiralShape,
    hexagon_square_bound_ratio,
    spiral_area,
    spiral_areas,
    spiral_compare,
    spiral_side_count,
    spiral_side_counts,
    square_triangle_bound_ratio,
)

T, S, H = SpiralShape.TRIANGLE, SpiralShape.SQUARE, SpiralShape.HEXAGON
R3 = math.sqrt(3)


def brute_ceil_sqrt(m):
    r = 0
    while r * r < m:
        r += 1
    return r


def brute_count(shape, k):
    if shape is T:
        # smallest integer >= (k + sqrt(6k)) / 2, added to k
        m = 0
        while (2 * m - k) < 0 or (2 * m - k) ** 2 < 6 * k:
            m += 1
        return k + m
    if shape is S:
        return 2 * k + brute_ceil_sqrt(4 * k)
    return 3 * k + brute_ceil_sqrt(12 * k - 3)


@pytest.mark.parametrize(
    "shape, k, expected",
    [
        (S, 3, 3 / 100),
        (S, 4, 1 / 36),
        (S, 5, 1 / 45),
        (S, 6, 6 / 289),
        (H, 3, 9 * R3 / 450),
        (H, 4, 6 * R3 / 361),
        (H, 5, 15 * R3 / 1058),
        (H, 6, R3 / 81),
    ],
)
@pytest.mark.parametrize("p", [1.0, 2.5])
def test_exact_values(shape, k, expected, p):
    assert spiral_area(shape, k, p).area == pytest.approx(expected * p * p, rel=1e-12)


@pytest.mark.parametrize(
    "shape, k, sides",
    [(T, 1, 3), (T, 2, 5), (T, 4, 9), (T, 6, 12), (S, 1, 4), (S, 4, 12), (S, 6, 17), (H, 1, 6), (H, 4, 19), (H, 6, 27)],
)
def test_side_counts(shape, k, sides):
    assert spiral_side_count(shape, k) == sides


@pytest.mark.parametrize("shape", list(SpiralShape))
def test_counts_match_brute_force(shape):
    assert all(spiral_side_count(shape, k) == brute_count(shape, k) for k in range(1, 3000))


@pytest.mark.parametrize("shape", list(SpiralShape))
def test_vectorized_counts_match_scalar(shape):
    ks = np.concatenate([np.arange(1, 5000), np.array([10**6, 10**9, 10**12, 2**40 + 7])])
    vec = spiral_side_counts(shape, ks)
    assert all(int(v) == spiral_side_count(shape, int(k)) for k, v in zip(ks, vec))


@given(st.integers(1, 10**15), st.sampled_from(list(SpiralShape)))
def test_counts_exact_for_huge_k(k, shape):
    n = spiral_side_count(shape, k)
    assert int(spiral_side_counts(shape, np.array([k]))[0]) == n
    if shape is S:
        r = n - 2 * k
        assert (r - 1) ** 2 < 4 * k <= r * r


@pytest.mark.parametrize("shape", list(SpiralShape))
def test_one_and_two_pens_coincide_with_chains(shape):
    for k in (1, 2):
        assert spiral_area(shape, k).area == pytest.approx(chain_area_value(k, int(shape)), rel=1e-13)


@pytest.mark.parametrize("shape", list(SpiralShape))
def test_bounds_sandwich_exact_area(shape):
    for k in list(range(1, 2000)) + [10**4, 10**5]:
        arr = spiral_area(shape, k)
        assert arr.area_lower <= arr.area * (1 + 1e-12)
        assert arr.area <= arr.area_upper * (1 + 1e-12)


@given(st.integers(1, 10**5), st.sampled_from(list(SpiralShape)), st.floats(0.01, 100.0))
def test_vectorized_areas_and_perimeter_scaling(k, shape, p):
    scalar = spiral_area(shape, k, p)
    assert spiral_areas(shape, np.array([k]), p)[0] == pytest.approx(scalar.area, rel=1e-13)
    assert scalar.area == pytest.approx(p * p * spiral_area(shape, k).area, rel=1e-12)
    assert scalar.side_length * scalar.side_count == pytest.approx(p, rel=1e-13)


def test_hexagon_square_triangle_order():
    ks = np.arange(1, 10**6 + 1)
    t, s, h = (spiral_areas(shape, ks) for shape in (T, S, H))
    assert np.all(h > s) and np.all(s > t)


@given(st.integers(1, 10**7))
def test_compare_ordering(k):
    assert spiral_compare(k).ordering == (H, S, T)


def test_bound_ratios_settle_below_their_thresholds():
    # beyond a handful of pens the ceiling-free bounds alone decide each comparison
    st_first = next(k for k in range(1, 100) if square_triangle_bound_ratio(k) < 3**-0.25)
    hs_first = next(k for k in range(1, 100) if hexagon_square_bound_ratio(k) < 108**0.25)
    assert all(square_triangle_bound_ratio(k) < 3**-0.25 for k in range(st_first, 10**5))
    assert all(hexagon_square_bound_ratio(k) < 108**0.25 for k in range(hs_first, 10**5))
    assert square_triangle_bound_ratio(1e12) == pytest.approx(2 / 3, rel=1e-5)
    assert hexagon_square_bound_ratio(1e12) == pytest.approx(3, rel=1e-5)


@pytest.mark.parametrize("value", ["triangle", "SQUARE", " Hexagon ", "6", 4, SpiralShape.HEXAGON])
def test_parse_accepts_names_and_digits(value):
    assert isinstance(SpiralShape.parse(value), SpiralShape)


@pytest.mark.parametrize("bad", ["pentagon", 5, None])
def test_parse_rejects_other_shapes(bad):
    with pytest.raises(InvalidSpec):
        SpiralShape.parse(bad)


def test_invalid_inputs():
    with pytest.raises(InvalidSpec):
        spiral_side_count(T, 0)
    with pytest.raises(InvalidSpec):
        spiral_area(S, 3, perimeter=0.0)
    with pytest.raises(InvalidSpec):
        spiral_side_counts(H, np.array([1, 0]))


@pytest.mark.parametrize("shape, last", [(T, 5), (S, 3), (H, 2)])
def test_spiral_equals_chain_exactly_up_to(shape, last):
    n = int(shape)
    same = [k for k in range(1, 200) if spiral_side_count(shape, k) == k * (n - 1) + 1]
    assert same == list(range(1, last + 1))
