import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from xxcomb.partitions import (PinnedSpec, PlanePartition, diag_trace, enumerate_partitions,
                               enumerate_pinned, enumerate_plane_partitions, enumerate_ssyt,
                               enumerate_strict, from_nonstrict, gt_to_ssyt, pp_to_watermelon,
                               ssyt_to_gt, staircase, to_nonstrict, watermelon_to_pp)
from xxcomb.symfun import schur_ones


def test_staircase():
    assert staircase(3) == (3, 2, 1)
    assert staircase(1) == (1,)
    assert sum(staircase(6)) == 21


def test_nonstrict_examples():
    assert to_nonstrict((11, 9, 6, 3, 2, 1)) == (5, 4, 2, 0, 0, 0)
    assert to_nonstrict(staircase(4)) == (0, 0, 0, 0)
    assert from_nonstrict((1, 0)) == (3, 1)
    with pytest.raises(ValueError):
        to_nonstrict((2, 2))
    with pytest.raises(ValueError):
        from_nonstrict((0, 1))


@given(st.lists(st.integers(0, 9), min_size=1, max_size=6))
def test_round_trip(parts):
    lam = tuple(sorted(parts, reverse=True))
    mu = from_nonstrict(lam)
    assert to_nonstrict(mu) == lam
    N = len(lam)
    assert sum(mu) == sum(lam) + N * (N + 1) // 2


def test_enumerate_partitions():
    assert list(enumerate_partitions(1, 2)) == [(0,), (1,), (2,)]
    assert list(enumerate_partitions(2, 1)) == [(0, 0), (1, 0), (1, 1)]
    assert len(list(enumerate_partitions(2, 2))) == 6
    for N in range(1, 5):
        for cap in range(5):
            assert len(list(enumerate_partitions(N, cap))) == math.comb(N + cap, N)


def test_enumeration_is_colex():
    parts = list(enumerate_partitions(3, 3))
    keys = [p[::-1] for p in parts]
    assert keys == sorted(keys)


def test_enumerate_pinned():
    assert list(enumerate_pinned(PinnedSpec((1,)), 2, 3)) == [(2, 1), (3, 1)]
    assert list(enumerate_pinned((3, 1), 2, 3)) == [(3, 1)]
    assert list(enumerate_pinned((), 1, 2)) == [(1,), (2,)]
    with pytest.raises(ValueError):
        list(enumerate_pinned((3, 2, 1), 2, 4))
    assert PinnedSpec((4, 1)).positions((5, 4, 1)) == (2, 3)


def test_enumerate_strict_matches_filter():
    from itertools import product

    brute = sorted({tuple(sorted(t, reverse=True)) for t in product(range(1, 6), repeat=3) if len(set(t)) == 3})
    assert sorted(enumerate_strict(3, 5)) == brute


def test_plane_partition_validation():
    with pytest.raises(ValueError):
        PlanePartition(((0, 1), (0, 0)), 2)
    with pytest.raises(ValueError):
        PlanePartition(((3, 0), (0, 0)), 2)
    pp = PlanePartition(((2, 1), (1, 0)), 2)
    assert json.loads(pp.to_json()) == [[2, 1], [1, 0]]
    assert pp.volume == 4


def test_diag_trace():
    pp = PlanePartition(((0, 0), (0, 0)), 3)
    assert all(diag_trace(pp, s) == 0 for s in range(1, 4))
    one = PlanePartition(((4,),), 5)
    assert diag_trace(one, 1) == 4
    pp = PlanePartition(((3, 2), (1, 0)), 3)
    assert diag_trace(pp, 1) == 1 and diag_trace(pp, 2) == 3 and diag_trace(pp, 3) == 2
    with pytest.raises(ValueError):
        diag_trace(pp, 4)


def test_plane_partition_counts():
    assert len(list(enumerate_plane_partitions(1, 2))) == 3
    assert len(list(enumerate_plane_partitions(2, 1))) == 6
    assert len(list(enumerate_plane_partitions(2, 2))) == 20
    assert len(list(enumerate_plane_partitions(3, 1))) == 20


def test_traces_sum_to_volume():
    for pp in enumerate_plane_partitions(3, 2):
        assert sum(diag_trace(pp, s) for s in range(1, 6)) == pp.volume


def test_ssyt_gt_round_trip():
    for shape in [(2, 1, 0), (3, 3, 1), (1, 0, 0), (0, 0, 0)]:
        tabs = list(enumerate_ssyt(shape, 3))
        assert len(tabs) == schur_ones(shape)
        for t in tabs:
            assert gt_to_ssyt(ssyt_to_gt(t, 3)) == t


def test_watermelon_zero():
    z = ((), (), ())
    pp = watermelon_to_pp((0, 0, 0), z, z, 2)
    assert pp.heights == ((0,) * 3,) * 3


def test_watermelon_figure_shape():
    lam = (5, 4, 2, 0, 0, 0)
    upper = next(iter(enumerate_ssyt(lam, 6)))
    lower = list(enumerate_ssyt(lam, 6))[7]
    pp = watermelon_to_pp(lam, upper, lower, 6)
    assert diag_trace(pp, 6) == 11
    assert all(pp.heights[i][j] == 0 for i in range(3, 6) for j in range(3, 6))
    assert pp_to_watermelon(pp) == (lam, upper, lower)


def test_watermelon_rejects_bad_filling():
    with pytest.raises(ValueError):
        watermelon_to_pp((1, 0), ((2,), ()), ((3,), ()), 2)
    with pytest.raises(ValueError):
        watermelon_to_pp((3, 0), ((1, 1, 1), ()), ((1, 1, 1), ()), 2)


@settings(max_examples=60)
@given(st.integers(1, 3), st.integers(0, 3), st.data())
def test_pp_round_trip(N, box, data):
    pps = list(enumerate_plane_partitions(N, box))
    pp = data.draw(st.sampled_from(pps))
    lam, up, lo = pp_to_watermelon(pp)
    assert watermelon_to_pp(lam, up, lo, box) == pp
    assert diag_trace(pp, N) == sum(lam)


def test_bijection_counts_per_diagonal():
    for N in (1, 2, 3):
        for box in range(4):
            per = {}
            for pp in enumerate_plane_partitions(N, box):
                per[pp.diagonal()] = per.get(pp.diagonal(), 0) + 1
            for lam in enumerate_partitions(N, box):
                assert per.get(lam, 0) == schur_ones(lam) ** 2
