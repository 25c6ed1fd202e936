import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from xxcomb.exact import (TruncatedSeries, barnes_g, bessel_i_series, binomial, close, compositions,
                          det_exact, det_ring, extract_dk, lacunary_binomial, multinomial, series_det)


def test_binomial_examples():
    assert binomial(14, 7) == 3432
    assert binomial(5, 0) == 1
    assert binomial(4, 7) == 0
    assert binomial(4, -1) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


@given(st.integers(0, 60), st.integers(0, 60))
def test_binomial_symmetry(n, k):
    k = k % (n + 1)
    assert binomial(n, k) == binomial(n, n - k)


def test_lacunary_examples():
    assert lacunary_binomial(14, 1, 3) == 5462
    assert lacunary_binomial(15, 0, 3) == 10922
    assert lacunary_binomial(4, 0, 10) == 1
    with pytest.raises(ValueError):
        lacunary_binomial(4, 0, 0)


@given(st.integers(0, 40), st.integers(1, 9))
def test_lacunary_residues_cover_all(K, R):
    assert sum(lacunary_binomial(K, L, R) for L in range(R)) == 2**K


def test_lacunary_against_direct_loop():
    # independent: sweep k and bucket by residue
    for K in range(12):
        for R in range(1, 6):
            buckets = [0] * R
            for k in range(K + 1):
                buckets[k % R] += math.comb(K, k)
            assert [lacunary_binomial(K, L, R) for L in range(R)] == buckets


def test_multinomial():
    assert multinomial((1, 1)) == 2
    assert multinomial((2, 0)) == 1
    assert multinomial((1, 2, 3)) == 60
    assert multinomial(()) == 1


def test_compositions_count_and_order():
    comps = list(compositions(3, 3))
    assert len(comps) == math.comb(5, 2)
    assert len(set(comps)) == len(comps)
    assert all(sum(c) == 3 for c in comps)
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(2, 0)) == []


def test_bessel_series_examples():
    assert bessel_i_series(0, 2) == TruncatedSeries([1, 0, Fraction(1, 4)])
    assert bessel_i_series(1, 1) == TruncatedSeries([0, Fraction(1, 2)])
    assert bessel_i_series(2, 3) == TruncatedSeries([0, 0, Fraction(1, 8), 0])


def test_bessel_series_matches_scipy():
    from scipy.special import iv

    for nu in range(4):
        s = bessel_i_series(nu, 30)
        for beta in (0.1, 0.7, 1.5):
            val = sum(float(c) * beta**k for k, c in enumerate(s.coeffs))
            assert abs(val - iv(nu, beta)) < 1e-13


def test_series_arithmetic():
    a = TruncatedSeries([1, 2, 3])
    b = TruncatedSeries([0, 1, 1])
    assert (a * b).coeffs == (0, 1, 3)  # truncated at order 2
    assert (a - a) == TruncatedSeries([0, 0, 0])
    assert (2 * a)[2] == 6
    with pytest.raises(ValueError):
        a + TruncatedSeries([1, 2])
    with pytest.raises(IndexError):
        a[3]


def test_series_det_examples():
    i0 = bessel_i_series(0, 2)
    i1 = bessel_i_series(1, 2)
    assert series_det([[i0]]) == i0
    one = TruncatedSeries.constant(1, 2)
    zero = TruncatedSeries.constant(0, 2)
    eye = [[one if i == j else zero for j in range(3)] for i in range(3)]
    assert series_det(eye) == one
    assert series_det([[i0, i1], [i1, i0]]) == TruncatedSeries([1, 0, Fraction(1, 4)])
    with pytest.raises(ValueError):
        series_det([[i0, i1]])
    with pytest.raises(ValueError):
        series_det([[i0, bessel_i_series(0, 3)], [i1, i0]])


def test_series_det_triangular():
    a, b, c = (TruncatedSeries([1, k, k * k, 1]) for k in (1, 2, 3))
    z = TruncatedSeries.constant(0, 3)
    x = TruncatedSeries([5, 1, 0, 2])
    assert series_det([[a, x, x], [z, b, x], [z, z, c]]) == a * b * c


def test_extract_dk():
    assert extract_dk(bessel_i_series(0, 2), 2) == 2
    assert extract_dk(TruncatedSeries([7, 1]), 0) == 7
    assert extract_dk(bessel_i_series(1, 3), 1) == 1
    with pytest.raises(ValueError):
        extract_dk(bessel_i_series(0, 2), 3)


@given(st.integers(0, 12), st.integers(-12, 12))
def test_extract_dk_is_binomial(K, d):
    expect = math.comb(K, (K - abs(d)) // 2) if (K - abs(d)) % 2 == 0 and abs(d) <= K else 0
    assert extract_dk(bessel_i_series(abs(d), K), K) == expect


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=4, max_size=4))
def test_det_routes_agree(rows):
    import numpy as np

    d1 = det_exact(rows)
    d2 = det_ring(rows)
    assert d1 == d2
    assert abs(float(d1) - np.linalg.det(np.array(rows, dtype=float))) < 1e-6 * max(1, abs(d1))


def test_close_and_barnes():
    assert close(1 + 1e-12j, 1)
    assert not close(1.0, 1.1)
    assert barnes_g(4) == 2
    assert barnes_g(1) == 1
    assert barnes_g(6) == 1 * 1 * 2 * 6 * 24
