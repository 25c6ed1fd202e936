import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from xxcomb.exact import GuardError
from xxcomb.partitions import enumerate_partitions, enumerate_ssyt
from xxcomb.symfun import (DegeneratePointsError, cauchy_binet, cauchy_binet_sum, h_sum,
                           pieri_sum_check, principal_points, principal_spec, q_hook_content,
                           schur_bialternant, schur_ones, schur_paths, vandermonde)


def tableau_oracle(lam, x):
    """Sum over explicitly enumerated semistandard tableaux of prod x_entry."""
    tot = 0
    for t in enumerate_ssyt(lam, len(x)):
        term = 1
        for row in t:
            for v in row:
                term *= x[v - 1]
        tot += term
    return tot


def rand_points(rng, N):
    pts = set()
    while len(pts) < N:
        v = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        if v:
            pts.add(v)
    return list(pts)


def test_bialternant_examples():
    assert schur_bialternant((1, 0), [2, 3]) == 5
    assert schur_bialternant((0, 0, 0), [2, 5, 7]) == 1
    assert schur_bialternant((2, 1), [1, 2]) == 6
    assert schur_paths((2, 1), [1, 2]) == 6
    with pytest.raises(DegeneratePointsError):
        schur_bialternant((1, 0), [1, 1])


def test_paths_examples():
    assert schur_paths((1, 0), [1, 1]) == 2
    assert schur_paths((1, 1), [2, 3]) == 6
    lam = (5, 4, 2, 0, 0, 0)
    assert schur_paths(lam, [1] * 6) == schur_ones(lam)


def test_paths_guard():
    with pytest.raises(GuardError):
        schur_paths((0,) * 9, [1] * 9)
    with pytest.raises(GuardError):
        schur_paths((13,), [1])
    assert schur_paths((13,), [1], limits={"box": 20}) == 1


def test_schur_ones_examples():
    assert schur_ones((1, 0)) == 2
    assert schur_ones((0, 0, 0)) == 1
    assert schur_ones((2, 1, 0)) == 8


def test_routes_agree_random_rational():
    rng = random.Random(3)
    for _ in range(40):
        N = rng.randint(1, 4)
        lam = tuple(sorted((rng.randint(0, 4) for _ in range(N)), reverse=True))
        x = rand_points(rng, N)
        assert schur_bialternant(lam, x) == schur_paths(lam, x) == tableau_oracle(lam, x)


def test_ones_equals_paths_small_boxes():
    for N in range(1, 5):
        for lam in enumerate_partitions(N, 3):
            assert schur_ones(lam) == schur_paths(lam, [1] * N)


@settings(max_examples=40)
@given(st.lists(st.integers(-4, 4), min_size=3, max_size=3), st.permutations(range(3)))
def test_paths_symmetric(xs, perm):
    lam = (2, 1, 0)
    assert schur_paths(lam, xs) == schur_paths(lam, [xs[p] for p in perm])


def test_vandermonde_sign():
    # matches det(x_j^{N-k}) with rows j
    x = [2, 5, 11]
    import numpy as np

    det = np.linalg.det(np.array([[xj ** (2 - k) for k in range(3)] for xj in x], dtype=float))
    assert abs(det - vandermonde(x)) < 1e-9


def test_pieri_examples():
    assert pieri_sum_check((0, 0), [2, 3])
    rng = random.Random(1)
    assert pieri_sum_check((1, 0), rand_points(rng, 2))
    for lam in enumerate_partitions(3, 3):
        for _ in range(3):
            assert pieri_sum_check(lam, rand_points(rng, 3))


def test_pieri_needs_box_for_lowering():
    with pytest.raises(ValueError):
        pieri_sum_check((1, 0), [2, 3], lowering=True)


def bethe_pts(M, I):
    import cmath

    N = len(I)
    return [cmath.exp(2j * math.pi / M * (i - (N + 1) / 2)) for i in I]


def test_pieri_bethe_wrap():
    from itertools import combinations

    for M, N in ((4, 2), (6, 3), (6, 2), (5 + 1, 1), (8, 3)):
        box = M - N
        for I in list(combinations(range(M, 0, -1), N))[:6]:
            x = bethe_pts(M, I)
            for lam in enumerate_partitions(N, box):
                assert pieri_sum_check(lam, x, bethe_box=box)
                assert pieri_sum_check(lam, x, bethe_box=box, lowering=True)


def test_pieri_wrap_fails_without_shift():
    # the unshifted wrap target (lam_2, ..., lam_N, 0) does not reproduce the top case
    x = bethe_pts(6, (5, 3, 2))
    lam = (3, 2, 1)
    naive = schur_bialternant((2, 1, 0), x)
    shifted = schur_bialternant((1, 0, 0), x)
    direct = sum(x) * schur_bialternant(lam, x) - schur_bialternant((3, 3, 1), x) - schur_bialternant((3, 2, 2), x)
    assert abs(direct - shifted) < 1e-9
    assert abs(direct - naive) > 1e-3


def test_h_sum():
    assert h_sum(3, 1) == 3
    assert h_sum(0, 5) == 0
    assert h_sum(4, Fraction(1, 2)) == Fraction(15, 8)


def test_cauchy_binet_examples():
    assert cauchy_binet(1, 2, [1], [1]) == 3
    assert cauchy_binet(2, 1, [1, 1], [1, 1]) == 6
    rng = random.Random(9)
    for N in (1, 2, 3):
        for L in range(5):
            x, y = rand_points(rng, N), rand_points(rng, N)
            assert cauchy_binet(N, L, x, y, check=False) == cauchy_binet_sum(N, L, x, y)


def test_cauchy_binet_float_points():
    x = [0.3 + 0.1j, -0.7, 1.2j]
    y = [0.5, 0.25j, -1.1]
    v = cauchy_binet(3, 2, x, y)
    assert abs(v - cauchy_binet_sum(3, 2, x, y)) < 1e-9


def test_principal_spec():
    assert principal_spec((1, 0), 2) == 6
    for lam in [(2, 1, 0), (3, 3, 1)]:
        assert principal_spec(lam, 1) == schur_ones(lam)
    q = Fraction(2, 3)
    base = principal_spec((1, 1), q)
    assert schur_bialternant((1, 1), [3 * p for p in principal_points(2, q)]) == 9 * base


def test_principal_spec_closed_product():
    for lam in [(2, 1, 0), (3, 1, 1), (4, 2, 0, 0)]:
        for q in (Fraction(1, 2), Fraction(-3, 5), Fraction(7, 2)):
            assert principal_spec(lam, q, "unit") == q_hook_content(lam, q)


def test_principal_spec_root_of_unity_uses_paths():
    # q = -1 makes (1, q, q^2) degenerate
    lam = (2, 1, 0)
    assert principal_spec(lam, -1, "unit") == tableau_oracle(lam, [1, -1, 1])
