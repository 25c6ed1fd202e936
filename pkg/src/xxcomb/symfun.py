"""Schur polynomials by two independent routes, plus Cauchy-Binet and Pieri checks."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .exact import GuardError, det_exact, is_exact
from .partitions import enumerate_partitions, is_weak

PATH_LIMITS = {"N": 8, "box": 12}


class DegeneratePointsError(ValueError):
    """Coincident evaluation points; use schur_paths or schur_ones instead."""


def _det(rows):
    flat = [v for r in rows for v in r]
    if is_exact(flat):
        return det_exact(rows)
    if not rows:
        return 1.0
    return complex(np.linalg.det(np.array(rows, dtype=complex)))


def _simplify(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    if isinstance(v, complex) and v.imag == 0:
        return v.real
    return v


def vandermonde(x: Sequence):
    """prod_{m<l} (x_m - x_l), i.e. det(x_j^{N-k})."""
    out = 1
    for m in range(len(x)):
        for l in range(m + 1, len(x)):
            out = out * (x[m] - x[l])
    return out


def _check_lambda(lam, N):
    lam = tuple(lam)
    if len(lam) != N:
        raise ValueError(f"partition {lam} has {len(lam)} parts, expected {N}")
    if not is_weak(lam):
        raise ValueError(f"not a partition: {lam}")
    return lam


def bialternant_numerator(exponents: Sequence[int], x: Sequence):
    """det(x_j^{e_k})."""
    return _det([[xj**e for e in exponents] for xj in x])


def schur_bialternant(lam: Sequence[int], x: Sequence, tol: float = 1e-12):
    N = len(x)
    lam = _check_lambda(lam, N)
    exact = is_exact(x)
    for m in range(N):
        for l in range(m + 1, N):
            gap = x[m] - x[l]
            if (gap == 0) if exact else (abs(gap) <= tol):
                raise DegeneratePointsError(
                    f"points {m + 1} and {l + 1} coincide; use schur_paths or schur_ones")
    num = bialternant_numerator([lam[k] + N - 1 - k for k in range(N)], x)
    den = vandermonde(list(x))
    if exact:
        return _simplify(Fraction(num) / Fraction(den))
    return num / den


def schur_paths(lam: Sequence[int], x: Sequence, limits: dict | None = None):
    """Branching-rule sum over interlacing chains (semistandard tableaux); any points."""
    lim = dict(PATH_LIMITS, **(limits or {}))
    N = len(x)
    lam = _check_lambda(lam, N)
    if N > lim["N"]:
        raise GuardError(f"schur_paths: N={N} exceeds limit N<={lim['N']}")
    if lam and lam[0] > lim["box"]:
        raise GuardError(f"schur_paths: part {lam[0]} exceeds limit box<={lim['box']}")
    x = list(x)

    @lru_cache(maxsize=None)
    def s(top):
        n = len(top)
        if n == 0:
            return 1
        if n == 1:
            return x[0] ** top[0]
        total = 0
        xn = x[n - 1]
        size = sum(top)
        for mu in _interlacing(top):
            total = total + xn ** (size - sum(mu)) * s(mu)
        return total

    return _simplify(s(lam))


def _interlacing(top):
    """Partitions with len(top)-1 parts interlacing ``top``."""
    out = [()]
    for i in range(len(top) - 1):
        out = [m + (v,) for m in out for v in range(top[i + 1], top[i] + 1)]
    return out


def schur_ones(lam: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape lam with entries <= N."""
    lam = tuple(lam)
    N = len(lam)
    num, den = 1, 1
    for j in range(N):
        for k in range(j + 1, N):
            num *= lam[j] - j - lam[k] + k
            den *= k - j
    q, r = divmod(num, den)
    assert r == 0
    return q


def raise_part(lam, k, box=None):
    """lam + e_k with the vanishing convention; wrap at the box edge when ``box`` is given.

    Returns the new partition, or None when the term vanishes.  The wrap is valid for points obeying
    x**M = (-1)**(N-1), M = box + N.
    """
    new = list(lam)
    new[k] += 1
    if k and new[k] > new[k - 1]:
        return None
    if box is not None and new[0] > box:
        assert k == 0
        new = [v - 1 for v in lam[1:]] + [0]
        if any(v < 0 for v in new) or not is_weak(new):
            return None
    return tuple(new)


def lower_part(lam, k, box=None):
    N = len(lam)
    new = list(lam)
    new[k] -= 1
    if k + 1 < N and new[k] < new[k + 1]:
        return None
    if new[k] < 0:
        if box is None:
            return None
        assert k == N - 1
        new = [box] + [v + 1 for v in lam[:-1]]
        if N > 1 and new[1] > box:
            return None
    return tuple(new)


def pieri_sum_check(lam, x, bethe_box: int | None = None, lowering: bool = False,
                    tol: float = 1e-9) -> bool:
    """Check sum_k S_{lam+e_k}(x) = (sum x) S_lam(x), or the lowering version with 1/x.

    With ``bethe_box`` the raised/lowered shapes that leave the box are wrapped;
    this needs x**M = (-1)**(N-1).
    """
    N = len(x)
    lam = _check_lambda(lam, N)
    if lowering and bethe_box is None:
        raise ValueError("the lowering rule only holds at Bethe points; pass bethe_box")
    step = lower_part if lowering else raise_part
    lhs = 0
    for k in range(N):
        new = step(lam, k, bethe_box)
        if new is not None:
            lhs = lhs + schur_bialternant(new, x)
    factor = sum((1 / Fraction(v) if is_exact([v]) else 1 / v) for v in x) if lowering else sum(x)
    rhs = factor * schur_bialternant(lam, x)
    if is_exact(list(x)):
        return lhs == rhs
    return abs(lhs - rhs) <= tol * max(1.0, abs(rhs))


def h_sum(P: int, z):
    """sum_{k<P} z**k (complete homogeneous polynomial of one variable, degree P-1)."""
    out, term = 0, 1
    for _ in range(P):
        out = out + term
        term = term * z
    return out


def cauchy_binet_sum(N: int, L: int, x, y):
    """sum over lam inside the L^N box of S_lam(x) S_lam(y), by the path route."""
    tot = 0
    for lam in enumerate_partitions(N, L):
        tot = tot + schur_paths(lam, x) * schur_paths(lam, y)
    return _simplify(tot)


def cauchy_binet(N: int, L: int, x, y, check: bool = True, tol: float = 1e-9):
    """det(h_{L+N}(x_i y_j)) / (V(x) V(y)); falls back to the direct sum when degenerate."""
    x, y = list(x), list(y)
    if len(x) != N or len(y) != N:
        raise ValueError("x and y must have N entries")
    vx, vy = vandermonde(x), vandermonde(y)
    exact = is_exact(x + y)
    degenerate = (vx == 0 or vy == 0) if exact else (abs(vx) <= tol or abs(vy) <= tol)
    if degenerate:
        return cauchy_binet_sum(N, L, x, y)
    T = [[h_sum(L + N, xi * yj) for yj in y] for xi in x]
    val = _det(T)
    val = Fraction(val) / (Fraction(vx) * Fraction(vy)) if exact else val / (vx * vy)
    val = _simplify(val)
    if check and N <= 3 and L <= 4:
        other = cauchy_binet_sum(N, L, x, y)
        if exact:
            assert val == other, (val, other)
        else:
            assert abs(val - other) <= tol * max(1.0, abs(other)), (val, other)
    return val


def principal_points(N: int, q, mode: str = "qN"):
    """(q, q^2, ..., q^N) for mode 'qN'; (1, q, ..., q^{N-1}) for mode 'unit'."""
    if q == 0:
        raise ValueError("q must be nonzero")
    if mode == "qN":
        return [q ** (k + 1) for k in range(N)]
    if mode == "unit":
        return [q**k for k in range(N)]
    raise ValueError(f"unknown mode {mode!r}")


def principal_spec(lam, q, mode: str = "qN"):
    lam = tuple(lam)
    if q == 1:
        return schur_ones(lam)
    x = principal_points(len(lam), q, mode)
    try:
        return schur_bialternant(lam, x)
    except DegeneratePointsError:
        return schur_paths(lam, x)


def q_hook_content(lam, q):
    """Closed product for S_lam(1, q, ..., q^{N-1}); exact for rational q != root of unity."""
    lam = tuple(lam)
    N = len(lam)
    q = Fraction(q)
    out = q ** sum(i * l for i, l in enumerate(lam))
    for j in range(N):
        for k in range(j + 1, N):
            out *= (1 - q ** (lam[j] - lam[k] + k - j)) / (1 - q ** (k - j))
    return _simplify(out)

