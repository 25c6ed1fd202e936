"""Ring hopping matrix powers, Ramus-type identities and the Vandermonde-weighted integral J(K, N)."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

import numpy as np

from .exact import compositions, det_ring, lacunary_binomial, multinomial


def check_ring(M: int) -> int:
    if M < 2 or M % 2:
        raise ValueError(f"ring size M must be even and >= 2, got {M}")
    return M


def delta_matrix(M: int) -> list[list[int]]:
    """Nearest-neighbour hopping matrix on an M-site ring (entries 2 when M = 2)."""
    check_ring(M)
    D = [[0] * M for _ in range(M)]
    for j in range(M):
        D[j][(j + 1) % M] += 1
        D[j][(j - 1) % M] += 1
    return D


def _select_L(M: int, K: int, d: int) -> int | None:
    """The L with 2L = K - d + pM and 0 <= L <= M/2; L = 0 and L = M/2 are identified."""
    found = set()
    p_lo = -(K // M) - 2
    p_hi = d // M + 2
    for p in range(p_lo, p_hi + 1):
        twoL = K - d + p * M
        if twoL % 2 == 0 and 0 <= twoL // 2 <= M // 2:
            L = twoL // 2
            found.add(0 if L == M // 2 else L)
    if not found:
        return None
    assert len(found) == 1, f"ambiguous L for M={M}, K={K}, d={d}: {found}"
    return found.pop()


def circulant_power_entry(M: int, K: int, j: int, m: int) -> int:
    """(Delta^K)_{jm} from a lacunary binomial sum with period M/2; sites are 1-based."""
    check_ring(M)
    if not (1 <= j <= M and 1 <= m <= M):
        raise ValueError(f"sites must lie in 1..{M}")
    if K < 0:
        raise ValueError("K must be non-negative")
    d = abs(j - m)
    if (K - d) % 2:
        return 0
    L = _select_L(M, K, d)
    if L is None:
        return 0
    return lacunary_binomial(K, L, M // 2)


@dataclass(frozen=True)
class CirculantPower:
    M: int
    K: int
    entries: tuple[int, ...]

    def entry(self, d: int) -> int:
        return self.entries[d % self.M]


def circulant_power_oracle(M: int, K: int) -> CirculantPower:
    """Row of Delta^K by the recursion (Delta^{K+1})_{jm} = (Delta^K)_{j,m+1} + (Delta^K)_{j,m-1}."""
    check_ring(M)
    row = [0] * M
    row[0] = 1
    for _ in range(K):
        row = [row[(m + 1) % M] + row[(m - 1) % M] for m in range(M)]
    return CirculantPower(M, K, tuple(row))


def circulant_power_formula(M: int, K: int) -> CirculantPower:
    return CirculantPower(M, K, tuple(circulant_power_entry(M, K, 1, 1 + d) for d in range(M)))


# ------------------------------------------------------------------ Ramus


def ramus_sides(R: int, n: int, t: int) -> tuple[float, int]:
    """(cosine side, exact side) of sum_l C(n, t + R l) = (2^n/R) sum_j cos^n(pi j/R) cos(pi j (n-2t)/R)."""
    if R <= 0:
        raise ValueError("R must be positive")
    if not 0 <= t < R:
        raise ValueError("t must lie in 0..R-1")
    terms = [(2 * math.cos(math.pi * j / R)) ** n * math.cos(math.pi * j * (n - 2 * t) / R) for j in range(R)]
    return math.fsum(terms) / R, lacunary_binomial(n, t, R)


def ramus_check(R: int, n: int, t: int, tol: float = 1e-9) -> bool:
    trig, exact = ramus_sides(R, n, t)
    return abs(trig - exact) <= tol


# ----------------------------------------------------- generalized forms


def _offsets(muL, muR):
    muL, muR = tuple(muL), tuple(muR)
    if len(muL) != len(muR):
        raise ValueError("muL and muR must have equal length")
    return [a - b for a, b in zip(muL, muR)]


def generalized_ramus_lhs(M: int, K: int, muL: Sequence[int], muR: Sequence[int]) -> int:
    """sum_{|n|=K} P(n) prod_j (Delta^{n_j})_{muL_j, muR_j}."""
    check_ring(M)
    N = len(muL)
    _offsets(muL, muR)
    tot = 0
    for n in compositions(K, N):
        term = 1
        for nj, a, b in zip(n, muL, muR):
            term *= circulant_power_entry(M, nj, a, b)
            if not term:
                break
        if term:
            tot += multinomial(n) * term
    return tot


def generalized_ramus_rhs(M: int, K: int, muL: Sequence[int], muR: Sequence[int],
                          literal: bool = False) -> float:
    """Cosine-power side.

    The default sums l over the full grid {0..M-1}^N with prefactor 2^K/M^N.
    ``literal=True`` uses the half grid {0..M/2-1}^N with prefactor 2^{K+N}/M^N;
    the two agree only when every offset has the parity of K.
    """
    check_ring(M)
    d = _offsets(muL, muR)
    N = len(d)
    rng = range(M // 2) if literal else range(M)
    cosines = [math.cos(2 * math.pi * l / M) for l in range(M)]
    terms = []
    for ls in product(rng, repeat=N):
        s = sum(cosines[l] for l in ls)
        w = 1.0
        for l, ds in zip(ls, d):
            w *= math.cos(2 * math.pi * l * ds / M)
        terms.append(s**K * w)
    pref = 2 ** (K + N) if literal else 2**K
    return pref * math.fsum(terms) / M**N


def det_ramus_lhs(M: int, K: int, muL, muR) -> int:
    """sum_{|n|=K} P(n) det((Delta^{n_j})_{muL_i, muR_j})."""
    check_ring(M)
    N = len(muL)
    _offsets(muL, muR)
    tot = 0
    for n in compositions(K, N):
        mat = [[circulant_power_entry(M, n[j], muL[i], muR[j]) for j in range(N)] for i in range(N)]
        tot += multinomial(n) * det_ring(mat)
    return tot


def det_ramus_rhs(M: int, K: int, muL, muR) -> float:
    """(1/M^N) sum over N-subsets phi of the grid 2pi/M (n - M/2) of
    (2 sum cos phi)^K |V|^2 S_{lamL}(e^{i phi}) S_{lamR}(e^{-i phi})."""
    check_ring(M)
    N = len(muL)
    grid = [2 * math.pi / M * (n - M / 2) for n in range(1, M + 1)]
    acc = 0j
    for S in combinations(grid, N):
        x = [cmath.exp(1j * p) for p in S]
        # V(x) S_lam(x) = det(x_j^{mu_k - 1})
        aL = np.linalg.det(np.array([[xj ** (m - 1) for m in muL] for xj in x]))
        aR = np.linalg.det(np.array([[xj ** (m - 1) for m in muR] for xj in x]))
        acc += (2 * sum(math.cos(p) for p in S)) ** K * aL * np.conj(aR)
    return float((acc / M**N).real)


def det_ramus_identity(M: int, K: int, muL, muR) -> tuple[int, float]:
    return det_ramus_lhs(M, K, muL, muR), det_ramus_rhs(M, K, muL, muR)


# -------------------------------------------------------- J(K, N)


def j_integral(K: int, N: int, points: int | None = None) -> float:
    """(1/N!) int (sum cos phi)^K |V(e^{i phi})|^2 dphi/(2pi)^N on an equispaced grid."""
    G = points or 4 * (K + N) + 2
    phis = -math.pi + 2 * math.pi * np.arange(G) / G
    z = np.exp(1j * phis)
    c = np.cos(phis)
    grids = np.meshgrid(*([np.arange(G)] * N), indexing="ij")
    idx = [g.ravel() for g in grids]
    s = sum(c[i] for i in idx)
    v2 = np.ones_like(s)
    for a in range(N):
        for b in range(a + 1, N):
            v2 = v2 * np.abs(z[idx[a]] - z[idx[b]]) ** 2
    return float(np.sum(s**K * v2) / G**N / math.factorial(N))


def shifted_binomial(n: int, e: int) -> int:
    """C(n, (n + e)/2); zero on parity mismatch or out of range (so delta_{e0} at n = 0)."""
    if (n + e) % 2:
        return 0
    k = (n + e) // 2
    return math.comb(n, k) if 0 <= k <= n else 0


def closed_staircase_count(K: int, N: int) -> int:
    """sum_{|n|=K} P(n) det(C(n_j, (n_j + j - i)/2))."""
    tot = 0
    for n in compositions(K, N):
        mat = [[shifted_binomial(n[j], j - i) for j in range(N)] for i in range(N)]
        tot += multinomial(n) * det_ring(mat)
    return tot
