"""Random-turns vicious walkers: exhaustive oracles and determinant formulas.

Walkers occupy distinct sites.  Each tick exactly one walker moves one site
left or right (or, when stays are enabled, nobody moves).  On a ring of M
sites the positions are taken mod M; on the line they are unrestricted.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .circulant import check_ring, shifted_binomial
from .exact import (GuardError, TruncatedSeries, bessel_i_series, compositions, det_ring,
                    multinomial, series_det)
from .partitions import enumerate_partitions, from_nonstrict, is_strict
from .symfun import schur_ones

ORACLE_LIMITS = {"N": 3, "K": 8}
COMPOUND_LIMITS = {"N": 3, "K": 6, "box": 3}


@dataclass(frozen=True)
class WalkConfig:
    N: int
    K: int
    M: int | None = None  # None selects the infinite line
    stays: bool = False

    def __post_init__(self):
        if self.M is not None:
            check_ring(self.M)
            if self.N > self.M:
                raise ValueError(f"N={self.N} walkers do not fit on M={self.M} sites")
        if self.K < 0 or self.N < 0:
            raise ValueError("N and K must be non-negative")

    @property
    def ring(self) -> bool:
        return self.M is not None


@dataclass
class NestCount:
    value: int
    by_stays: dict[int, int] = field(default_factory=dict)


def _positions(cfg: WalkConfig, mu):
    mu = tuple(mu)
    if len(mu) != cfg.N:
        raise ValueError(f"expected {cfg.N} positions, got {mu}")
    if cfg.ring and any(not 1 <= p <= cfg.M for p in mu):
        raise ValueError(f"ring positions must lie in 1..{cfg.M}")
    return mu


def _endpoint_distribution(cfg: WalkConfig, start: tuple[int, ...]):
    """Map (sorted final configuration) -> list of counts indexed by number of stays."""
    K, M = cfg.K, cfg.M
    if len(set(start)) < len(start):
        return {}
    dist = {tuple(sorted(start)): [1] + [0] * K}
    for _ in range(K):
        nxt = defaultdict(lambda: [0] * (K + 1))
        for conf, counts in dist.items():
            occ = set(conf)
            for i, site in enumerate(conf):
                for step in (-1, 1):
                    t = site + step
                    if M is not None:
                        t = (t - 1) % M + 1
                    if t in occ:
                        continue
                    new = tuple(sorted(conf[:i] + (t,) + conf[i + 1:]))
                    acc = nxt[new]
                    for p, c in enumerate(counts):
                        acc[p] += c
            if cfg.stays:
                acc = nxt[conf]
                for p in range(K):
                    acc[p + 1] += counts[p]
        dist = dict(nxt)
    return dist


def oracle_count(cfg: WalkConfig, muL, muR, limits: dict | None = None) -> NestCount:
    """Exhaustive count of move sequences from muL to muR (as sets of sites)."""
    lim = dict(ORACLE_LIMITS, **(limits or {}))
    if cfg.N > lim["N"]:
        raise GuardError(f"oracle_count: N={cfg.N} exceeds limit N<={lim['N']}")
    if cfg.K > lim["K"]:
        raise GuardError(f"oracle_count: K={cfg.K} exceeds limit K<={lim['K']}")
    muL, muR = _positions(cfg, muL), _positions(cfg, muR)
    if len(set(muR)) < len(muR):
        return NestCount(0, {p: 0 for p in range(cfg.K + 1)} if cfg.stays else {0: 0})
    counts = _endpoint_distribution(cfg, muL).get(tuple(sorted(muR)), [0] * (cfg.K + 1))
    if not cfg.stays:
        return NestCount(counts[0], {0: counts[0]})
    return NestCount(sum(counts), dict(enumerate(counts)))


def oracle_distribution(cfg: WalkConfig, muL, limits: dict | None = None):
    """All endpoints reachable in K moves with their counts (no stays)."""
    lim = dict(ORACLE_LIMITS, **(limits or {}))
    if cfg.N > lim["N"] or cfg.K > lim["K"]:
        raise GuardError(f"oracle: limits N<={lim['N']}, K<={lim['K']} exceeded")
    return {c: v[0] for c, v in _endpoint_distribution(cfg, _positions(cfg, muL)).items()}


def twisted_power_entry(M: int, n: int, d: int, twist: int = 1) -> int:
    """sum_k twist^k C(n, (n - d - kM)/2): n-step walks with displacement d mod M, winding-weighted."""
    tot = 0
    kmin = -((n + d) // M) - 1
    kmax = (n - d) // M + 1
    for k in range(kmin, kmax + 1):
        b = shifted_binomial(n, -(d + k * M))
        if b:
            tot += (twist**k if k >= 0 else twist ** (-k)) * b
    return tot


def _entry(cfg: WalkConfig, n: int, a: int, b: int) -> int:
    if not cfg.ring:
        return shifted_binomial(n, a - b)
    twist = -1 if (cfg.N - 1) % 2 else 1
    return twisted_power_entry(cfg.M, n, b - a, twist)


def count_formula(cfg: WalkConfig, muL, muR, K: int | None = None) -> int:
    """sum_{|n|=K} P(n) det(entry(n_j; muL_i, muR_j)).

    On the ring the single-walker entries carry the winding sign (-1)^{(N-1) k};
    for odd N they are the plain entries of Delta^n.
    """
    K = cfg.K if K is None else K
    muL, muR = _positions(cfg, muL), _positions(cfg, muR)
    N = cfg.N
    if N == 0:
        return 1 if K == 0 else 0
    tot = 0
    for n in compositions(K, N):
        mat = [[_entry(cfg, n[j], muL[i], muR[j]) for j in range(N)] for i in range(N)]
        tot += multinomial(n) * det_ring(mat)
    return tot


def count_with_stays(cfg: WalkConfig, muL, muR) -> list[int]:
    """Coefficients c_p of w^p: c_p = C(K, p) * count_formula(K - p)."""
    return [math.comb(cfg.K, p) * count_formula(cfg, muL, muR, cfg.K - p) for p in range(cfg.K + 1)]


def eval_poly(coeffs: Sequence, w):
    out = 0
    for c in reversed(coeffs):
        out = out * w + c
    return out


def bessel_det_generating(muL, muR, order: int) -> TruncatedSeries:
    """Series of det(I_{|muL_i - muR_j|}(beta)) through beta**order."""
    N = len(muL)
    if len(muR) != N:
        raise ValueError("muL and muR must have equal length")
    if N == 0:
        return TruncatedSeries.constant(1, order)
    mat = [[bessel_i_series(abs(muL[i] - muR[j]), order) for j in range(N)] for i in range(N)]
    return series_det(mat)


def _pinned_lambdas(N: int, l: int, box: int):
    for head in enumerate_partitions(N - l, box):
        yield head + (0,) * l


def compound_count(N: int, l: int, K: int, w=0, box: int = 1, M: int | None = None,
                   limits: dict | None = None):
    """sum_p C(K,p) w^p sum_{lamL pinned, lamR} S_{lamL}(1) S_{lamR}(1) |P^0_{K-p}(muL -> muR)|.

    lamL has its last ``l`` parts equal to zero; both shapes lie in the box^N square.
    """
    lim = dict(COMPOUND_LIMITS, **(limits or {}))
    if not 0 <= l <= N:
        raise ValueError("need 0 <= l <= N")
    for key, val in (("N", N), ("K", K), ("box", box)):
        if val > lim[key]:
            raise GuardError(f"compound_count: {key}={val} exceeds limit {key}<={lim[key]}")
    cfg = WalkConfig(N, K, M)
    lefts = [(from_nonstrict(lam), schur_ones(lam)) for lam in _pinned_lambdas(N, l, box)]
    rights = [(from_nonstrict(lam), schur_ones(lam)) for lam in enumerate_partitions(N, box)]
    inner = []
    for Kp in range(K + 1):
        s = 0
        for muL, sL in lefts:
            for muR, sR in rights:
                s += sL * sR * count_formula(cfg, muL, muR, Kp)
        inner.append(s)
    return eval_poly([math.comb(K, p) * inner[K - p] for p in range(K + 1)], w)


def compound_count_bruteforce(N: int, l: int, K: int, box: int = 1, M: int | None = None) -> int:
    """w = 0 compound count from the walker oracle and tableau counts."""
    cfg = WalkConfig(N, K, M)
    tot = 0
    rights = {tuple(sorted(from_nonstrict(lam))): schur_ones(lam) for lam in enumerate_partitions(N, box)}
    for lam in _pinned_lambdas(N, l, box):
        dist = oracle_distribution(cfg, from_nonstrict(lam), limits={"N": N, "K": K})
        for conf, c in dist.items():
            tot += schur_ones(lam) * rights.get(conf, 0) * c
    return tot


def strict_partitions_of(m: int, N: int, max_part: int | None = None):
    """Strict partitions of m into exactly N positive parts (colex order)."""
    top = m if max_part is None else min(m, max_part)

    @lru_cache(maxsize=None)
    def rec(rem, k, bound):
        if k == 0:
            return [()] if rem == 0 else []
        out = []
        for first in range(min(bound, rem), 0, -1):
            for rest in rec(rem - first, k - 1, first - 1):
                out.append((first,) + rest)
        return out

    return sorted(rec(m, N, top), key=lambda t: t[::-1])


def closed_ensemble_by_weight(N: int, K: int, m: int, p: int = 0, max_part: int | None = None) -> int:
    """C(K, p) * sum_{mu strict, |mu| = m} |P^0_{K-p}(mu -> mu)| on the infinite line."""
    cfg = WalkConfig(N, K)
    tot = 0
    for mu in strict_partitions_of(m, N, max_part):
        assert is_strict(mu)
        tot += count_formula(cfg, mu, mu, K - p)
    return math.comb(K, p) * tot
