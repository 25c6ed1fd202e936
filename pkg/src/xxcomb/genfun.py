"""Plane-partition generating functions, N-particle traces and total-trace Fermi determinants."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy import special

from .bethe import ChainSpec, all_quantum_numbers, bethe_roots, boltzmann_gen_exp, momentum_grid, single_energy
from .circulant import check_ring
from .exact import (GuardError, TruncatedSeries, barnes_g, bessel_i_series, det_exact, extract_dk,
                    is_exact, series_det)
from .partitions import (PinnedSpec, diag_trace, enumerate_pinned,
                         enumerate_plane_partitions, enumerate_strict, to_nonstrict)
from .symfun import h_sum, schur_ones, vandermonde

NORM_TRACE_LIMITS = {"N": 4, "box": 4}
TRACE_LIMITS = {"M": 12, "N": 4}


def macmahon(N: int, box: int) -> int:
    """Number of plane partitions in an N x N x box box."""
    if N < 1 or box < 0:
        raise ValueError("need N >= 1, box >= 0")
    out = Fraction(1)
    for k in range(1, N + 1):
        for j in range(1, N + 1):
            out *= Fraction(box + k + j - 1, k + j - 1)
    assert out.denominator == 1
    return int(out)


@dataclass
class QGammaPoly:
    """Polynomial in (q, gamma) with integer coefficients keyed by (q power, gamma power)."""

    coeffs: dict

    def __call__(self, q, gamma):
        return sum(c * q**i * gamma**j for (i, j), c in self.coeffs.items())

    def gamma_slice(self, j: int) -> dict:
        return {i: c for (i, jj), c in self.coeffs.items() if jj == j}

    def to_json(self) -> str:
        items = [{"monomial": [i, j], "coefficient": str(c)} for (i, j), c in sorted(self.coeffs.items())]
        return json.dumps(items)

    @classmethod
    def from_json(cls, text: str) -> "QGammaPoly":
        return cls({tuple(d["monomial"]): int(d["coefficient"]) for d in json.loads(text)})


def norm_trace_sum(N: int, box: int, limits: dict | None = None) -> QGammaPoly:
    """sum over boxed plane partitions of q^{|pi|} gamma^{tr_N pi}, by enumeration."""
    lim = dict(NORM_TRACE_LIMITS, **(limits or {}))
    if N > lim["N"] or box > lim["box"]:
        raise GuardError(f"norm_trace_sum: limits N<={lim['N']}, box<={lim['box']} exceeded")
    out: dict = {}
    for pp in enumerate_plane_partitions(N, box):
        key = (pp.volume, diag_trace(pp, N))
        out[key] = out.get(key, 0) + 1
    return QGammaPoly(out)


def norm_trace_det(N: int, box: int, q, gamma, limits: dict | None = None):
    """det(h_M(gamma q^{i+j-1})) / (V(q_N/q) V(gamma q_N)), M = box + N.

    Degenerate points (q = 1, roots of unity, gamma = 0) fall back to the enumeration route.
    """
    M = box + N
    x = [q**k for k in range(N)]
    y = [gamma * q ** (k + 1) for k in range(N)]
    vx, vy = vandermonde(x), vandermonde(y)
    exact = is_exact(x + y)
    if (vx == 0 or vy == 0) if exact else (abs(vx) < 1e-12 or abs(vy) < 1e-12):
        return norm_trace_sum(N, box, limits)(q, gamma)
    mat = [[h_sum(M, gamma * q ** (i + j + 1)) for j in range(N)] for i in range(N)]
    if exact:
        val = Fraction(det_exact(mat)) / (Fraction(vx) * Fraction(vy))
        return int(val) if val.denominator == 1 else val
    return float(np.linalg.det(np.array(mat, dtype=float))) / (vx * vy)


@dataclass(frozen=True)
class UnboundedProducts:
    double: float
    scaling: float


def unbounded_products(N: int, q: float, gamma: float, truncation: int = 2000) -> UnboundedProducts:
    """prod_{i,j<=N} 1/(1 - gamma q^{i+j-1}) and prod_{n<=truncation} (1 - gamma q^n)^{-n}."""
    if abs(gamma * q) >= 1:
        raise ValueError("divergent: need |gamma q| < 1")
    double = 1.0
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            double /= 1 - gamma * q ** (i + j - 1)
    logs = math.fsum(-n * math.log1p(-gamma * q**n) for n in range(1, truncation + 1))
    return UnboundedProducts(double, math.exp(logs))


def pinned_pp_count(N: int, box: int, spec: PinnedSpec | Sequence[int] = ()) -> int:
    """sum over strict mu containing the pinned sites of S_{mu - delta}(1)^2."""
    M = box + N
    return sum(schur_ones(to_nonstrict(mu)) ** 2 for mu in enumerate_pinned(spec, N, M))


def empty_corner_count(N: int, box: int, l: int) -> int:
    """Boxed plane partitions whose bottom-right l x l diagonal square is empty (oracle)."""
    if l == 0:
        return sum(1 for _ in enumerate_plane_partitions(N, box))
    c = N - l
    return sum(1 for pp in enumerate_plane_partitions(N, box) if pp.heights[c][c] == 0)


def diag_constrained_count(N: int, box: int, m: int) -> int:
    """sum over strict mu with |mu| = m, parts <= box + N, of S_{mu - delta}(1)^2."""
    return sum(schur_ones(to_nonstrict(mu)) ** 2
               for mu in enumerate_strict(N, box + N) if sum(mu) == m)


# --------------------------------------------------------- N-particle traces


def _guard(N, M, limits):
    lim = dict(TRACE_LIMITS, **(limits or {}))
    if M > lim["M"] or N > lim["N"]:
        raise GuardError(f"limits M<={lim['M']}, N<={lim['N']} exceeded")


def bessel_trace(N: int, beta: float, a, M: int, limits: dict | None = None) -> float:
    """sum_mu det(e^{alpha_{mu_i}} I_{|mu_i - mu_j|}(beta)), scaled by e^{-N beta}."""
    _guard(N, M, limits)
    alpha = np.zeros(M) if a is None else np.asarray(a, dtype=float)
    tot = 0.0
    for mu in enumerate_strict(N, M):
        idx = np.array(mu)
        mat = special.ive(np.abs(idx[:, None] - idx[None, :]), beta)
        tot += math.exp(sum(alpha[m - 1] for m in mu)) * float(np.linalg.det(mat))
    return tot


def nparticle_mean(N: int, beta: float, a, M: int, limits: dict | None = None) -> float:
    return bessel_trace(N, beta, a, M, limits) / bessel_trace(N, beta, None, M, limits)


def moment_mean(N: int, beta: float, M: int, l: int, limits: dict | None = None) -> float:
    """sum_mu (|mu|/N)^l det(I(beta)) / sum_mu det(I(beta))."""
    _guard(N, M, limits)
    num = den = 0.0
    for mu in enumerate_strict(N, M):
        idx = np.array(mu)
        d = float(np.linalg.det(special.ive(np.abs(idx[:, None] - idx[None, :]), beta)))
        num += (sum(mu) / N) ** l * d
        den += d
    return num / den


@dataclass
class TraceSeries:
    N: int
    M: int
    series: TruncatedSeries

    def dk(self, K: int):
        return extract_dk(self.series, K)

    def field_polynomial(self, K: int) -> list:
        """Coefficient p of w^p, w = h(M - 2N): C(K, p) D^{K-p}."""
        return [math.comb(K, p) * self.dk(K - p) for p in range(K + 1)]


def series_of_trace(N: int, M: int, weights=None, order: int = 4, limits: dict | None = None) -> TraceSeries:
    """beta-series of sum_mu prod w_{mu_i} det(I_{|mu_i - mu_j|}(beta)); weights exact (default 1)."""
    _guard(N, M, limits)
    w = [1] * M if weights is None else list(weights)
    total = TruncatedSeries.constant(0, order)
    for mu in enumerate_strict(N, M):
        mat = [[bessel_i_series(abs(a - b), order) for b in mu] for a in mu]
        total = total + series_det(mat) * math.prod(Fraction(w[m - 1]) for m in mu)
    return TraceSeries(N, M, total)


@dataclass(frozen=True)
class MehtaBarnes:
    V: float
    I: float
    phi: float
    phi_estimate: float

    @property
    def gap(self) -> float:
        return self.phi - self.phi_estimate


def mehta_barnes(N: int, beta: float, h: float = 0.0) -> MehtaBarnes:
    """V_N = e^{beta N (1-h)} I_N / beta^{N^2/2}, I_N = G(N+1)/(2pi)^{N/2}."""
    if N < 1 or beta <= 0:
        raise ValueError("need N >= 1 and beta > 0")
    phi = math.log(barnes_g(N + 1)) - N / 2 * math.log(2 * math.pi)
    est = N * N / 2 * math.log(N) - 3 * N * N / 4
    logV = beta * N * (1 - h) - N * N / 2 * math.log(beta) + phi
    return MehtaBarnes(math.exp(logV), math.exp(phi), phi, est)


def large_beta_estimate(N: int, box: int, gamma: float) -> float:
    """gamma^{N(N+1)/2} G(N,N,box | 1, gamma) / A(N,N,box): sum_mu gamma^{|mu|} S^2 / A."""
    tot = sum(gamma ** sum(mu) * schur_ones(to_nonstrict(mu)) ** 2 for mu in enumerate_strict(N, box + N))
    return tot / macmahon(N, box)


def large_beta_moment_estimate(N: int, box: int, l: int) -> float:
    M = box + N
    top = sum(range(M - N + 1, M + 1))
    num = sum((m / N) ** l * diag_constrained_count(N, box, m) for m in range(N * (N + 1) // 2, top + 1))
    return num / macmahon(N, box)


def large_beta_pinned_estimate(N: int, box: int, spec) -> float:
    return pinned_pp_count(N, box, spec) / macmahon(N, box)


def large_beta_report(N: int, box: int, gamma: float, betas: Sequence[float]):
    """(beta, finite-M mean with alpha_n = n log gamma, large-beta estimate) triples."""
    M = box + N
    a = [n * math.log(gamma) for n in range(1, M + 1)]
    est = large_beta_estimate(N, box, gamma)
    return [(b, nparticle_mean(N, b, a, M), est) for b in betas]


# ---------------------------------------------------------- total trace


def _grid_for_parity(M: int, even: bool) -> list[float]:
    return momentum_grid(M, 2 if even else 1)


def alpha_matrix(M: int, grid: Sequence[float], a=None) -> np.ndarray:
    """(1/M) sum_n e^{alpha_n + i n (p - q)} over the grid."""
    alpha = np.zeros(M) if a is None else np.asarray(a, dtype=float)
    n = np.arange(1, M + 1)
    ph = np.exp(1j * np.outer(grid, n))
    return (ph * np.exp(alpha)) @ ph.conj().T / M


@dataclass(frozen=True)
class TotalTrace:
    value: float
    plus: float   # ell = +1 part
    minus: float  # ell = -1 part


def total_trace(spec: ChainSpec, a=None, beta: float = 1.0) -> TotalTrace:
    """(e^{beta h M/2}/2) sum_ell (D_+^{(ell)} + ell D_-^{(ell)}).

    D_+ lives on the even-N momentum grid, D_- on the odd-N grid.
    """
    M, h = spec.M, spec.h
    pref = math.exp(beta * h * M / 2) / 2
    parts = {}
    for ell in (1, -1):
        acc = 0.0
        for even, sign in ((True, 1), (False, ell)):
            grid = _grid_for_parity(M, even)
            X = np.diag([math.exp(-beta * single_energy(p, h)) for p in grid]) @ alpha_matrix(M, grid, a)
            acc += sign * complex(np.linalg.det(np.eye(M) + ell * X)).real
        parts[ell] = pref * acc
    return TotalTrace(parts[1] + parts[-1], parts[1], parts[-1])


def nresolved_trace(spec: ChainSpec, beta: float, a=None) -> float:
    """sum over N and all Bethe states of the Boltzmann-weighted generating exponential."""
    tot = 0.0
    for N in range(spec.M + 1):
        sub = ChainSpec(spec.M, N, spec.h)
        for I in all_quantum_numbers(spec.M, N):
            tot += boltzmann_gen_exp(bethe_roots(sub, I), a, beta).real
    return tot


# ------------------------------------------------- Fermi kernel and minors


@dataclass(frozen=True)
class FermiKernel:
    beta: float
    h: float = 0.0
    ell: int = 1
    M: int | None = None      # None: infinite chain
    even: bool = True         # finite-M grid parity (even-N grid for D_+)
    quadrature: int = 4096

    def weight(self, p):
        return 1.0 / (1.0 + self.ell * np.exp(self.beta * (self.h - np.cos(p))))

    def grid(self):
        if self.M is None:
            return 2 * math.pi * np.arange(self.quadrature) / self.quadrature - math.pi
        check_ring(self.M)
        return np.array(_grid_for_parity(self.M, self.even))


def fermi_matrix(kernel: FermiKernel, sites: Sequence[int]) -> np.ndarray:
    """R_mn = mean over the grid of f(p) e^{i (m - n) p}."""
    p = kernel.grid()
    f = kernel.weight(p)
    s = np.asarray(sites)
    ph = np.exp(1j * np.outer(s, p))
    return (ph * f) @ ph.conj().T / len(p)


def minor_derivative(kernel: FermiKernel, sites: Sequence[int]) -> float:
    sites = list(sites)
    if any(sites[i] <= sites[i + 1] for i in range(len(sites) - 1)):
        raise ValueError("sites must be strictly decreasing")
    if not sites:
        return 1.0
    return float(np.linalg.det(fermi_matrix(kernel, sites)).real)


def fermi_generating_det(kernel: FermiKernel, a) -> float:
    """G(a) = det(I + (e^alpha - I) f) on the finite-M grid; G(0) = 1."""
    if kernel.M is None:
        raise ValueError("finite M required")
    M = kernel.M
    grid = kernel.grid()
    E = alpha_matrix(M, grid, a)
    F = np.diag(kernel.weight(grid))
    return float(np.linalg.det(np.eye(M) + (E - np.eye(M)) @ F).real)


def finite_difference_minor(kernel: FermiKernel, sites: Sequence[int], step: float = 1e-4) -> float:
    """Central mixed difference of G in alpha at the given sites."""
    M = kernel.M
    l = len(sites)
    tot = 0.0
    for signs in np.ndindex(*([2] * l)):
        a = np.zeros(M)
        sgn = 1
        for s, k in zip(signs, sites):
            a[k - 1] += step if s == 0 else -step
            sgn *= 1 if s == 0 else -1
        tot += sgn * fermi_generating_det(kernel, a)
    return tot / (2 * step) ** l
