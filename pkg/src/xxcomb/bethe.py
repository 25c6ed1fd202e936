"""Periodic XX chain: Bethe roots, Schur-coefficient eigenvectors, amplitudes and matrix elements.

Hamiltonian: H = -1/2 sum_{n,m} Delta_{nm} s+_n s-_m - h S^z, with the vacuum
all spins up.  Flipped spins sit at the parts of a strict partition mu.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .circulant import check_ring, delta_matrix
from .exact import GuardError, det_exact, is_exact
from .partitions import enumerate_partitions, enumerate_strict, from_nonstrict, to_nonstrict
from .symfun import DegeneratePointsError, bialternant_numerator, schur_bialternant, schur_paths, vandermonde
from .walks import WalkConfig, count_with_stays, eval_poly

DENSE_LIMIT = 10


@dataclass(frozen=True)
class ChainSpec:
    M: int
    N: int
    h: float = 0.0

    def __post_init__(self):
        check_ring(self.M)
        if not 0 <= self.N <= self.M:
            raise ValueError(f"need 0 <= N <= M, got N={self.N}, M={self.M}")

    @property
    def box(self) -> int:
        return self.M - self.N


@dataclass(frozen=True)
class BetheSpectrum:
    spec: ChainSpec
    I: tuple[int, ...]
    theta: tuple[float, ...]
    energy: float
    norm2: float

    @property
    def points(self) -> list[complex]:
        return [cmath.exp(1j * t) for t in self.theta]


def momentum_grid(M: int, N: int) -> list[float]:
    """All p with e^{iMp} = (-1)^{N-1}: p = 2pi/M (k - (N+1)/2), k = 1..M."""
    return [2 * math.pi / M * (k - (N + 1) / 2) for k in range(1, M + 1)]


def single_energy(p: float, h: float) -> float:
    return h - math.cos(p)


def bethe_roots(spec: ChainSpec, I: Sequence[int]) -> BetheSpectrum:
    I = tuple(I)
    M, N = spec.M, spec.N
    if len(I) != N:
        raise ValueError(f"need {N} quantum numbers, got {len(I)}")
    for v in I:
        if v != int(v):
            raise ValueError(f"quantum numbers are integers in 1..M; got {v}")
    I = tuple(int(v) for v in I)
    if any(I[k] <= I[k + 1] for k in range(N - 1)):
        raise ValueError(f"quantum numbers must be strictly decreasing: {I}")
    if I and not (M >= I[0] and I[-1] >= 1):
        raise ValueError(f"quantum numbers must lie in 1..{M}")
    theta = tuple(2 * math.pi / M * (i - (N + 1) / 2) for i in I)
    energy = -spec.h * M / 2 + sum(single_energy(t, spec.h) for t in theta)
    x = [cmath.exp(1j * t) for t in theta]
    norm2 = M**N / abs(vandermonde(x)) ** 2 if N else 1.0
    return BetheSpectrum(spec, I, theta, energy, norm2)


def ground_state(spec: ChainSpec) -> BetheSpectrum:
    return bethe_roots(spec, tuple(range(spec.N, 0, -1)))


def all_quantum_numbers(M: int, N: int):
    return list(enumerate_strict(N, M))


# ---------------------------------------------------- flipped-spin basis


def flipped_basis(M: int, N: int) -> list[tuple[int, ...]]:
    return list(enumerate_strict(N, M))


def exchange_matrix(spec: ChainSpec, limit: int = DENSE_LIMIT) -> np.ndarray:
    """H restricted to N flipped spins, in the basis of :func:`flipped_basis`."""
    M, N, h = spec.M, spec.N, spec.h
    if M > limit:
        raise GuardError(f"exchange_matrix: M={M} exceeds limit M<={limit}")
    basis = flipped_basis(M, N)
    index = {frozenset(mu): k for k, mu in enumerate(basis)}
    D = delta_matrix(M)
    H = np.zeros((len(basis), len(basis)))
    diag = -h * M / 2 + h * N
    for k, mu in enumerate(basis):
        H[k, k] += diag
        occ = set(mu)
        for s in mu:
            for t in range(1, M + 1):
                amp = D[t - 1][s - 1]
                if amp and t not in occ:
                    H[index[frozenset(occ - {s} | {t})], k] += -0.5 * amp
    return H


def bethe_vector(spectrum: BetheSpectrum) -> np.ndarray:
    """Components S_lam(e^{i theta}) on the flipped basis, lam = mu - delta."""
    spec = spectrum.spec
    x = spectrum.points
    return np.array([schur_bialternant(to_nonstrict(mu), x) for mu in flipped_basis(spec.M, spec.N)],
                    dtype=complex)


def eigen_residual(spectrum: BetheSpectrum, limit: int = DENSE_LIMIT) -> float:
    spec = spectrum.spec
    if spec.N == 0:
        H = exchange_matrix(spec, limit)
        return float(abs(H[0, 0] - spectrum.energy))
    H = exchange_matrix(spec, limit)
    v = bethe_vector(spectrum)
    r = H @ v - spectrum.energy * v
    return float(np.max(np.abs(r)) / np.linalg.norm(v))


# ------------------------------------------------------------ amplitudes


def amplitude_spectral(spec: ChainSpec, muL, muR, beta: complex) -> complex:
    """(1/M^N) sum_{N-subsets} e^{-beta E} |V|^2 S_lamL(e^{i phi}) S_lamR(e^{-i phi})."""
    M, N, h = spec.M, spec.N, spec.h
    if len(muL) != N or len(muR) != N:
        raise ValueError("muL, muR must have N parts")
    if len(set(muR)) < N or len(set(muL)) < N:
        return 0.0
    grid = momentum_grid(M, N)
    acc = 0j
    for S in combinations(grid, N):
        x = [cmath.exp(1j * p) for p in S]
        energy = -h * M / 2 + sum(single_energy(p, h) for p in S)
        aL = bialternant_numerator([m - 1 for m in muL], x)
        aR = bialternant_numerator([m - 1 for m in muR], x)
        acc += cmath.exp(-beta * energy) * aL * aR.conjugate()
    val = acc / M**N
    return val.real if isinstance(beta, (int, float)) else val


def single_kernel(M: int, N: int, beta: complex) -> np.ndarray:
    """G0_{j,m}(beta) = (1/M) sum_p e^{beta cos p} e^{ip(m-j)} over the momentum grid."""
    p = np.array(momentum_grid(M, N))
    sites = np.arange(1, M + 1)
    phase = np.exp(1j * np.outer(sites, p))  # [site, p]
    w = np.exp(beta * np.cos(p))
    return (phase.conj() * w) @ phase.T / M


def amplitude_determinant(spec: ChainSpec, muL, muR, beta: complex) -> complex:
    """e^{beta h (M/2 - N)} det(G0_{muL_i, muR_j})."""
    M, N, h = spec.M, spec.N, spec.h
    if len(muL) != N or len(muR) != N:
        raise ValueError("muL, muR must have N parts")
    G0 = single_kernel(M, N, beta)
    sub = G0[np.ix_([m - 1 for m in muL], [m - 1 for m in muR])]
    val = cmath.exp(beta * h * (M / 2 - N)) * complex(np.linalg.det(sub)) if N else cmath.exp(beta * h * M / 2)
    return val.real if isinstance(beta, (int, float)) else val


def amplitude_taylor(spec: ChainSpec, muL, muR, order: int, radius: float | None = None,
                     points: int = 128) -> list[float]:
    """Coefficients of beta^K (K <= order) of amplitude_determinant by a Cauchy contour."""
    r = radius or max(1.0, float(order))
    zs = [r * cmath.exp(2j * math.pi * k / points) for k in range(points)]
    vals = [amplitude_determinant(spec, muL, muR, z) for z in zs]
    out = []
    for K in range(order + 1):
        c = sum(v * cmath.exp(-2j * math.pi * k * K / points) for k, v in enumerate(vals)) / points
        out.append((c / r**K).real)
    return out


def amplitude_derivative(spec: ChainSpec, muL, muR, K: int, limits: dict | None = None):
    """D^K_{beta/2} of the amplitude at beta = 0, from the walker count polynomial in w = h(M-2N)."""
    cfg = WalkConfig(spec.N, K, spec.M)
    return eval_poly(count_with_stays(cfg, muL, muR), spec.h * (spec.M - 2 * spec.N))


# ---------------------------------------------------- generating exponential


def _weights(M: int, a=None, weights=None):
    if weights is not None:
        if len(weights) != M:
            raise ValueError(f"need {M} weights")
        return list(weights)
    if a is None:
        return [1] * M
    if len(a) != M:
        raise ValueError(f"need {M} weights")
    return [math.exp(v) for v in a]


def gen_exp_direct(N: int, M: int, y, x, a=None, weights=None):
    """sum_{lam in box} S_lam(y) S_lam(x) prod_k w_{mu_k}; y = v^{-2}, x = u^2."""
    w = _weights(M, a, weights)
    tot = 0
    for lam in enumerate_partitions(N, M - N):
        mu = from_nonstrict(lam)
        prod = 1
        for m in mu:
            prod = prod * w[m - 1]
        if prod:
            tot = tot + _schur_any(lam, y) * _schur_any(lam, x) * prod
    return tot


def _schur_any(lam, x):
    try:
        return schur_bialternant(lam, x)
    except DegeneratePointsError:
        return schur_paths(lam, x)


def gen_exp_offshell(N: int, M: int, y, x, a=None, weights=None, tol: float = 1e-12):
    """det(sum_n w_n (x_i y_j)^{n-1}) / (V(x) V(y)), with x = u^2 and y = v^{-2}.

    Falls back to the direct Schur sum when a Vandermonde vanishes.
    """
    w = _weights(M, a, weights)
    x, y = list(x), list(y)
    vx, vy = vandermonde(x), vandermonde(y)
    exact = is_exact(x + y + w)
    if (vx == 0 or vy == 0) if exact else (abs(vx) <= tol or abs(vy) <= tol):
        return gen_exp_direct(N, M, y, x, weights=w)
    mat = [[sum(w[n] * (xi * yj) ** n for n in range(M)) for yj in y] for xi in x]
    if exact:
        val = Fraction(det_exact(mat)) / (Fraction(vx) * Fraction(vy))
        return int(val) if val.denominator == 1 else val
    return complex(np.linalg.det(np.array(mat, dtype=complex))) / (vx * vy)


def pinned_sum(N: int, M: int, y, x, k: Sequence[int]):
    """sum over mu containing the sites k of S_lam(y) S_lam(x)."""
    need = set(k)
    tot = 0
    for lam in enumerate_partitions(N, M - N):
        if need.issubset(from_nonstrict(lam)):
            tot = tot + _schur_any(lam, y) * _schur_any(lam, x)
    return tot


def pinned_derivative(N: int, M: int, y, x, k: Sequence[int]):
    """d^l/d alpha_{k_1}..d alpha_{k_l} of gen_exp_offshell at a = 0, by 0/1 weight inclusion-exclusion."""
    k = list(k)
    tot = 0
    for r in range(len(k) + 1):
        for T in combinations(k, r):
            w = [0 if (n + 1) in T else 1 for n in range(M)]
            tot = tot + (-1) ** r * gen_exp_offshell(N, M, y, x, weights=w)
    return tot


def _onshell_matrix(spectrum: BetheSpectrum, a) -> np.ndarray:
    M = spectrum.spec.M
    w = np.array(_weights(M, a), dtype=float)
    th = np.array(spectrum.theta)
    n = np.arange(1, M + 1)
    ph = np.exp(1j * np.outer(th, n))  # [i, n]
    return (ph * w) @ ph.conj().T / M


def gen_exp_onshell(spectrum: BetheSpectrum, a=None) -> complex:
    """det((1/M) sum_n e^{alpha_n + i n (theta_i - theta_j)})."""
    if spectrum.spec.N == 0:
        return 1.0
    return complex(np.linalg.det(_onshell_matrix(spectrum, a)))


def boltzmann_gen_exp(spectrum: BetheSpectrum, a=None, beta: float = 0.0) -> complex:
    """e^{beta h M/2} det(e^{-beta eps} e^{alpha}) on an on-shell state."""
    spec = spectrum.spec
    pref = math.exp(beta * spec.h * spec.M / 2)
    if spec.N == 0:
        return pref
    eps = np.array([single_energy(t, spec.h) for t in spectrum.theta])
    mat = np.diag(np.exp(-beta * eps)) @ _onshell_matrix(spectrum, a)
    return pref * complex(np.linalg.det(mat))


def boltzmann_double_sum(spectrum: BetheSpectrum, a=None, beta: float = 0.0) -> complex:
    """sum_{muL, muR} conj(S_L) e^{alpha_{muL}} G(muL -> muR; beta) S_R / norm^2."""
    spec = spectrum.spec
    M, N = spec.M, spec.N
    w = _weights(M, a)
    basis = flipped_basis(M, N)
    v = bethe_vector(spectrum)
    G = np.array([[amplitude_determinant(spec, mL, mR, beta) for mR in basis] for mL in basis])
    ew = np.array([math.prod(w[m - 1] for m in mu) for mu in basis])
    return complex(v.conj() @ (ew[:, None] * G) @ v) / spectrum.norm2


# ---------------------------------------------------------- dense oracle


def dense_hamiltonian(M: int, h: float, limit: int = DENSE_LIMIT) -> np.ndarray:
    """H on the full 2^M spin space; basis bit n set means spin n+1 is flipped (down)."""
    if M > limit:
        raise GuardError(f"dense_hamiltonian: M={M} exceeds limit M<={limit}")
    check_ring(M)
    sp = np.array([[0.0, 1.0], [0.0, 0.0]])  # raises a flipped (down) spin back up
    sm = sp.T
    sz = np.diag([0.5, -0.5])  # first basis state of each site is spin up
    eye = np.eye(2)

    def site_op(op, n):
        out = np.array([[1.0]])
        for k in range(M):
            out = np.kron(out, op if k == n else eye)
        return out

    D = delta_matrix(M)
    H = np.zeros((2**M, 2**M))
    for n in range(M):
        for m in range(M):
            if D[n][m]:
                H -= 0.5 * D[n][m] * site_op(sp, n) @ site_op(sm, m)
        H -= h * site_op(sz, n)
    return H


def dense_projector_weights(M: int, a=None) -> np.ndarray:
    """Diagonal of e^Q, Q = sum_n alpha_n q_n with q_n the projector on a flipped spin at n."""
    alpha = np.zeros(M) if a is None else np.asarray(a, dtype=float)
    diag = np.zeros(2**M)
    for s in range(2**M):
        # site n is the n-th tensor factor from the left
        bits = [(s >> (M - 1 - n)) & 1 for n in range(M)]
        diag[s] = sum(alpha[n] for n in range(M) if bits[n])
    return np.exp(diag)


def dense_trace(M: int, h: float, beta: float, a=None, limit: int = DENSE_LIMIT) -> float:
    """Tr(e^Q e^{-beta H}) by exact diagonalisation."""
    H = dense_hamiltonian(M, h, limit)
    evals, evecs = np.linalg.eigh(H)
    rho = (evecs * np.exp(-beta * evals)) @ evecs.T
    return float(np.sum(dense_projector_weights(M, a) * np.diag(rho)))
