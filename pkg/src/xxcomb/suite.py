"""Identity checks shared by the CLI ``identity-suite`` command and the demos.

Each check returns a list of :class:`Row`; ``level`` selects a minimal
("quick") or the full acceptance grid.
"""
from __future__ import annotations

import math
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import bethe, circulant, exact, genfun, partitions, symfun, walks


@dataclass
class Row:
    name: str
    passed: bool
    detail: str
    tol: str = "exact"


def _strict(N, top):
    return [c[::-1] for c in combinations(range(1, top + 1), N)]


def random_points(rng, N, lo=-9, hi=9, den=7):
    """N distinct nonzero rationals."""
    pts = set()
    while len(pts) < N:
        v = Fraction(rng.randint(lo, hi), rng.randint(1, den))
        if v:
            pts.add(v)
    return sorted(pts)


def check_golden_rows(level):
    p14 = circulant.circulant_power_formula(6, 14).entries
    p15 = circulant.circulant_power_formula(6, 15).entries
    ok = (p14[0], p14[2], p14[4]) == (5462, 5461, 5461) and not any(p14[1::2]) \
        and (p15[1], p15[5], p15[3]) == (10923, 10923, 10922) and not any(p15[0::2]) \
        and p15[1] == p14[0] + p14[2] and p15[3] == p14[2] + p14[4]
    return [Row("circulant: M=6 golden powers K=14,15", ok, f"K=14 {p14}; K=15 {p15}")]


def check_circulant(level):
    Kmax = 20 if level == "full" else 8
    bad = [(M, K) for M in (2, 4, 6, 8) for K in range(Kmax + 1)
           if circulant.circulant_power_formula(M, K) != circulant.circulant_power_oracle(M, K)]
    return [Row("circulant: lacunary formula = matrix power", not bad,
                f"M in 2..8, K<={Kmax}, mismatches {bad[:3]}")]


def check_ramus(level):
    nmax = 20 if level == "full" else 10
    worst = 0.0
    for R in range(1, 9):
        for n in range(nmax + 1):
            for t in range(R):
                trig, ex = circulant.ramus_sides(R, n, t)
                worst = max(worst, abs(trig - ex))
    return [Row("circulant: Ramus identity", worst <= 1e-9, f"max |trig - exact| = {worst:.3e}", "1e-9 abs")]


def check_generalized_ramus(level, seed=7):
    rng = random.Random(seed)
    pairs = 60 if level == "full" else 10
    worst_g = worst_d = 0.0
    for _ in range(pairs):
        M = rng.choice((4, 6, 8))
        N = rng.randint(1, 3)
        K = rng.randint(0, 6)
        muL = tuple(sorted(rng.sample(range(1, M + 1), N), reverse=True))
        muR = tuple(sorted(rng.sample(range(1, M + 1), N), reverse=True))
        lhs = circulant.generalized_ramus_lhs(M, K, muL, muR)
        rhs = circulant.generalized_ramus_rhs(M, K, muL, muR)
        worst_g = max(worst_g, abs(lhs - rhs) / max(1, abs(lhs)))
        dl, dr = circulant.det_ramus_identity(M, K, muL, muR)
        worst_d = max(worst_d, abs(dl - dr) / max(1, abs(dl)))
    return [Row("circulant: generalized Ramus", worst_g <= 1e-8, f"{pairs} pairs, max rel {worst_g:.2e}", "1e-8 rel"),
            Row("circulant: determinantal Ramus", worst_d <= 1e-8, f"{pairs} pairs, max rel {worst_d:.2e}", "1e-8 rel")]


def check_j_integral(level):
    Kmax = 8 if level == "full" else 4
    worst = 0.0
    for N in (1, 2, 3):
        for K in range(Kmax + 1):
            lhs = circulant.closed_staircase_count(K, N)
            worst = max(worst, abs(lhs - 2**K * circulant.j_integral(K, N)))
    return [Row("circulant: staircase count = 2^K J(K,N)", worst <= 1e-6, f"max abs {worst:.2e}", "1e-6 abs")]


def check_walks(level):
    Kmax = 6 if level == "full" else 3
    top = 5 if level == "full" else 4
    bad = 0
    bessel_bad = 0
    total = 0
    for N in (1, 2, 3):
        mus = _strict(N, top)
        for M in (None, 6, 8):
            for K in range(Kmax + 1):
                cfg = walks.WalkConfig(N, K, M)
                for a in mus:
                    dist = walks.oracle_distribution(cfg, a)
                    for b in mus:
                        total += 1
                        f = walks.count_formula(cfg, a, b)
                        if dist.get(tuple(sorted(b)), 0) != f:
                            bad += 1
                        if M is None:
                            dk = exact.extract_dk(walks.bessel_det_generating(a, b, K), K)
                            bessel_bad += dk != f
    return [Row("walks: determinant formula = enumeration", bad == 0, f"{total} cases, {bad} mismatches"),
            Row("walks: Bessel-series D^K = count", bessel_bad == 0, f"{bessel_bad} mismatches")]


def check_stays(level):
    bad = 0
    for M in (None, 6):
        for K in range(4 if level == "full" else 3):
            cfg = walks.WalkConfig(2, K, M, stays=True)
            for a in _strict(2, 4):
                for b in _strict(2, 4):
                    o = walks.oracle_count(cfg, a, b).by_stays
                    poly = walks.count_with_stays(cfg, a, b)
                    bad += [o[p] for p in range(K + 1)] != poly
    return [Row("walks: stays polynomial = enumeration with stays", bad == 0, f"{bad} mismatches")]


def check_schur(level, seed=11):
    rng = random.Random(seed)
    trials = 100 if level == "full" else 15
    bad = 0
    for _ in range(trials):
        N = rng.randint(1, 4)
        box = rng.randint(0, 4)
        lam = tuple(sorted((rng.randint(0, box) for _ in range(N)), reverse=True))
        x = random_points(rng, N)
        bad += symfun.schur_bialternant(lam, x) != symfun.schur_paths(lam, x)
    rows = [Row("symfun: bialternant = path sum", bad == 0, f"{trials} random rational cases, {bad} mismatches")]
    cb_bad = 0
    for N in (1, 2, 3):
        for L in range(5 if level == "full" else 3):
            x, y = random_points(rng, N), random_points(rng, N)
            cb_bad += symfun.cauchy_binet(N, L, x, y, check=False) != symfun.cauchy_binet_sum(N, L, x, y)
    rows.append(Row("symfun: Cauchy-Binet det = sum", cb_bad == 0, f"{cb_bad} mismatches"))
    pieri_bad = 0
    for lam in partitions.enumerate_partitions(3, 3):
        for _ in range(5 if level == "full" else 1):
            x = random_points(rng, 3)
            pieri_bad += not symfun.pieri_sum_check(lam, x)
    rows.append(Row("symfun: Pieri rule on the 3^3 box", pieri_bad == 0, f"{pieri_bad} failures"))
    return rows


def check_bethe(level):
    worst_r = worst_n = 0.0
    Ms = (4, 6, 8) if level == "full" else (4, 6)
    for M in Ms:
        for N in range(0, 4):
            spec = bethe.ChainSpec(M, N, 0.3)
            for I in bethe.all_quantum_numbers(M, N):
                s = bethe.bethe_roots(spec, I)
                worst_r = max(worst_r, bethe.eigen_residual(s))
                if N:
                    direct = sum(abs(symfun.schur_bialternant(l, s.points)) ** 2
                                 for l in partitions.enumerate_partitions(N, M - N))
                    worst_n = max(worst_n, abs(direct - s.norm2) / s.norm2)
    return [Row("bethe: eigen residual", worst_r <= 1e-10, f"max {worst_r:.2e}", "1e-10"),
            Row("bethe: norm formula = sum |S|^2", worst_n <= 1e-10, f"max rel {worst_n:.2e}", "1e-10 rel")]


def check_amplitudes(level):
    worst = 0.0
    for h in (0.0, 0.4):
        spec = bethe.ChainSpec(6, 2, h)
        basis = bethe.flipped_basis(6, 2)
        for a in basis:
            for b in basis:
                for beta in (0.3, 1.0):
                    worst = max(worst, abs(bethe.amplitude_spectral(spec, a, b, beta)
                                           - bethe.amplitude_determinant(spec, a, b, beta)))
    return [Row("bethe: spectral amplitude = determinant amplitude", worst <= 1e-10, f"max {worst:.2e}", "1e-10")]


def check_plane_partitions(level, seed=5):
    rng = random.Random(seed)
    rows = []
    bad = [(N, b) for N in (1, 2, 3) for b in range(4)
           if genfun.macmahon(N, b) != sum(1 for _ in partitions.enumerate_plane_partitions(N, b))]
    rows.append(Row("genfun: MacMahon = enumeration", not bad, f"N,box<=3; A(2,2,2)={genfun.macmahon(2, 2)}"))
    nt_bad = 0
    grid = [(N, b) for N in (1, 2, 3) for b in range(4)] if level == "full" else [(2, 2)]
    for N, b in grid:
        poly = genfun.norm_trace_sum(N, b)
        for _ in range(5):
            q = Fraction(rng.randint(1, 9), rng.randint(2, 11))
            g = Fraction(rng.randint(1, 9), rng.randint(1, 7))
            nt_bad += genfun.norm_trace_det(N, b, q, g) != poly(q, g)
    rows.append(Row("genfun: norm-trace determinant = enumeration", nt_bad == 0, f"{nt_bad} mismatches"))
    dc_bad = [(N, b) for N in (1, 2, 3) for b in range(4)
              if sum(genfun.diag_constrained_count(N, b, m) for m in range(0, N * (b + N) + 1)) != genfun.macmahon(N, b)]
    rows.append(Row("genfun: sum of diagonal-constrained counts = MacMahon", not dc_bad, f"failures {dc_bad}"))
    pin_bad = [(N, b, l) for N in (1, 2, 3) for b in range(3) for l in range(N + 1)
               if genfun.pinned_pp_count(N, b, partitions.staircase(l) if l else ()) != genfun.empty_corner_count(N, b, l)]
    rows.append(Row("genfun: pinned count = empty-corner enumeration", not pin_bad, f"failures {pin_bad}"))
    return rows


def check_traces(level):
    rows = []
    worst = 0.0
    for M in (2, 4):
        for beta in (0.1, 1.0, 3.0):
            for h in (0.0, 0.5):
                t = genfun.total_trace(bethe.ChainSpec(M, 0, h), None, beta).value
                d = bethe.dense_trace(M, h, beta)
                worst = max(worst, abs(t - d) / d)
    rows.append(Row("genfun: total trace = dense spin trace", worst <= 1e-10, f"max rel {worst:.2e}", "1e-10 rel"))
    worst = 0.0
    kern = genfun.FermiKernel(1.0, 0.3, 1, 4)
    for sites in ([1], [2], [3], [4], [2, 1], [3, 1], [4, 2], [4, 3]):
        m = genfun.minor_derivative(kern, sites)
        fd = genfun.finite_difference_minor(kern, sites)
        worst = max(worst, abs(m - fd) / abs(m))
    rows.append(Row("genfun: minors = finite differences of G", worst <= 1e-5, f"max rel {worst:.2e}", "1e-5 rel"))
    worst = max(abs(genfun.minor_derivative(genfun.FermiKernel(0.0), list(range(l, 0, -1))) - 2.0**-l)
                for l in range(1, 5))
    rows.append(Row("genfun: beta=0 infinite-chain correlator = 2^-l", worst <= 1e-10, f"max {worst:.2e}", "1e-10"))
    return rows


def check_trends(level):
    rows = []
    det = genfun.norm_trace_det(2, 30, 0.3, 0.8)
    prod = genfun.unbounded_products(2, 0.3, 0.8).double
    rows.append(Row("genfun: norm-trace -> unbounded product", abs(det - prod) <= 1e-8,
                    f"{det!r} vs {prod!r}", "1e-8 abs"))
    ratios = [abs(genfun.mehta_barnes(N, 1.0).gap) / math.log(N) for N in range(2, 13)]
    rows.append(Row("genfun: Barnes gap / log N <= 5", max(ratios) <= 5, f"max ratio {max(ratios):.3f} over N=2..12"))
    minus = [abs(genfun.total_trace(bethe.ChainSpec(M, 0, 0.2), None, 1.0).minus) for M in (2, 4, 6, 8, 10)]
    rows.append(Row("genfun: ell=-1 sector decays with M", all(b < a for a, b in zip(minus, minus[1:])),
                    ", ".join(f"{v:.2e}" for v in minus)))
    return rows


CHECKS = [check_golden_rows, check_circulant, check_ramus, check_generalized_ramus, check_j_integral,
          check_walks, check_stays, check_schur, check_bethe, check_amplitudes, check_plane_partitions,
          check_traces, check_trends]


def run_suite(level: str = "quick", threads: int | None = None) -> list[Row]:
    if level not in ("quick", "full"):
        raise ValueError("level must be quick or full")
    if threads is None:
        threads = max(1, int(os.environ.get("VW_THREADS", "1")))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(lambda c: c(level), CHECKS))
    return [row for rows in results for row in rows]
