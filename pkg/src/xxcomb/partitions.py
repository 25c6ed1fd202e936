"""Strict/weak partitions, plane partitions in a box and the diagonal-slice bijection.

Conventions
-----------
A strict partition ``mu`` lists occupied sites in decreasing order.  Its weak
companion is ``lam[j] = mu[j] - (N - j)`` (0-based ``j``), i.e. ``mu = lam + delta``.

Enumerations are colexicographic: tuples are compared from the last part
towards the first, so ``(0,0) < (1,0) < (1,1)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator, Sequence


def staircase(N: int) -> tuple[int, ...]:
    if N < 1:
        raise ValueError("N must be >= 1")
    return tuple(range(N, 0, -1))


def is_strict(mu: Sequence[int]) -> bool:
    return all(mu[i] > mu[i + 1] for i in range(len(mu) - 1)) and (not mu or mu[-1] >= 1)


def is_weak(lam: Sequence[int]) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1)) and (not lam or lam[-1] >= 0)


def to_nonstrict(mu: Sequence[int]) -> tuple[int, ...]:
    mu = tuple(mu)
    if not is_strict(mu):
        raise ValueError(f"not a strict partition: {mu}")
    N = len(mu)
    return tuple(m - (N - j) for j, m in enumerate(mu))


def from_nonstrict(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    if not is_weak(lam):
        raise ValueError(f"not a weakly decreasing partition: {lam}")
    N = len(lam)
    return tuple(l + (N - j) for j, l in enumerate(lam))


def enumerate_partitions(N: int, cap: int) -> Iterator[tuple[int, ...]]:
    """All lam with N parts and cap >= lam_1 >= ... >= lam_N >= 0, colex order."""
    if N < 0 or cap < 0:
        raise ValueError("N and cap must be non-negative")
    for c in combinations_with_replacement(range(cap + 1), N):
        yield c[::-1]


def enumerate_strict(N: int, M: int) -> Iterator[tuple[int, ...]]:
    """Strict partitions of length N with parts <= M, colex order."""
    if N > M:
        return
    for c in combinations(range(1, M + 1), N):
        yield c[::-1]


@dataclass(frozen=True)
class PinnedSpec:
    """A strict set of sites ``k`` that every enumerated configuration must contain."""

    k: tuple[int, ...]

    def __post_init__(self):
        k = tuple(self.k)
        object.__setattr__(self, "k", k)
        if k and not is_strict(k):
            raise ValueError(f"pinned parts must be strictly decreasing and >= 1: {k}")

    @property
    def l(self) -> int:
        return len(self.k)

    def positions(self, mu: Sequence[int]) -> tuple[int, ...]:
        """1-based indices of the pinned parts inside ``mu``."""
        return tuple(list(mu).index(x) + 1 for x in self.k)


def enumerate_pinned(spec: PinnedSpec | Sequence[int], N: int, M: int) -> Iterator[tuple[int, ...]]:
    if not isinstance(spec, PinnedSpec):
        spec = PinnedSpec(tuple(spec))
    if spec.l > N:
        raise ValueError(f"{spec.l} pinned parts exceed N={N}")
    if spec.k and spec.k[0] > M:
        raise ValueError(f"pinned part {spec.k[0]} exceeds M={M}")
    need = set(spec.k)
    for mu in enumerate_strict(N, M):
        if need.issubset(mu):
            yield mu


# ---------------------------------------------------------------- plane partitions


@dataclass(frozen=True)
class PlanePartition:
    heights: tuple[tuple[int, ...], ...]
    box: int

    def __post_init__(self):
        h = tuple(tuple(int(v) for v in row) for row in self.heights)
        object.__setattr__(self, "heights", h)
        N = len(h)
        if any(len(row) != N for row in h):
            raise ValueError("heights must be an N x N array")
        for i in range(N):
            for j in range(N):
                v = h[i][j]
                if v < 0 or v > self.box:
                    raise ValueError(f"height {v} at ({i + 1},{j + 1}) outside [0, {self.box}]")
                if i + 1 < N and h[i + 1][j] > v:
                    raise ValueError("columns must weakly decrease downwards")
                if j + 1 < N and h[i][j + 1] > v:
                    raise ValueError("rows must weakly decrease to the right")

    @property
    def N(self) -> int:
        return len(self.heights)

    @property
    def volume(self) -> int:
        return sum(map(sum, self.heights))

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.heights[i][i] for i in range(self.N))

    def trace(self, s: int) -> int:
        return diag_trace(self, s)

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.heights])


def diag_trace(pp: PlanePartition, s: int) -> int:
    """Sum of pi_ij over N + j - i = s (1-based), s in 1..2N-1."""
    N = pp.N
    if not 1 <= s <= 2 * N - 1:
        raise ValueError(f"s={s} outside 1..{2 * N - 1}")
    return sum(pp.heights[i][i + s - N] for i in range(N) if 0 <= i + s - N < N)


def enumerate_plane_partitions(N: int, box: int) -> Iterator[PlanePartition]:
    """Boxed N x N plane partitions, filled row by row (row-major, each cell ascending)."""
    if N < 1 or box < 0:
        raise ValueError("need N >= 1 and box >= 0")
    cells = [(i, j) for i in range(N) for j in range(N)]
    grid = [[0] * N for _ in range(N)]

    def fill(c):
        if c == len(cells):
            yield PlanePartition(tuple(tuple(r) for r in grid), box)
            return
        i, j = cells[c]
        hi = box
        if i:
            hi = min(hi, grid[i - 1][j])
        if j:
            hi = min(hi, grid[i][j - 1])
        for v in range(hi + 1):
            grid[i][j] = v
            yield from fill(c + 1)
        grid[i][j] = 0

    yield from fill(0)


# ------------------------------------------------------ tableaux and GT patterns


def is_ssyt(tab: Sequence[Sequence[int]], shape: Sequence[int], n: int) -> bool:
    """Semistandard filling of ``shape`` with entries in 1..n (rows given top to bottom)."""
    if len(tab) != len(shape) or any(len(r) != s for r, s in zip(tab, shape)):
        return False
    for i, row in enumerate(tab):
        for j, v in enumerate(row):
            if not 1 <= v <= n:
                return False
            if j and row[j - 1] > v:
                return False
            if i and tab[i - 1][j] >= v:
                return False
    return True


def ssyt_to_gt(tab: Sequence[Sequence[int]], N: int) -> list[tuple[int, ...]]:
    """Rows g[m] (m = N..1) where g[m]_i counts entries <= m in row i; returned top row first."""
    return [tuple(sum(1 for v in tab[i] if v <= m) for i in range(m)) for m in range(N, 0, -1)]


def gt_to_ssyt(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Inverse of :func:`ssyt_to_gt`; ``rows[0]`` has N parts, ``rows[-1]`` one part."""
    N = len(rows[0])
    ext = {N - k: tuple(r) for k, r in enumerate(rows)}
    ext[0] = ()
    tab = []
    for i in range(N):
        row = []
        for m in range(1, N + 1):
            cur = ext[m][i] if i < m else 0
            prev = ext[m - 1][i] if i < m - 1 else 0
            row.extend([m] * (cur - prev))
        tab.append(tuple(row))
    return tuple(tab)


def enumerate_ssyt(shape: Sequence[int], n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux via interlacing chains; small shapes only."""
    shape = tuple(shape)

    def chains(top):
        m = len(top)
        if m == 1:
            yield [top]
            return
        ranges = [range(top[i + 1], top[i] + 1) for i in range(m - 1)]
        for below in product(*ranges):
            for rest in chains(below):
                yield [top] + rest

    if len(shape) != n:
        shape = shape + (0,) * (n - len(shape))
    for ch in chains(shape):
        yield gt_to_ssyt(ch)


def watermelon_to_pp(diagonal: Sequence[int], upper, lower, box: int) -> PlanePartition:
    """Glue two semistandard fillings of ``diagonal`` into a boxed plane partition.

    The k-th superdiagonal of the result is the GT row with N-k parts read off
    ``upper``; the subdiagonals come from ``lower`` the same way.
    """
    lam = tuple(diagonal)
    N = len(lam)
    if not is_weak(lam) or (lam and lam[0] > box):
        raise ValueError(f"diagonal {lam} is not a partition inside the box")
    for tab in (upper, lower):
        if not is_ssyt(tab, lam, N):
            raise ValueError("filling is not semistandard with entries <= N of the diagonal shape")
    gu, gl = ssyt_to_gt(upper, N), ssyt_to_gt(lower, N)
    grid = [[0] * N for _ in range(N)]
    for k in range(N):
        for i in range(N - k):
            grid[i][i + k] = gu[k][i]
            grid[i + k][i] = gl[k][i]
    return PlanePartition(tuple(tuple(r) for r in grid), box)


def pp_to_watermelon(pp: PlanePartition):
    """Return (diagonal, upper filling, lower filling)."""
    N = pp.N
    h = pp.heights
    gu = [tuple(h[i][i + k] for i in range(N - k)) for k in range(N)]
    gl = [tuple(h[i + k][i] for i in range(N - k)) for k in range(N)]
    return gu[0], gt_to_ssyt(gu), gt_to_ssyt(gl)
