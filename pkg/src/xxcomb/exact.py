"""Exact integer/rational kernels: binomials, lacunary sums, truncated series, determinants."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GuardError(ValueError):
    """Raised when an exhaustive computation would exceed its configured size limit."""


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def lacunary_binomial(K: int, L: int, R: int) -> int:
    """Sum of C(K, L + R*n) over n >= 0."""
    if R <= 0:
        raise ValueError("R must be positive")
    if K < 0 or L < 0:
        raise ValueError("K and L must be non-negative")
    return sum(math.comb(K, j) for j in range(L, K + 1, R))


def multinomial(ns: Iterable[int]) -> int:
    ns = list(ns)
    if any(n < 0 for n in ns):
        raise ValueError("multinomial entries must be non-negative")
    out, total = 1, 0
    for n in ns:
        total += n
        out *= math.comb(total, n)
    return out


def compositions(K: int, N: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of K into N non-negative parts, lexicographic."""
    if N == 0:
        if K == 0:
            yield ()
        return
    if N == 1:
        yield (K,)
        return
    for first in range(K, -1, -1):
        for rest in compositions(K - first, N - 1):
            yield (first,) + rest


class TruncatedSeries:
    """Power series in one variable with exact rational coefficients up to ``order``.

    The order is fixed at construction; binary operations demand equal orders
    and never read coefficients past it.
    """

    __slots__ = ("coeffs", "order", "var")

    def __init__(self, coeffs: Sequence, order: int | None = None, var: str = "beta"):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        coeffs = coeffs[: order + 1] + [Fraction(0)] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order
        self.var = var

    @classmethod
    def constant(cls, c, order: int, var: str = "beta") -> "TruncatedSeries":
        return cls([c], order, var)

    def _check(self, other: "TruncatedSeries") -> None:
        if other.order != self.order:
            raise ValueError(f"series orders differ: {self.order} vs {other.order}")
        if other.var != self.var:
            raise ValueError(f"series variables differ: {self.var} vs {other.var}")

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return other
        return TruncatedSeries.constant(other, self.order, self.var)

    def __getitem__(self, k: int) -> Fraction:
        if k < 0 or k > self.order:
            raise IndexError(f"coefficient {k} outside order {self.order}")
        return self.coeffs[k]

    def __add__(self, other):
        other = self._coerce(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order, self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries([a * c for a in self.coeffs], self.order, self.var)
        self._check(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.order + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out, self.order, self.var)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return (self.order, self.var, self.coeffs) == (other.order, other.var, other.coeffs)
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.var, self.coeffs))

    def __repr__(self):
        terms = [f"{c}*{self.var}^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"TruncatedSeries({' + '.join(terms) or '0'}; O({self.var}^{self.order + 1}))"


def bessel_i_series(nu: int, order: int, var: str = "beta") -> TruncatedSeries:
    """Series of the modified Bessel function I_nu(beta) through beta**order."""
    nu = abs(nu)
    coeffs = [Fraction(0)] * (order + 1)
    for K in range(nu, order + 1, 2):
        coeffs[K] = Fraction(1, 2**K * math.factorial((K - nu) // 2) * math.factorial((K + nu) // 2))
    return TruncatedSeries(coeffs, order, var)


def det_ring(matrix: Sequence[Sequence]):
    """Determinant over any commutative ring via Laplace expansion with memoised minors.

    Uses only +, - and *; cost is O(2**n * n) ring operations.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    # minors of the last k rows, keyed by the chosen column subset
    prev = {(): None}
    for depth in range(n - 1, -1, -1):
        row = matrix[depth]
        size = n - depth
        cur = {}
        for cols in combinations(range(n), size):
            acc = None
            for pos, c in enumerate(cols):
                rest = cols[:pos] + cols[pos + 1:]
                minor = prev[rest]
                term = row[c] if minor is None else row[c] * minor
                if pos % 2:
                    term = -term
                acc = term if acc is None else acc + term
            cur[cols] = acc
        prev = cur
    return prev[tuple(range(n))]


def series_det(matrix: Sequence[Sequence[TruncatedSeries]]) -> TruncatedSeries:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("series matrix must be square")
    if n == 0:
        raise ValueError("empty series matrix")
    first = matrix[0][0]
    for row in matrix:
        for entry in row:
            first._check(entry)
    return det_ring(matrix)


def det_exact(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a rational matrix by Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                row_r, row_c = a[r], a[col]
                for c in range(col + 1, n):
                    row_r[c] -= f * row_c[c]
    return sign * result


def extract_dk(series: TruncatedSeries, K: int) -> Fraction:
    """K-th derivative with respect to beta/2 at zero: 2**K * K! * [beta**K]."""
    if K < 0 or K > series.order:
        raise ValueError(f"K={K} exceeds series order {series.order}")
    return series.coeffs[K] * 2**K * math.factorial(K)


def is_exact(values: Iterable) -> bool:
    return all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in values)


def close(a: complex, b: complex, tol: float = 1e-9) -> bool:
    """Absolute-tolerance comparison for complex floats."""
    return abs(complex(a) - complex(b)) <= tol


@lru_cache(maxsize=None)
def barnes_g(n: int) -> int:
    """Barnes G(n) = prod_{k=1}^{n-1} Gamma(k) for integer n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = 1
    for k in range(1, n):
        out *= math.factorial(k - 1)
    return out
