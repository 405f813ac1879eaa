"""Exact counting: binomials, optimal column counts, and asymptotic estimates.

Everything here is exact arbitrary-precision integer arithmetic, with one
exception: asymptotic_rows, the only place in the package where floats appear.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "ALL_VARIANTS",
    "AsymptoticEstimate",
    "BoundParams",
    "VARIANT_11",
    "VARIANT_1_BAR1",
    "VARIANT_BAR1_1",
    "VARIANT_BAR1_BAR1",
    "VARIANT_LABELS",
    "Variant",
    "asymptotic_rows",
    "binary_entropy",
    "binomial",
    "bound_params",
    "inequality_failures",
    "max_columns",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), defined as 0 whenever k < 0, n < 0, or k > n.

    The zero convention lets sums with loose index limits be written directly.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class Variant:
    """Which array flavour is meant.

    d_barred: at most one faulty (column, symbol) cell instead of exactly one.
    t_barred: interactions of strength at most 1 (so the empty interaction,
    which every row covers, takes part) instead of exactly 1.
    """

    d_barred: bool
    t_barred: bool

    @property
    def label(self) -> str:
        if not self.d_barred and not self.t_barred:
            return "11"
        left = "bar1" if self.d_barred else "1"
        right = "bar1" if self.t_barred else "1"
        return f"{left}-{right}"


VARIANT_11 = Variant(d_barred=False, t_barred=False)
VARIANT_BAR1_1 = Variant(d_barred=True, t_barred=False)
VARIANT_1_BAR1 = Variant(d_barred=False, t_barred=True)
VARIANT_BAR1_BAR1 = Variant(d_barred=True, t_barred=True)
ALL_VARIANTS = (VARIANT_11, VARIANT_BAR1_1, VARIANT_1_BAR1, VARIANT_BAR1_BAR1)
VARIANT_LABELS = {v.label: v for v in ALL_VARIANTS}


@dataclass(frozen=True)
class BoundParams:
    """Derived quantities behind the optimal column count for a given n and v.

    f is the near-uniform block size floor((n+1)/v); d is the shortfall
    (f+1)*v - n, which equals v+1 exactly when n = v-1 (mod v); s and s_prime
    are the correction sums used by the two branches of the optimal-type
    construction; columns is the exact optimum for the base variant.
    """

    n: int
    v: int
    f: int
    d: int
    s: int
    s_prime: int
    columns: int


def bound_params(n: int, v: int) -> BoundParams:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if v < 2:
        raise ValueError(f"need v >= 2, got {v}")
    f = (n + 1) // v
    d = (f + 1) * v - n
    s = sum((d - f - 1 + i) * binomial(n, i) for i in range(f - d + 2, f))
    s_prime = sum((v - f + i) * binomial(n, i) for i in range(f - v + 1, f - 1))
    head = sum((f + 1 - i) * binomial(n, i) for i in range(f - d + 2, f + 1))
    tail = sum(binomial(n, i) for i in range(0, f - d + 2))
    return BoundParams(n, v, f, d, s, s_prime, head // d + tail)


def max_columns(n: int, v: int, variant: Variant = VARIANT_11) -> int:
    """Largest k for which an n x k array of the given variant exists.

    Exact for every n >= 1 and v >= 2; returns 0 when no array with a positive
    number of columns exists (v too large relative to n for the variant).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if v < 2:
        raise ValueError(f"need v >= 2, got {v}")
    if variant.d_barred:
        # every class must be nonempty, so v distinct classes need v <= n
        if v > n:
            return 0
        p = bound_params(n, v)
        weighted = sum((p.f + 1 - i) * binomial(n, i) for i in range(0, p.f + 1))
        if p.d >= p.f + 2 and weighted % p.d > p.f:
            return p.columns
        return p.columns - 1
    if variant.t_barred and v == 2:
        return (1 << (n - 1)) - 1
    if v > n + 1:
        return 0
    return bound_params(n, v).columns


@dataclass(frozen=True)
class AsymptoticEstimate:
    epsilon: float
    entropy: float
    estimated_rows: float


def binary_entropy(p: float) -> float:
    """H(p) in bits, with the usual convention H(0) = H(1) = 0."""
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def asymptotic_rows(k: int, v: int) -> AsymptoticEstimate:
    """Leading-order estimate of the rows needed for k columns on v symbols.

    For fixed v and large k the optimal row count behaves like
    v * log2(k) / (v*log2(v) - (v-1)*log2(v-1)); the entropy reported is the
    limiting per-row information H(1/v).
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if v < 2:
        raise ValueError(f"need v >= 2, got {v}")
    eps = 1.0 / v
    denom = v * math.log2(v) - (v - 1) * math.log2(v - 1)
    rows = v * math.log2(k) / denom
    return AsymptoticEstimate(epsilon=eps, entropy=binary_entropy(eps), estimated_rows=rows)


def inequality_failures(max_n: int = 200) -> list[str]:
    """Exact integer checks of the binomial bounds the constructions rely on.

    Covers the ratio identity, the two prefix-sum gaps at a = floor(n/v), and
    the two three-class step bounds. Returns one message per violation.
    """
    fails: list[str] = []
    for n in range(max_n + 1):
        row = [math.comb(n, i) for i in range(n + 1)]

        def c(i: int) -> int:
            return row[i] if 0 <= i <= n else 0

        for a in range(n + 1):
            if c(a - 1) * (n - a + 1) != a * c(a):
                fails.append(f"ratio identity fails at n={n}, a={a}")

        prefix = [0] * (n + 2)  # prefix[a] = sum of C(n, i) for i < a
        for i in range(n + 1):
            prefix[i + 1] = prefix[i] + row[i]

        for v in range(3, n):
            a = n // v
            if (v - 1) * prefix[a] >= c(a + 2):
                fails.append(f"prefix gap at a+2 fails for n={n}, v={v}")
            # doubled to compare (v-2)/2 * C(n,a) in integers
            if v >= 4 and (v - 2) * c(a) + 2 * (v - 1) * prefix[a] >= 2 * c(a + 1):
                fails.append(f"prefix gap at a+1 fails for n={n}, v={v}")

        if n >= 4:
            a = n // 3
            if n % 3 == 0 and c(a - 1) + 2 * c(a - 2) + c(a - 3) >= c(a + 1):
                fails.append(f"three-class step bound fails for n={n}")
            if n % 3 == 1 and c(a) + 4 * c(a - 1) + 2 * c(a - 2) >= 2 * c(a + 1):
                fails.append(f"three-class step bound fails for n={n}")
    return fails
