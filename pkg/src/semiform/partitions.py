"""Partitions in a k x n box and the Gaussian coefficients they count."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .errors import TheoremViolation
from .poly import BoxPartition


@dataclass(frozen=True)
class GaussianCoefficient:
    n: int
    k: int
    coeffs: tuple[int, ...]

    def __getitem__(self, m: int) -> int:
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return 0


@dataclass(frozen=True)
class DeltaTable:
    n: int
    k: int
    values: tuple[int, ...]  # values[m] = delta(k, n, m) for 0 <= m <= nk//2


@dataclass(frozen=True)
class UnimodalityReport:
    n: int
    k: int
    violations: tuple[int, ...]
    unimodal: bool
    coeffs: tuple[int, ...] = field(repr=False)

    @property
    def strictly_unimodal(self) -> bool:
        return not self.violations


def _descending(k: int, n: int, m: int) -> Iterator[tuple[int, ...]]:
    # parts of m into at most k parts bounded by n, largest part first
    if m == 0:
        yield (0,) * k
        return
    if k == 0 or m > n * k:
        return
    for first in range(min(n, m), 0, -1):
        if first * k < m:
            break
        for rest in _descending(k - 1, first, m - first):
            yield (first,) + rest


def enumerate_box_partitions(k: int, n: int, m: int) -> list[BoxPartition]:
    """All partitions of m inside a k x n box, descending lexicographic order."""
    if k < 0 or n < 0 or m < 0:
        raise ValueError("k, n, m must be non-negative")
    return [BoxPartition(parts, k, n) for parts in _descending(k, n, m)]


def _q_pascal(n: int, k: int) -> tuple[int, ...]:
    # G(j, i) over a j-wide, i-tall box: G(j, i) = G(j, i-1) + q^i G(j-1, i)
    # table[j] holds the coefficient list for width j and the current height
    table = [[1] for _ in range(n + 1)]
    for i in range(1, k + 1):
        new = [[1]]
        for j in range(1, n + 1):
            fewer = table[j]  # at most i-1 parts
            full = new[j - 1]  # exactly i parts: remove first column
            out = [0] * (i * j + 1)
            for m, v in enumerate(fewer):
                out[m] += v
            for m, v in enumerate(full):
                out[m + i] += v
            new.append(out)
        table = new
    return tuple(table[n])


def _poly_mul_binomial(coeffs: list[int], a: int) -> list[int]:
    # multiply by (1 - q^a)
    out = coeffs + [0] * a
    for m, v in enumerate(coeffs):
        out[m + a] -= v
    return out


def _poly_div_binomial(coeffs: list[int], a: int) -> list[int]:
    # exact division by (1 - q^a)
    quot = [0] * (len(coeffs) - a)
    rem = list(coeffs)
    for m in range(len(quot)):
        quot[m] = rem[m]
        rem[m + a] += rem[m]
        rem[m] = 0
    if any(rem):
        raise TheoremViolation("q-factorial quotient is not a polynomial")
    return quot


def q_factorial_ratio(n: int, k: int) -> tuple[int, ...]:
    """prod_{i=1..k} (1 - q^{n+i}) / (1 - q^i), by exact polynomial division."""
    coeffs = [1]
    for i in range(1, k + 1):
        coeffs = _poly_mul_binomial(coeffs, n + i)
    for i in range(1, k + 1):
        coeffs = _poly_div_binomial(coeffs, i)
    return tuple(coeffs)


@lru_cache(maxsize=512)
def gaussian_coefficient(n: int, k: int) -> GaussianCoefficient:
    if n < 0 or k < 0:
        raise ValueError("n, k must be non-negative")
    coeffs = _q_pascal(n, k)
    if coeffs != q_factorial_ratio(n, k):
        raise TheoremViolation(f"q-Pascal and q-factorial disagree for n={n}, k={k}")
    return GaussianCoefficient(n, k, coeffs)


def count_p(k: int, n: int, m: int) -> int:
    """p(k, n, m): partitions of m inside a k x n box (0 for m out of range)."""
    if k < 0 or n < 0:
        raise ValueError("k, n must be non-negative")
    return gaussian_coefficient(n, k)[m]


def delta(k: int, n: int, m: int) -> int:
    if not 0 <= m <= n * k // 2:
        raise ValueError(f"m={m} outside [0, {n * k // 2}]")
    return count_p(k, n, m) - count_p(k, n, m - 1)


def delta_table(n: int, k: int) -> DeltaTable:
    return DeltaTable(n, k, tuple(delta(k, n, m) for m in range(n * k // 2 + 1)))


def strict_unimodality_report(n: int, k: int) -> UnimodalityReport:
    """Every m in [2, nk/2] where p(k,n,m) > p(k,n,m-1) fails."""
    if n < 1 or k < 1:
        raise ValueError("n, k must be at least 1")
    g = gaussian_coefficient(n, k)
    c = g.coeffs
    violations = tuple(m for m in range(2, n * k // 2 + 1) if c[m] <= c[m - 1])
    peak = max(range(len(c)), key=lambda m: (c[m], -m))
    unimodal = all(c[m] >= c[m - 1] for m in range(1, peak + 1)) and all(
        c[m] <= c[m - 1] for m in range(peak + 1, len(c))
    )
    return UnimodalityReport(n, k, violations, unimodal, c)
