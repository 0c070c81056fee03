"""Semi-diagrams: a brute-force combinatorial oracle for D^i and Delta^i.

A partition lam sits in a k x n box; cells (r, c) with c < lam[r] are shaded,
the rest hollow.  Minus marks turn shaded cells hollow, plus marks turn hollow
cells shaded.  The weight of a diagram is prod_r a_{s_r}, where s_r counts the
shaded cells of row r after marking (an empty row contributes a_0).

Summing weights over all ways of placing i indistinguishable marks gives
D^i(a_lam)/i! (minus) or Delta^i(a_lam)/i! (plus).  Nothing here calls the
operators module: this is the independent side of that comparison.

Enumeration is exponential, so inputs are capped at |lam| <= 12, nk <= 25.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator, Literal

from .poly import BoxPartition, Monomial, Polynomial

Mode = Literal["minus", "plus"]
Cell = tuple[int, int]

MAX_SIZE = 12
MAX_CELLS = 25


@dataclass(frozen=True)
class SemiDiagram:
    shape: BoxPartition
    minus_cells: frozenset[Cell]
    plus_cells: frozenset[Cell]

    def row_counts(self) -> tuple[int, ...]:
        counts = list(self.shape.parts)
        for r, _ in self.minus_cells:
            counts[r] -= 1
        for r, _ in self.plus_cells:
            counts[r] += 1
        return tuple(counts)

    def weight(self) -> Monomial:
        return _weight(self.row_counts(), self.shape.box_n)


def _weight(counts, n: int) -> Monomial:
    exps = [0] * (n + 1)
    for s in counts:
        exps[s] += 1
    return tuple(exps)


def _validate(lam: BoxPartition) -> None:
    if lam.size > MAX_SIZE or lam.box_k * lam.box_n > MAX_CELLS:
        raise ValueError(
            f"diagram oracle is capped at |lam| <= {MAX_SIZE} and nk <= {MAX_CELLS}"
        )


def shaded_cells(lam: BoxPartition) -> list[Cell]:
    return [(r, c) for r, part in enumerate(lam.parts) for c in range(part)]


def hollow_cells(lam: BoxPartition) -> list[Cell]:
    return [(r, c) for r, part in enumerate(lam.parts) for c in range(part, lam.box_n)]


def _mode(mode: str) -> Mode:
    if mode not in ("minus", "plus"):
        raise ValueError(f"unknown mode {mode!r}; expected minus or plus")
    return mode  # type: ignore[return-value]


def iter_semi_diagrams(lam: BoxPartition, i: int, mode: str) -> Iterator[SemiDiagram]:
    mode = _mode(mode)
    _validate(lam)
    cells = shaded_cells(lam) if mode == "minus" else hollow_cells(lam)
    if not 0 <= i <= len(cells):
        return
    empty: frozenset[Cell] = frozenset()
    for chosen in combinations(cells, i):
        marks = frozenset(chosen)
        if mode == "minus":
            yield SemiDiagram(lam, marks, empty)
        else:
            yield SemiDiagram(lam, empty, marks)


def enumerate_semi_diagrams(lam: BoxPartition, i: int, mode: str) -> list[SemiDiagram]:
    """Every i-subset of eligible cells, row-major cells, lexicographic subsets."""
    return list(iter_semi_diagrams(lam, i, mode))


def oracle_weight_sum(lam: BoxPartition, i: int, mode: str) -> Polynomial:
    """Sum of the weights of the diagrams with i marks (coefficient of z^i)."""
    counts: dict[Monomial, int] = {}
    for d in iter_semi_diagrams(lam, i, mode):
        w = d.weight()
        counts[w] = counts.get(w, 0) + 1
    return Polynomial(lam.box_n, counts)


@dataclass(frozen=True)
class CommutatorCensus:
    lam: BoxPartition
    i: int
    pm_factor: int  # i (nk - m - (i-1))
    mp_factor: int  # i m
    pm_sum: Polynomial  # weights of D Delta^i configurations with a +- cell
    mp_sum: Polynomial  # weights of Delta^i D configurations with a -+ cell
    plain_pm_side: Polynomial  # D Delta^i configurations without a +- cell
    plain_mp_side: Polynomial  # Delta^i D configurations without a -+ cell
    base: Polynomial  # Delta^{i-1}(a_lam), by placing i-1 distinguishable plus signs

    @property
    def c(self) -> int:
        return self.lam.box_n * self.lam.box_k - 2 * self.lam.size

    @property
    def difference_factor(self) -> int:
        return self.pm_factor - self.mp_factor

    @property
    def ok(self) -> bool:
        return (
            self.pm_sum == self.base.scale(self.pm_factor)
            and self.mp_sum == self.base.scale(self.mp_factor)
            and self.plain_pm_side == self.plain_mp_side
            and self.difference_factor == self.i * (self.c - self.i + 1)
        )


def _distinguishable_sum(lam: BoxPartition, j: int) -> Polynomial:
    # ordered placements of j distinguishable plus signs into hollow cells
    counts: dict[Monomial, int] = {}
    base = list(lam.parts)
    for chosen in permutations(hollow_cells(lam), j):
        row = list(base)
        for r, _ in chosen:
            row[r] += 1
        w = _weight(row, lam.box_n)
        counts[w] = counts.get(w, 0) + 1
    return Polynomial(lam.box_n, counts)


def commutator_census(lam: BoxPartition, i: int) -> CommutatorCensus:
    """Literal count of the marked configurations behind D Delta^i - Delta^i D.

    D Delta^i: i distinguishable plus signs go into distinct hollow cells, then
    one minus sign goes into a shaded cell.  If that cell carries a plus sign
    it is a "+-" cell.

    Delta^i D: one minus sign goes into a shaded cell, then i distinguishable
    plus signs go into distinct hollow cells (the minus cell is now hollow).
    If a plus sign lands on the minus cell it is a "-+" cell.
    """
    if i < 1:
        raise ValueError("i must be at least 1")
    _validate(lam)
    n, k, m = lam.box_n, lam.box_k, lam.size
    hollow = hollow_cells(lam)
    shaded = shaded_cells(lam)
    pm: dict[Monomial, int] = {}
    plain_pm: dict[Monomial, int] = {}
    for chosen in permutations(hollow, i):
        row = list(lam.parts)
        for r, _ in chosen:
            row[r] += 1
        plus = set(chosen)
        for cell in shaded + list(chosen):
            r = cell[0]
            row[r] -= 1
            w = _weight(row, n)
            row[r] += 1
            target = pm if cell in plus else plain_pm
            target[w] = target.get(w, 0) + 1
    mp: dict[Monomial, int] = {}
    plain_mp: dict[Monomial, int] = {}
    for minus in shaded:
        row = list(lam.parts)
        row[minus[0]] -= 1
        for chosen in permutations(hollow + [minus], i):
            after = list(row)
            for r, _ in chosen:
                after[r] += 1
            w = _weight(after, n)
            target = mp if minus in chosen else plain_mp
            target[w] = target.get(w, 0) + 1
    return CommutatorCensus(
        lam=lam,
        i=i,
        pm_factor=i * (n * k - m - (i - 1)),
        mp_factor=i * m,
        pm_sum=Polynomial(n, pm),
        mp_sum=Polynomial(n, mp),
        plain_pm_side=Polynomial(n, plain_pm),
        plain_mp_side=Polynomial(n, plain_mp),
        base=_distinguishable_sum(lam, i - 1),
    )


def census_residual(census: CommutatorCensus) -> Polynomial:
    """(pm_sum - mp_sum) - i(c-i+1) Delta^{i-1}(a_lam); zero when the census holds."""
    factor = Fraction(census.i * (census.c - census.i + 1))
    return census.pm_sum - census.mp_sum - census.base.scale(factor)
