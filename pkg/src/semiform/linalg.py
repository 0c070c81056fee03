"""Fraction-free elimination on sparse integer vectors.

Vectors are ``dict[int, int]`` mapping a column index to a nonzero entry.
Rows are kept primitive (content 1, positive leading entry) after every
combination, which keeps integer growth in check without ever leaving Z.
Pivots are chosen deterministically: a new row is reduced by existing pivots
in order of its leading column, and becomes a pivot at the first column no
earlier row claims.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

Vector = dict[int, int]


def integer_vector(v: Mapping[int, int | Fraction]) -> Vector:
    """Scale a rational vector to a primitive integer vector (same span)."""
    den = 1
    for x in v.values():
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    out = {c: int(x * den) for c, x in v.items() if x}
    return primitive(out)


def primitive(v: Vector) -> Vector:
    if not v:
        return v
    g = gcd(*v.values())
    if v[min(v)] < 0:
        g = -g
    if g == 1:
        return v
    return {c: x // g for c, x in v.items()}


def _eliminate(row: Vector, pivot: Vector, col: int) -> Vector:
    a = pivot[col]
    b = row[col]
    g = gcd(a, b)
    a //= g
    b //= g
    out = {c: a * x for c, x in row.items()} if a != 1 else dict(row)
    for c, y in pivot.items():
        v = out.get(c, 0) - b * y
        if v:
            out[c] = v
        else:
            out.pop(c, None)
    # content can only grow when the row was scaled
    return primitive(out) if a != 1 else out


class Echelon:
    """Incrementally built row echelon form over Z."""

    def __init__(self):
        self.pivots: dict[int, Vector] = {}

    def reduce(self, v: Mapping[int, int | Fraction]) -> Vector:
        """Remainder of v after leading-term reduction (zero iff v is in the span)."""
        r = integer_vector(v)
        while r:
            lead = min(r)
            p = self.pivots.get(lead)
            if p is None:
                break
            r = _eliminate(r, p, lead)
        return r

    def insert(self, v: Mapping[int, int | Fraction]) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        self.pivots[min(r)] = primitive(r)
        return True

    def extend(self, vs: Iterable[Mapping[int, int | Fraction]]) -> "Echelon":
        for v in vs:
            self.insert(v)
        return self

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def contains(self, v: Mapping[int, int | Fraction]) -> bool:
        return not self.reduce(v)

    def reduced(self) -> list[Vector]:
        """Reduced echelon rows, ordered by pivot column, each primitive."""
        cols = sorted(self.pivots)
        rows = {c: dict(self.pivots[c]) for c in cols}
        for c in reversed(cols):
            p = rows[c]
            for other in cols:
                if other != c and c in rows[other]:
                    rows[other] = _eliminate(rows[other], p, c)
        return [primitive(rows[c]) for c in cols]


def rank(rows: Iterable[Mapping[int, int | Fraction]]) -> int:
    return Echelon().extend(rows).rank


def kernel(rows: Iterable[Mapping[int, int | Fraction]], ncols: int) -> list[Vector]:
    """Basis of {x : row . x = 0 for every row}, in reduced echelon normal form.

    Each basis vector is a primitive integer vector whose first nonzero entry
    is positive; the basis is sorted by leading column.
    """
    return kernel_from_reduced(Echelon().extend(rows).reduced(), ncols)


def kernel_from_reduced(red: list[Vector], ncols: int) -> list[Vector]:
    pivot_cols = {min(r): r for r in red}
    free = [c for c in range(ncols) if c not in pivot_cols]
    raw = []
    for f in free:
        scale = 1
        for c, r in pivot_cols.items():
            if f in r:
                scale = lcm(scale, r[c])
        vec = {f: scale}
        for c, r in pivot_cols.items():
            if f in r:
                vec[c] = -r[f] * (scale // r[c])
        raw.append(vec)
    return Echelon().extend(raw).reduced()


def dot(u: Mapping[int, int], v: Mapping[int, int]) -> int:
    if len(u) > len(v):
        u, v = v, u
    return sum(x * v.get(c, 0) for c, x in u.items())
