"""The weight-lowering operator D, the weight-raising operator Delta, shears.

    D     = sum_{j=1..n} j a_{j-1} d/da_j
    Delta = sum_{j=0..n-1} (n-j) a_{j+1} d/da_j

Horizontal shear sends a_i to sum_t C(i,t) a_{i-t} z^t, vertical shear sends
a_i to sum_t C(n-i,t) a_{i+t} z^t.  Expanding a polynomial under a shear and
collecting powers of z must reproduce D^t/t! (resp. Delta^t/t!).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Literal

from .poly import BoxPartition, Monomial, Polynomial

Which = Literal["D", "Delta"]
Direction = Literal["horizontal", "vertical"]

_DIRECTIONS = {"h": "horizontal", "horizontal": "horizontal", "v": "vertical", "vertical": "vertical"}


def normalize_direction(direction: str) -> Direction:
    try:
        return _DIRECTIONS[direction]  # type: ignore[return-value]
    except KeyError:
        raise ValueError(f"unknown shear direction {direction!r}")


@dataclass(frozen=True)
class SpaceSignature:
    n: int
    k: int
    m: int

    @property
    def c(self) -> int:
        return self.n * self.k - 2 * self.m

    @property
    def in_sylvester_range(self) -> bool:
        return 0 <= 2 * self.m <= self.n * self.k

    @classmethod
    def of(cls, p: Polynomial) -> "SpaceSignature":
        hw = p.homogeneity()
        if hw is None:
            raise ValueError("polynomial is zero or not homogeneous-isobaric")
        return cls(p.n, hw[0], hw[1])


@dataclass(frozen=True)
class ShearExpansion:
    context_n: int
    direction: Direction
    coefficients: tuple[Polynomial, ...]

    def __getitem__(self, i: int) -> Polynomial:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Polynomial.zero(self.context_n)

    def __len__(self):
        return len(self.coefficients)


def _apply(p: Polynomial, step: int) -> Polynomial:
    # step=-1: D, moves exponent from a_j to a_{j-1} with factor j
    # step=+1: Delta, moves exponent from a_j to a_{j+1} with factor n-j
    n = p.n
    out: dict[Monomial, Fraction] = {}
    for mono, c in p.terms.items():
        for j, e in enumerate(mono):
            if not e:
                continue
            t = j + step
            if t < 0 or t > n:
                continue
            factor = j if step < 0 else n - j
            new = list(mono)
            new[j] -= 1
            new[t] += 1
            new = tuple(new)
            out[new] = out.get(new, 0) + c * (factor * e)
    return Polynomial(n, {m: v for m, v in out.items() if v})


def apply_D(p: Polynomial) -> Polynomial:
    return _apply(p, -1)


def apply_Delta(p: Polynomial) -> Polynomial:
    return _apply(p, +1)


def operator_power(which: Which, i: int, p: Polynomial) -> Polynomial:
    if i < 0:
        raise ValueError("operator power must be non-negative")
    op = _operator(which)
    for _ in range(i):
        if p.is_zero():
            break
        p = op(p)
    return p


def _operator(which: str):
    if which == "D":
        return apply_D
    if which in ("Delta", "Δ"):
        return apply_Delta
    raise ValueError(f"unknown operator {which!r}; expected D or Delta")


def _variable_images(n: int, direction: Direction) -> list[list[tuple[int, int, int]]]:
    # images[i] = [(z power, target index, binomial)]
    images = []
    for i in range(n + 1):
        if direction == "horizontal":
            images.append([(t, i - t, comb(i, t)) for t in range(i + 1)])
        else:
            images.append([(t, i + t, comb(n - i, t)) for t in range(n - i + 1)])
    return images


def shear_expand(p: Polynomial, direction: str = "horizontal") -> ShearExpansion:
    """Substitute the sheared coefficients and collect by powers of z.

    Trailing zero coefficients are dropped, so the result for a semi-invariant
    (horizontal) has length 1.
    """
    direction = normalize_direction(direction)
    n = p.n
    images = _variable_images(n, direction)
    collected: dict[tuple[int, Monomial], Fraction] = {}
    for mono, c in p.terms.items():
        # expand the product of images, one variable occurrence at a time
        partial: dict[tuple[int, tuple[int, ...]], int] = {(0, (0,) * (n + 1)): 1}
        for i, e in enumerate(mono):
            for _ in range(e):
                nxt: dict[tuple[int, tuple[int, ...]], int] = {}
                for (zp, exps), v in partial.items():
                    for t, target, b in images[i]:
                        new = list(exps)
                        new[target] += 1
                        key = (zp + t, tuple(new))
                        nxt[key] = nxt.get(key, 0) + v * b
                partial = nxt
        for key, v in partial.items():
            collected[key] = collected.get(key, 0) + c * v
    top = max((zp for (zp, _), v in collected.items() if v), default=0)
    buckets: list[dict[Monomial, Fraction]] = [{} for _ in range(top + 1)]
    for (zp, exps), v in collected.items():
        if v:
            buckets[zp][exps] = v
    return ShearExpansion(n, direction, tuple(Polynomial(n, b) for b in buckets))


@dataclass(frozen=True)
class TaylorCheck:
    ok: bool
    direction: Direction
    length: int
    first_mismatch: int | None = None
    residual: Polynomial | None = None


def taylor_check(p: Polynomial, direction: str = "horizontal") -> TaylorCheck:
    """Compare the shear expansion with op^i(p)/i! for every i."""
    direction = normalize_direction(direction)
    expansion = shear_expand(p, direction)
    op = apply_D if direction == "horizontal" else apply_Delta
    power = p
    i = 0
    while True:
        expected = power / factorial(i)
        got = expansion[i]
        if got != expected:
            return TaylorCheck(False, direction, len(expansion), i, got - expected)
        if power.is_zero() and i >= len(expansion):
            return TaylorCheck(True, direction, len(expansion))
        power = op(power)
        i += 1


def signature_of_partition(lam: BoxPartition) -> SpaceSignature:
    return SpaceSignature(lam.box_n, lam.box_k, lam.size)


def hilbert_commutator_residual(lam: BoxPartition, i: int) -> Polynomial:
    """D Delta^i(a_lam) - Delta^i D(a_lam) - i(c-i+1) Delta^{i-1}(a_lam)."""
    if i < 1:
        raise ValueError("i must be at least 1")
    c = signature_of_partition(lam).c
    a = Polynomial.from_partition(lam)
    lower = operator_power("Delta", i - 1, a)
    lhs = apply_D(apply_Delta(lower)) - operator_power("Delta", i, apply_D(a))
    return lhs - lower.scale(i * (c - i + 1))


def second_hilbert_residual(lam: BoxPartition, i: int) -> Polynomial:
    """D^i Delta(a_lam) - Delta D^i(a_lam) - i(c+i-1) D^{i-1}(a_lam)."""
    if i < 1:
        raise ValueError("i must be at least 1")
    c = signature_of_partition(lam).c
    a = Polynomial.from_partition(lam)
    lower = operator_power("D", i - 1, a)
    lhs = operator_power("D", i, apply_Delta(a)) - apply_Delta(apply_D(lower))
    return lhs - lower.scale(i * (c + i - 1))


def cayley_check(I: Polynomial, sig: SpaceSignature, i: int) -> bool:
    """D Delta^i(I) == i(c-i+1) Delta^{i-1}(I) for a semi-invariant I."""
    if i < 1:
        raise ValueError("i must be at least 1")
    if I.n != sig.n:
        raise ValueError(f"polynomial has n={I.n}, signature has n={sig.n}")
    if not sig.in_sylvester_range:
        raise ValueError(f"weight m={sig.m} outside [0, nk/2] for n={sig.n}, k={sig.k}")
    if not I.is_zero():
        hw = I.homogeneity()
        if hw != (sig.k, sig.m):
            raise ValueError(f"polynomial has (degree, weight) {hw}, expected {(sig.k, sig.m)}")
    if not apply_D(I).is_zero():
        raise ValueError("input is not a semi-invariant: D(I) != 0")
    lower = operator_power("Delta", i - 1, I)
    return apply_D(apply_Delta(lower)) == lower.scale(i * (sig.c - i + 1))

