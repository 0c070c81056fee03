"""Sparse polynomials in the coefficients a_0, ..., a_n of a binary n-form.

A monomial is a plain tuple of exponents ``(nu_0, ..., nu_n)``.  Coefficients
are :class:`fractions.Fraction`.  Every polynomial carries its form degree
``n`` explicitly, and binary operations refuse to mix contexts.

Terms are always reported in the canonical order: monomials sorted by their
associated partitions in descending lexicographic order, so that
``a4*a2`` comes before ``a4*a1^2`` which comes before ``a3^2``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Union

from .errors import ContextError

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


def degree(mono: Monomial) -> int:
    return sum(mono)


def weight(mono: Monomial) -> int:
    return sum(i * e for i, e in enumerate(mono))


def monomial_key(mono: Monomial) -> tuple[int, ...]:
    """Partition associated with a monomial, parts in weakly decreasing order."""
    parts: list[int] = []
    for j in range(len(mono) - 1, -1, -1):
        parts.extend([j] * mono[j])
    return tuple(parts)


@dataclass(frozen=True)
class BoxPartition:
    """A partition with at most ``box_k`` parts, each at most ``box_n``.

    ``parts`` is always stored with exactly ``box_k`` entries (zero padded).
    """

    parts: tuple[int, ...]
    box_k: int
    box_n: int

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if self.box_k < 0 or self.box_n < 0:
            raise ValueError("box dimensions must be non-negative")
        if len(parts) > self.box_k:
            extra = parts[self.box_k:]
            if any(extra):
                raise ValueError(
                    f"partition {parts} has more than {self.box_k} nonzero parts"
                )
            parts = parts[: self.box_k]
        parts = parts + (0,) * (self.box_k - len(parts))
        for idx, x in enumerate(parts):
            if x < 0 or x > self.box_n:
                raise ValueError(
                    f"part at index {idx} is {x}, outside [0, {self.box_n}]"
                )
            if idx and x > parts[idx - 1]:
                raise ValueError(
                    f"part at index {idx} is {x}, larger than the previous part"
                )
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @classmethod
    def parse(cls, text: str, box_k: int, box_n: int) -> "BoxPartition":
        text = text.strip()
        items = [s for s in text.split(",") if s.strip()] if text else []
        parts = []
        for idx, s in enumerate(items):
            try:
                parts.append(int(s))
            except ValueError:
                raise ValueError(f"part at index {idx} is not an integer: {s!r}")
        return cls(tuple(parts), box_k, box_n)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partition_monomial(lam: BoxPartition) -> Monomial:
    """The monomial a_{lam_1} ... a_{lam_k}; zero parts contribute a_0."""
    exps = [0] * (lam.box_n + 1)
    for part in lam.parts:
        exps[part] += 1
    return tuple(exps)


def monomial_partition(mono: Monomial, k: int) -> BoxPartition:
    if degree(mono) != k:
        raise ValueError(f"monomial {mono} has degree {degree(mono)}, expected {k}")
    return BoxPartition(monomial_key(mono), k, len(mono) - 1)


def _as_fraction(c: Scalar | str) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial over Q in a_0, ..., a_n."""

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, Scalar] | None = None):
        if n < 0:
            raise ValueError("form degree n must be non-negative")
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n + 1:
                raise ContextError(
                    f"monomial {mono} has length {len(mono)}, expected {n + 1}"
                )
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = _as_fraction(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self._n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict[Monomial, Fraction]) -> "Polynomial":
        # trusted constructor: terms already normalized
        p = cls.__new__(cls)
        p._n = n
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls._raw(n, {(0,) * (n + 1): Fraction(1)})

    @classmethod
    def var(cls, n: int, i: int) -> "Polynomial":
        if not 0 <= i <= n:
            raise ValueError(f"a_{i} is not a coefficient of a binary {n}-form")
        exps = [0] * (n + 1)
        exps[i] = 1
        return cls._raw(n, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Scalar = 1) -> "Polynomial":
        return cls(len(mono) - 1, {tuple(mono): coeff})

    @classmethod
    def from_partition(cls, lam: BoxPartition) -> "Polynomial":
        return cls._raw(lam.box_n, {partition_monomial(lam): Fraction(1)})

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: monomial_key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def coeff(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def homogeneity(self) -> tuple[int, int] | None:
        """(degree, weight) shared by every term, or None.

        The zero polynomial has no well-defined signature and returns None.
        """
        sig = None
        for mono in self._terms:
            s = (degree(mono), weight(mono))
            if sig is None:
                sig = s
            elif s != sig:
                return None
        return sig

    # arithmetic -----------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self._n != other._n:
            raise ContextError(f"context mismatch: n={self._n} vs n={other._n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.one(self._n).scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            v = out.get(mono, 0) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        return Polynomial._raw(self._n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self._n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self._n)
        return Polynomial._raw(self._n, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = tuple(x + y for x, y in zip(m1, m2))
                out[mono] = out.get(mono, 0) + c1 * c2
        return Polynomial._raw(self._n, {m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.one(self._n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._n == other._n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._terms
            return self == Polynomial.one(self._n).scale(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    # presentation ---------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for idx, (mono, c) in enumerate(self.sorted_terms()):
            factors = []
            for j in range(len(mono)):
                if mono[j] == 1:
                    factors.append(f"a{j}")
                elif mono[j] > 1:
                    factors.append(f"a{j}^{mono[j]}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if idx == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"Polynomial(n={self._n}, {self})"

    def to_json(self) -> dict:
        return {
            "n": self._n,
            "terms": [
                {"exponents": list(mono), "coeff": f"{c.numerator}/{c.denominator}"}
                for mono, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["n"])
        terms: dict[Monomial, Fraction] = {}
        for t in data["terms"]:
            mono = tuple(int(e) for e in t["exponents"])
            if mono in terms:
                raise ValueError(f"duplicate monomial {mono} in JSON input")
            terms[mono] = Fraction(str(t["coeff"]))
        return cls(n, terms)


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def homogeneity(p: Polynomial) -> tuple[int, int] | None:
    return p.homogeneity()


_TERM = re.compile(r"\s*([+-]?)\s*([^+-]+)")
_FACTOR = re.compile(r"a_?\{?(\d+)\}?(?:\^\{?(\d+)\}?)?")
_COEFF = re.compile(r"^\s*(\d+(?:/\d+)?)\s*\*?\s*")


def parse_polynomial(text: str, n: int) -> Polynomial:
    """Parse expressions such as ``3a_1^2 a_2^2 - 4a_1^3a_3 + a0*a4``.

    Products may be written by juxtaposition or with ``*``; variables as
    ``a3``, ``a_3`` or ``a_{3}``.
    """
    text = text.strip()
    if text in ("", "0"):
        return Polynomial.zero(n)
    terms: dict[Monomial, Fraction] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or not m.group(2).strip():
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2)
        pos = m.end()
        cm = _COEFF.match(body)
        coeff = Fraction(1)
        if cm:
            coeff = Fraction(cm.group(1))
            body = body[cm.end():]
        exps = [0] * (n + 1)
        rest = _FACTOR.sub(lambda f: _record(f, exps, n), body)
        if rest.replace("*", "").strip():
            raise ValueError(f"unexpected text {rest.strip()!r} in term {m.group(2)!r}")
        mono = tuple(exps)
        terms[mono] = terms.get(mono, 0) + sign * coeff
    return Polynomial(n, terms)


def _record(match: re.Match, exps: list[int], n: int) -> str:
    idx = int(match.group(1))
    if idx > n:
        raise ValueError(f"a_{idx} is not a coefficient of a binary {n}-form")
    exps[idx] += int(match.group(2) or 1)
    return ""


def random_isobaric(rng, n: int, k: int, m: int, max_terms: int = 6) -> Polynomial:
    """Random element of Q_n(k, m) with small rational coefficients."""
    from .partitions import enumerate_box_partitions

    monos = [partition_monomial(lam) for lam in enumerate_box_partitions(k, n, m)]
    if not monos:
        return Polynomial.zero(n)
    chosen = rng.sample(monos, min(len(monos), rng.randint(1, max_terms)))
    terms = {}
    for mono in chosen:
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        terms[mono] = c or Fraction(1)
    return Polynomial(n, terms)

