"""Graded spaces Q_n(k, m), the matrices of D and Delta, semi-invariant bases.

Everything here is exact.  Bases of Q_n(k, m) are the monomials a_lam for
lam in the k x n box, in descending lexicographic order of lam; the matrix of
an operator has one column per domain monomial.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import CapacityError, TheoremViolation
from .operators import SpaceSignature, apply_D, apply_Delta, shear_expand
from .partitions import count_p, enumerate_box_partitions, strict_unimodality_report
from .poly import Monomial, Polynomial, partition_monomial

DEFAULT_MAX_DIM = 5000


def max_dim() -> int:
    raw = os.environ.get("SEMIFORM_MAX_DIM")
    return int(raw) if raw else DEFAULT_MAX_DIM


def _guard(sig: SpaceSignature) -> None:
    dim = count_p(sig.k, sig.n, sig.m)
    limit = max_dim()
    if dim > limit:
        raise CapacityError(
            f"dim Q_{sig.n}({sig.k},{sig.m}) = {dim} exceeds the limit {limit}"
            " (set SEMIFORM_MAX_DIM to raise it)"
        )


@dataclass(frozen=True)
class MonomialBasis:
    sig: SpaceSignature
    monomials: tuple[Monomial, ...]
    index: dict[Monomial, int] = field(compare=False, repr=False)

    def __len__(self):
        return len(self.monomials)

    def coordinates(self, p: Polynomial) -> dict[int, Fraction]:
        out = {}
        for mono, c in p.terms.items():
            try:
                out[self.index[mono]] = c
            except KeyError:
                raise ValueError(f"monomial {mono} is not in Q_{self.sig.n}({self.sig.k},{self.sig.m})")
        return out

    def polynomial(self, vec: dict[int, int | Fraction]) -> Polynomial:
        return Polynomial(self.sig.n, {self.monomials[j]: c for j, c in vec.items()})


@lru_cache(maxsize=1024)
def basis_Q(sig: SpaceSignature) -> MonomialBasis:
    if sig.n < 0 or sig.k < 0:
        raise ValueError("n, k must be non-negative")
    if sig.m < 0:
        monos: tuple[Monomial, ...] = ()
    else:
        _guard(sig)
        monos = tuple(partition_monomial(lam) for lam in enumerate_box_partitions(sig.k, sig.n, sig.m))
    return MonomialBasis(sig, monos, {mono: j for j, mono in enumerate(monos)})


@dataclass(frozen=True)
class LinearMapMatrix:
    which: str
    domain: MonomialBasis
    codomain: MonomialBasis
    columns: tuple[dict[int, Fraction], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.codomain), len(self.domain)

    def rows(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [{} for _ in range(len(self.codomain))]
        for j, col in enumerate(self.columns):
            for i, x in col.items():
                out[i][j] = x
        return out

    def dense(self) -> list[list[Fraction]]:
        rows, cols = self.shape
        out = [[Fraction(0)] * cols for _ in range(rows)]
        for j, col in enumerate(self.columns):
            for i, x in col.items():
                out[i][j] = x
        return out

    def apply(self, vec: dict[int, int | Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for j, x in vec.items():
            for i, y in self.columns[j].items():
                out[i] = out.get(i, 0) + x * y
        return {i: v for i, v in out.items() if v}

    @cached_property
    def _echelon(self) -> linalg.Echelon:
        # rows fed from the bottom of the canonical order: far less fill-in,
        # and the reduced form does not depend on insertion order
        return linalg.Echelon().extend(reversed(self.rows()))

    def rank(self) -> int:
        return self._echelon.rank

    @cached_property
    def _kernel(self) -> tuple[linalg.Vector, ...]:
        return tuple(linalg.kernel_from_reduced(self._echelon.reduced(), len(self.domain)))

    def kernel(self) -> list[linalg.Vector]:
        return [dict(v) for v in self._kernel]


@lru_cache(maxsize=1024)
def matrix_of(which: str, sig: SpaceSignature) -> LinearMapMatrix:
    if which == "D":
        op, target = apply_D, SpaceSignature(sig.n, sig.k, sig.m - 1)
    elif which in ("Delta", "Δ"):
        which, op, target = "Delta", apply_Delta, SpaceSignature(sig.n, sig.k, sig.m + 1)
    else:
        raise ValueError(f"unknown operator {which!r}; expected D or Delta")
    dom = basis_Q(sig)
    cod = basis_Q(target)
    cols = tuple(cod.coordinates(op(Polynomial.monomial(mono))) for mono in dom.monomials)
    return LinearMapMatrix(which, dom, cod, cols)


@dataclass(frozen=True)
class SemiInvariantBasis:
    sig: SpaceSignature
    polynomials: tuple[Polynomial, ...]
    in_sylvester_range: bool

    def __len__(self):
        return len(self.polynomials)

    def reduce(self, p: Polynomial) -> Polynomial:
        """Remainder of p modulo the span (zero iff p lies in it), up to scale."""
        basis = basis_Q(self.sig)
        ech = linalg.Echelon().extend(basis.coordinates(q) for q in self.polynomials)
        return basis.polynomial(ech.reduce(basis.coordinates(p)))

    def contains(self, p: Polynomial) -> bool:
        return self.reduce(p).is_zero()


@lru_cache(maxsize=1024)
def semi_invariant_basis(sig: SpaceSignature) -> SemiInvariantBasis:
    """Kernel of D on Q_n(k, m) in reduced echelon normal form."""
    basis = basis_Q(sig)
    vectors = matrix_of("D", sig).kernel()
    polys = tuple(basis.polynomial(v) for v in vectors)
    inside = sig.in_sylvester_range
    if inside:
        expected = count_p(sig.k, sig.n, sig.m) - count_p(sig.k, sig.n, sig.m - 1)
        if len(polys) != expected:
            raise TheoremViolation(
                f"dim S_{sig.n}({sig.k},{sig.m}) = {len(polys)}, expected {expected}"
            )
    return SemiInvariantBasis(sig, polys, inside)


def is_semi_invariant(p: Polynomial, mode: str = "operator") -> bool:
    if mode == "operator":
        return apply_D(p).is_zero()
    if mode == "shear":
        return len(shear_expand(p, "horizontal")) <= 1
    raise ValueError(f"unknown mode {mode!r}; expected operator or shear")


@dataclass(frozen=True)
class SylvesterReport:
    n: int
    k: int
    m: int
    p: int
    p_prev: int
    delta: int
    rank_D: int
    nullity_D: int
    rank_Delta: int
    chain_dims: tuple[int, ...]  # dim V_i for i = 0..m+1
    kernel_dims: tuple[int, ...]  # dim ker T_i for i = 1..m+1
    kernel_expected: tuple[int, ...]  # delta(k, n, m-i+1) for i = 1..m+1

    @property
    def surjective(self) -> bool:
        return self.rank_D == self.p_prev

    @property
    def injective(self) -> bool:
        return self.rank_Delta == self.p_prev

    @property
    def nullity_ok(self) -> bool:
        return self.nullity_D == self.delta

    @property
    def telescopes(self) -> bool:
        return self.chain_dims[0] == sum(self.kernel_dims) and self.chain_dims[-1] == 0

    @property
    def kernels_are_semi_invariants(self) -> bool:
        return self.kernel_dims == self.kernel_expected

    @property
    def ok(self) -> bool:
        return (
            self.surjective
            and self.injective
            and self.nullity_ok
            and self.telescopes
            and self.kernels_are_semi_invariants
        )


def _image_chain(sig: SpaceSignature) -> tuple[list[int], list[int]]:
    """dim V_i for V_i = D^i(Q_n(k,m)) and dim ker(D restricted to V_{i-1})."""
    n, k, m = sig.n, sig.k, sig.m
    dims = [len(basis_Q(sig))]
    kernels = []
    # basis of V_{i-1} as coordinate vectors; None means all of Q_n(k, m-i+1)
    current: list[linalg.Vector] | None = None
    for i in range(1, m + 2):
        mat = matrix_of("D", SpaceSignature(n, k, m - i + 1))
        if current is None:
            kernels.append(len(mat.kernel()))
            images = list(mat.columns)
            rank = mat.rank()
        else:
            images = [mat.apply(v) for v in current]
            restricted = [{} for _ in range(len(mat.codomain))]
            for j, col in enumerate(images):
                for r, x in col.items():
                    restricted[r][j] = x
            kernels.append(len(linalg.kernel(restricted, len(current))))
            rank = None
        dims.append(rank if rank is not None else linalg.rank(images))
        if dims[-1] == len(mat.codomain):
            current = None
        else:
            current = linalg.Echelon().extend(images).reduced()
    return dims, kernels


def sylvester_report(n: int, k: int, m: int) -> SylvesterReport:
    """Surjectivity of D, injectivity of Delta and the image chain at (n, k, m)."""
    if not 0 <= m <= n * k // 2:
        raise ValueError(f"m={m} outside [0, {n * k // 2}]")
    sig = SpaceSignature(n, k, m)
    D = matrix_of("D", sig)
    rank_D = D.rank()
    nullity = len(D.kernel())
    if m >= 1:
        rank_Delta = matrix_of("Delta", SpaceSignature(n, k, m - 1)).rank()
    else:
        rank_Delta = 0  # domain Q_n(k,-1) is zero
    dims, kernels = _image_chain(sig)
    p = count_p(k, n, m)
    p_prev = count_p(k, n, m - 1)
    expected = tuple(
        count_p(k, n, m - i + 1) - count_p(k, n, m - i) for i in range(1, m + 2)
    )
    return SylvesterReport(
        n, k, m, p, p_prev, p - p_prev, rank_D, nullity, rank_Delta,
        tuple(dims), tuple(kernels), expected,
    )


@dataclass(frozen=True)
class AdditivityWitness:
    n: int
    k1: int
    k2: int
    m: int
    m1: int
    m2: int
    case: str  # "product" or "a0-power"
    factors: tuple[Polynomial, Polynomial]
    polynomial: Polynomial


def additivity_preconditions(n: int, k1: int, k2: int, m: int) -> str | None:
    """Reason the inputs are inadmissible, or None if admissible."""
    if min(n, k1, k2) < 2:
        return "need n, k1, k2 >= 2"
    if max(n, k1, k2) <= 2:
        return "need at least one of n, k1, k2 greater than 2"
    if all(x % 2 for x in (n, k1, k2)):
        return "need at least one of n, k1, k2 even"
    top = n * (k1 + k2) // 2
    if not 2 <= m <= top:
        return f"need 2 <= m <= {top}"
    for kk in (k1, k2):
        if strict_unimodality_report(n, kk).violations:
            return f"strict unimodality fails for the {n} x {kk} box"
    return None


def _some_semi_invariant(n: int, k: int, m: int) -> Polynomial:
    basis = semi_invariant_basis(SpaceSignature(n, k, m))
    if not len(basis):
        raise TheoremViolation(f"no semi-invariant of degree {k}, weight {m} for n={n}")
    return basis.polynomials[0]


def split_weight(n: int, k1: int, k2: int, m: int) -> tuple[int, int]:
    """Write m = m1 + m2 with 2 <= m_j <= floor(n k_j / 2), for m >= 4."""
    top1, top2 = n * k1 // 2, n * k2 // 2
    if top1 + top2 != n * (k1 + k2) // 2:
        raise ValueError("floor identity needs one of n, k1, k2 even")
    if m == top1 + top2:
        m1, m2 = top1, top2
    elif top1 + 2 <= m:
        m1, m2 = top1, m - top1
    else:
        m1, m2 = m - 2, 2
    if not (2 <= m1 <= top1 and 2 <= m2 <= top2):
        raise TheoremViolation(f"no admissible split of m={m} for n={n}, k1={k1}, k2={k2}")
    return m1, m2


def additivity_witness(n: int, k1: int, k2: int, m: int) -> AdditivityWitness:
    """A nonzero semi-invariant of degree k1+k2 and weight m built from factors."""
    reason = additivity_preconditions(n, k1, k2, m)
    if reason:
        raise ValueError(reason)
    if m >= 4:
        m1, m2 = split_weight(n, k1, k2, m)
        f1 = _some_semi_invariant(n, k1, m1)
        f2 = _some_semi_invariant(n, k2, m2)
        case = "product"
    else:
        # a_0^{k_other} times a weight-m semi-invariant of the larger factor
        if n * k1 // 2 >= 3:
            f1 = _some_semi_invariant(n, k1, m)
            f2 = Polynomial.var(n, 0) ** k2
            m1, m2 = m, 0
        elif n * k2 // 2 >= 3:
            f1 = Polynomial.var(n, 0) ** k1
            f2 = _some_semi_invariant(n, k2, m)
            m1, m2 = 0, m
        else:
            raise TheoremViolation("neither factor reaches weight three")
        case = "a0-power"
    result = f1 * f2
    if result.is_zero() or not is_semi_invariant(result):
        raise TheoremViolation(f"product for m={m} is not a nonzero semi-invariant")
    return AdditivityWitness(n, k1, k2, m, m1, m2, case, (f1, f2), result)
