"""Batch drivers that sweep a verifier over every signature or partition in bounds."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from math import factorial
from typing import Any, Callable

from .diagrams import MAX_CELLS, commutator_census, oracle_weight_sum
from .invariants import sylvester_report
from .operators import (
    hilbert_commutator_residual,
    operator_power,
    second_hilbert_residual,
    taylor_check,
)
from .partitions import enumerate_box_partitions, gaussian_coefficient, strict_unimodality_report
from .poly import Polynomial, random_isobaric

SUITES = ("sylvester", "hilbert", "taylor", "diagrams", "unimodality")


@dataclass
class SuiteConfig:
    min_n: int = 0
    max_n: int = 5
    min_k: int = 0
    max_k: int = 5
    max_i: int | None = None  # None: natural range for the suite
    seed: int = 0
    count: int = 200


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    passed: int = 0
    first_failure: dict[str, Any] | None = None
    rows: list[dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.first_failure is None and self.checked == self.passed

    def record(self, ok: bool, case: dict[str, Any]) -> None:
        self.checked += 1
        if ok:
            self.passed += 1
        elif self.first_failure is None:
            self.first_failure = case

    def to_json(self) -> dict[str, Any]:
        out = {
            "suite": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "first_failure": self.first_failure,
        }
        if self.rows:
            out["rows"] = self.rows
        return out


def _boxes(cfg: SuiteConfig):
    for n in range(cfg.min_n, cfg.max_n + 1):
        for k in range(cfg.min_k, cfg.max_k + 1):
            yield n, k


def sylvester_suite(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("sylvester")
    for n, k in _boxes(cfg):
        for m in range(n * k // 2 + 1):
            rep = sylvester_report(n, k, m)
            row = {
                "n": n, "k": k, "m": m, "p": rep.p, "delta": rep.delta,
                "rank": rep.rank_D, "nullity": rep.nullity_D,
                "surjective": rep.surjective, "injective": rep.injective,
            }
            res.rows.append(row)
            case = dict(row, chain=list(rep.chain_dims), kernels=list(rep.kernel_dims))
            res.record(rep.ok, case)
    return res


def hilbert_suite(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("hilbert")
    for n, k in _boxes(cfg):
        for m in range(n * k + 1):
            top = m + 2 if cfg.max_i is None else cfg.max_i
            for lam in enumerate_box_partitions(k, n, m):
                for i in range(1, top + 1):
                    for kind, fn in (("hilbert", hilbert_commutator_residual),
                                     ("hilbert2", second_hilbert_residual)):
                        r = fn(lam, i)
                        res.record(r.is_zero(), {
                            "identity": kind, "n": n, "k": k,
                            "lambda": list(lam.parts), "i": i, "residual": str(r),
                        })
    return res


def taylor_suite(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("taylor")
    rng = random.Random(cfg.seed)
    lo_n, lo_k = max(cfg.min_n, 1), max(cfg.min_k, 1)
    for _ in range(cfg.count):
        n = rng.randint(lo_n, cfg.max_n)
        k = rng.randint(lo_k, cfg.max_k)
        m = rng.randint(0, n * k)
        p = random_isobaric(rng, n, k, m)
        for direction in ("horizontal", "vertical"):
            chk = taylor_check(p, direction)
            res.record(chk.ok, {
                "n": n, "k": k, "m": m, "direction": direction,
                "polynomial": p.to_json(), "first_mismatch": chk.first_mismatch,
            })
    return res


def diagrams_suite(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("diagrams")
    census_top = 4 if cfg.max_i is None else cfg.max_i
    for n, k in _boxes(cfg):
        if n * k > MAX_CELLS:
            continue
        for m in range(n * k + 1):
            for lam in enumerate_box_partitions(k, n, m):
                a = Polynomial.from_partition(lam)
                for i in range(m + 1):
                    ok = oracle_weight_sum(lam, i, "minus") == operator_power("D", i, a) / factorial(i)
                    res.record(ok, {"check": "minus", "n": n, "k": k, "lambda": list(lam.parts), "i": i})
                for i in range(n * k - m + 1):
                    ok = oracle_weight_sum(lam, i, "plus") == operator_power("Delta", i, a) / factorial(i)
                    res.record(ok, {"check": "plus", "n": n, "k": k, "lambda": list(lam.parts), "i": i})
                for i in range(1, census_top + 1):
                    cen = commutator_census(lam, i)
                    ok = cen.ok and cen.base == operator_power("Delta", i - 1, a)
                    res.record(ok, {"check": "census", "n": n, "k": k, "lambda": list(lam.parts), "i": i})
    return res


def unimodality_suite(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("unimodality")
    for n, k in _boxes(cfg):
        if n < 1 or k < 1:
            continue
        rep = strict_unimodality_report(n, k)
        g = gaussian_coefficient(n, k).coeffs
        symmetric = g == g[::-1]
        res.rows.append({
            "n": n, "k": k, "strictly_unimodal": rep.strictly_unimodal,
            "unimodal": rep.unimodal, "symmetric": symmetric,
            "violations": list(rep.violations),
        })
        # only boxes with n, k >= 8 are expected to be strictly unimodal
        expect_strict = n >= 8 and k >= 8
        ok = rep.unimodal and symmetric and (rep.strictly_unimodal or not expect_strict)
        res.record(ok, {"n": n, "k": k, "violations": list(rep.violations)})
    return res


RUNNERS: dict[str, Callable[[SuiteConfig], SuiteResult]] = {
    "sylvester": sylvester_suite,
    "hilbert": hilbert_suite,
    "taylor": taylor_suite,
    "diagrams": diagrams_suite,
    "unimodality": unimodality_suite,
}


def run_suite(name: str, cfg: SuiteConfig | None = None) -> SuiteResult:
    if name not in RUNNERS:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    return RUNNERS[name](cfg or SuiteConfig())


TSV_COLUMNS = ("n", "k", "m", "p", "delta", "rank", "nullity", "surjective", "injective")


def dimension_tsv(rows: list[dict[str, Any]]) -> str:
    """Dimension table, one signature per line; booleans as ``true``/``false``."""
    def cell(v):
        return str(v).lower() if isinstance(v, bool) else str(v)
    lines = ["\t".join(TSV_COLUMNS)]
    lines += ["\t".join(cell(r[c]) for c in TSV_COLUMNS) for r in rows]
    return "\n".join(lines)


def config_dict(cfg: SuiteConfig) -> dict[str, Any]:
    return asdict(cfg)
