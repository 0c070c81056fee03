"""Command line front end: ``semiform <command> [options]``.

Exit codes: 0 ok, 1 violation (a checked identity failed), 2 usage or input
error, 3 capacity guardrail.  ``--json`` switches output to canonical JSON;
``--timing`` adds wall-clock milliseconds (off by default so that output is
byte-identical across runs).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from math import factorial
from pathlib import Path
from typing import Any, Sequence

from .diagrams import commutator_census, census_residual, enumerate_semi_diagrams, oracle_weight_sum
from .errors import CapacityError, ContextError
from .invariants import (
    additivity_witness,
    basis_Q,
    is_semi_invariant,
    matrix_of,
    semi_invariant_basis,
    sylvester_report,
)
from .operators import (
    SpaceSignature,
    cayley_check,
    hilbert_commutator_residual,
    operator_power,
    second_hilbert_residual,
    shear_expand,
    taylor_check,
)
from .partitions import count_p, delta, delta_table, enumerate_box_partitions, gaussian_coefficient
from .poly import BoxPartition, Polynomial, parse_polynomial
from .suites import SUITES, SuiteConfig, dimension_tsv, run_suite

EXIT = {"ok": 0, "violation": 1, "error": 2, "capacity": 3}


@dataclass
class CommandResult:
    status: str  # ok | violation | error | capacity
    payload: dict[str, Any]
    timing_ms: float = 0.0

    @property
    def exit_code(self) -> int:
        return EXIT[self.status]


def _ok(payload, good: bool = True) -> CommandResult:
    return CommandResult("ok" if good else "violation", payload)


# input helpers --------------------------------------------------------------

def _read_poly(args) -> Polynomial:
    if getattr(args, "poly", None) is not None:
        if args.n is None:
            raise ValueError("--poly needs --n")
        return parse_polynomial(args.poly, args.n)
    if getattr(args, "infile", None) is None:
        raise ValueError("give a polynomial with --in FILE or --poly EXPR --n N")
    if args.infile == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.infile).read_text(encoding="utf-8")
    p = Polynomial.from_json(text)
    if args.n is not None and args.n != p.n:
        raise ContextError(f"--n {args.n} disagrees with polynomial context n={p.n}")
    return p


def _partition(args) -> BoxPartition:
    return BoxPartition.parse(args.lam, args.k, args.n)


def _poly_out(p: Polynomial) -> dict:
    return {"json": p.to_json(), "text": str(p)}


# commands -------------------------------------------------------------------

def cmd_gauss(args) -> CommandResult:
    g = gaussian_coefficient(args.n, args.k)
    return _ok({"n": args.n, "k": args.k, "coeffs": list(g.coeffs)})


def cmd_pcount(args) -> CommandResult:
    payload: dict[str, Any] = {"k": args.k, "n": args.n, "m": args.m, "count": count_p(args.k, args.n, args.m)}
    if args.list:
        payload["partitions"] = [list(lam.parts) for lam in enumerate_box_partitions(args.k, args.n, max(args.m, 0))]
    return _ok(payload)


def cmd_delta(args) -> CommandResult:
    if args.m is None:
        t = delta_table(args.n, args.k)
        return _ok({"k": args.k, "n": args.n, "delta": list(t.values)})
    return _ok({"k": args.k, "n": args.n, "m": args.m, "delta": delta(args.k, args.n, args.m)})


def cmd_basis(args) -> CommandResult:
    sig = SpaceSignature(args.n, args.k, args.m)
    if args.space == "Q":
        b = basis_Q(sig)
        polys = [Polynomial.monomial(mono) for mono in b.monomials]
        return _ok({"n": sig.n, "k": sig.k, "m": sig.m, "space": "Q", "dimension": len(b),
                    "basis": [_poly_out(p) for p in polys]})
    b = semi_invariant_basis(sig)
    return _ok({"n": sig.n, "k": sig.k, "m": sig.m, "space": "S", "dimension": len(b),
                "in_sylvester_range": b.in_sylvester_range,
                "basis": [_poly_out(p) for p in b.polynomials]})


def cmd_matrix(args) -> CommandResult:
    mat = matrix_of(args.op, SpaceSignature(args.n, args.k, args.m))
    return _ok({
        "op": mat.which, "n": args.n, "k": args.k, "m": args.m,
        "shape": list(mat.shape),
        "rows": [[str(x) for x in row] for row in mat.dense()],
        "rank": mat.rank(),
    })


def cmd_apply(args) -> CommandResult:
    p = _read_poly(args)
    return _ok({"op": args.op, "pow": args.pow, "result": _poly_out(operator_power(args.op, args.pow, p))})


def cmd_shear(args) -> CommandResult:
    exp = shear_expand(_read_poly(args), args.dir)
    return _ok({"direction": exp.direction, "coefficients": [_poly_out(c) for c in exp.coefficients]})


def cmd_sylvester(args) -> CommandResult:
    r = sylvester_report(args.n, args.k, args.m)
    return _ok({
        "n": r.n, "k": r.k, "m": r.m, "p": r.p, "delta": r.delta,
        "rank": r.rank_D, "nullity": r.nullity_D, "rank_delta": r.rank_Delta,
        "surjective": r.surjective, "injective": r.injective,
        "chain_dims": list(r.chain_dims), "kernel_dims": list(r.kernel_dims),
        "telescopes": r.telescopes,
    }, r.ok)


def cmd_verify(args) -> CommandResult:
    what = args.what
    if what == "taylor":
        p = _read_poly(args)
        dirs = ("horizontal", "vertical") if args.dir == "both" else (args.dir,)
        checks = [taylor_check(p, d) for d in dirs]
        payload = {"checks": [
            {"direction": c.direction, "ok": c.ok, "length": c.length,
             "first_mismatch": c.first_mismatch,
             "residual": None if c.residual is None else _poly_out(c.residual)}
            for c in checks]}
        return _ok(payload, all(c.ok for c in checks))
    if what in ("hilbert", "hilbert2"):
        lam = _partition(args)
        fn = hilbert_commutator_residual if what == "hilbert" else second_hilbert_residual
        r = fn(lam, args.i)
        return _ok({"identity": what, "lambda": list(lam.parts), "i": args.i,
                    "c": args.n * args.k - 2 * lam.size, "residual": _poly_out(r)}, r.is_zero())
    if what == "cayley":
        p = _read_poly(args)
        sig = SpaceSignature.of(p)
        good = cayley_check(p, sig, args.i)
        return _ok({"n": sig.n, "k": sig.k, "m": sig.m, "c": sig.c, "i": args.i, "holds": good}, good)
    if what == "diagrams":
        lam = _partition(args)
        a = Polynomial.from_partition(lam)
        if args.mode == "census":
            cen = commutator_census(lam, args.i)
            return _ok({
                "lambda": list(lam.parts), "i": args.i,
                "pm_factor": cen.pm_factor, "mp_factor": cen.mp_factor,
                "difference_factor": cen.difference_factor, "c": cen.c,
                "residual": _poly_out(census_residual(cen)),
            }, cen.ok)
        op = "D" if args.mode == "minus" else "Delta"
        oracle = oracle_weight_sum(lam, args.i, args.mode)
        expected = operator_power(op, args.i, a) / factorial(args.i)
        payload: dict[str, Any] = {"lambda": list(lam.parts), "i": args.i, "mode": args.mode,
                                   "oracle": _poly_out(oracle), "operator": _poly_out(expected)}
        if args.list:
            payload["diagrams"] = [
                {"minus": sorted(map(list, d.minus_cells)), "plus": sorted(map(list, d.plus_cells)),
                 "weight": list(d.weight())}
                for d in enumerate_semi_diagrams(lam, args.i, args.mode)]
        return _ok(payload, oracle == expected)
    if what == "semi":
        p = _read_poly(args)
        modes = ("operator", "shear") if args.mode == "both" else (args.mode,)
        verdict = {m: is_semi_invariant(p, m) for m in modes}
        consistent = len(set(verdict.values())) == 1
        return _ok({"semi_invariant": verdict, "consistent": consistent}, consistent)
    raise ValueError(f"unknown verification {what!r}")


def _parse_box(text: str) -> tuple[int, int]:
    try:
        k, n = (int(x) for x in text.lower().split("x"))
    except ValueError:
        raise ValueError(f"--box expects KxN, got {text!r}")
    return k, n


def cmd_suite(args) -> CommandResult:
    cfg = SuiteConfig(seed=args.seed, count=args.count, max_i=args.max_i)
    if args.name in ("diagrams",):
        cfg.max_n = cfg.max_k = 3
    if args.name == "unimodality":
        cfg.min_n = cfg.min_k = 1
    if args.max_n is not None:
        cfg.max_n = args.max_n
    if args.max_k is not None:
        cfg.max_k = args.max_k
    if args.box:
        k, n = _parse_box(args.box)
        cfg.min_k = cfg.max_k = k
        cfg.min_n = cfg.max_n = n
    if args.n is not None:
        cfg.min_n = cfg.max_n = args.n
    if args.k is not None:
        cfg.min_k = cfg.max_k = args.k
    res = run_suite(args.name, cfg)
    return _ok(res.to_json(), res.ok)


def cmd_additivity(args) -> CommandResult:
    w = additivity_witness(args.n, args.k1, args.k2, args.m)
    good = is_semi_invariant(w.polynomial, "operator") and is_semi_invariant(w.polynomial, "shear")
    return _ok({
        "n": w.n, "k1": w.k1, "k2": w.k2, "m": w.m, "m1": w.m1, "m2": w.m2,
        "case": w.case, "factors": [_poly_out(f) for f in w.factors],
        "witness": _poly_out(w.polynomial),
    }, good)


# parser ---------------------------------------------------------------------

def _poly_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="infile", help="polynomial JSON file, '-' for stdin")
    p.add_argument("--poly", help="polynomial expression, e.g. 'a0*a2 - a1^2'")
    p.add_argument("--n", type=int, help="form degree (required with --poly)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--timing", action="store_true", help="report elapsed milliseconds")

    parser = argparse.ArgumentParser(prog="semiform", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gauss", parents=[common], help="Gaussian coefficient [n+k choose k]_q")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_gauss)

    p = sub.add_parser("pcount", parents=[common], help="p(k, n, m), optionally listing partitions")
    for name in ("k", "n", "m"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_pcount)

    p = sub.add_parser("delta", parents=[common], help="delta(k, n, m) or the whole table")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("basis", parents=[common], help="basis of S_n(k,m) (or Q_n(k,m))")
    for name in ("n", "k", "m"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--space", choices=("S", "Q"), default="S")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("matrix", parents=[common], help="matrix of D or Delta on Q_n(k,m)")
    p.add_argument("--op", choices=("D", "Delta"), required=True)
    for name in ("n", "k", "m"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("apply", parents=[common], help="apply D^i or Delta^i")
    p.add_argument("--op", choices=("D", "Delta"), required=True)
    p.add_argument("--pow", type=int, default=1)
    _poly_inputs(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("shear", parents=[common], help="shear expansion by powers of z")
    p.add_argument("--dir", choices=("h", "v", "horizontal", "vertical"), default="h")
    _poly_inputs(p)
    p.set_defaults(func=cmd_shear)

    p = sub.add_parser("sylvester", parents=[common], help="rank/nullity/chain report at (n,k,m)")
    for name in ("n", "k", "m"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.set_defaults(func=cmd_sylvester)

    p = sub.add_parser("verify", parents=[common], help="check one identity")
    p.add_argument("what", choices=("taylor", "hilbert", "hilbert2", "cayley", "diagrams", "semi"))
    _poly_inputs(p)
    p.add_argument("--k", type=int)
    p.add_argument("--lambda", dest="lam", help="comma-separated weakly decreasing parts")
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--dir", choices=("h", "v", "horizontal", "vertical", "both"), default="both")
    p.add_argument("--mode", default=None,
                   help="diagrams: minus|plus|census; semi: operator|shear|both")
    p.add_argument("--list", action="store_true", help="diagrams: list every semi-diagram")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("suite", parents=[common], help="batch verification")
    p.add_argument("name", choices=SUITES)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--box", help="single KxN box")
    p.add_argument("--max-i", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--tsv", action="store_true", help="sylvester: print the dimension table as TSV")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("additivity", parents=[common], help="additivity witness of degree k1+k2")
    for name in ("n", "k1", "k2", "m"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.set_defaults(func=cmd_additivity)
    return parser


def _verify_defaults(args) -> None:
    if args.command != "verify":
        return
    if args.mode is None:
        args.mode = "minus" if args.what == "diagrams" else "both"
    if args.what in ("hilbert", "hilbert2", "diagrams"):
        if args.n is None or args.k is None or args.lam is None:
            raise ValueError(f"verify {args.what} needs --n, --k and --lambda")
    if args.what == "diagrams" and args.mode not in ("minus", "plus", "census"):
        raise ValueError("verify diagrams --mode must be minus, plus or census")
    if args.what == "semi" and args.mode not in ("operator", "shear", "both"):
        raise ValueError("verify semi --mode must be operator, shear or both")
    if args.dir in ("h", "v"):
        args.dir = {"h": "horizontal", "v": "vertical"}[args.dir]


def dispatch(argv: Sequence[str] | None = None) -> CommandResult:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        _verify_defaults(args)
        result = args.func(args)
    except CapacityError as exc:
        result = CommandResult("capacity", {"error": str(exc)})
    except (ValueError, OSError, KeyError) as exc:
        result = CommandResult("error", {"error": str(exc)})
    result.timing_ms = (time.perf_counter() - start) * 1000.0
    result.payload = {"command": args.command, **result.payload}
    _emit(result, args)
    return result


def _emit(result: CommandResult, args) -> None:
    out = {"status": result.status, **result.payload}
    if args.timing:
        out["timing_ms"] = round(result.timing_ms, 3)
    if getattr(args, "tsv", False) and "rows" in out and out.get("suite") == "sylvester":
        text = dimension_tsv(out["rows"])
    elif args.json:
        text = json.dumps(out, sort_keys=False, separators=(",", ":"))
    else:
        text = _human(out)
    stream = sys.stdout if result.status in ("ok", "violation") else sys.stderr
    print(text, file=stream)


def _flatten(value: Any) -> str:
    if isinstance(value, dict) and set(value) == {"json", "text"}:
        return value["text"]
    if isinstance(value, list) and value and all(isinstance(v, dict) and set(v) == {"json", "text"} for v in value):
        return "[" + "; ".join(v["text"] for v in value) + "]"
    if isinstance(value, (dict, list)):
        return json.dumps(_strip_json(value), separators=(",", ":"))
    return str(value)


def _strip_json(value: Any) -> Any:
    if isinstance(value, dict):
        if set(value) == {"json", "text"}:
            return value["text"]
        return {k: _strip_json(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_strip_json(v) for v in value]
    return value


def _human(out: dict[str, Any]) -> str:
    width = max(len(k) for k in out)
    return "\n".join(f"{k.ljust(width)}  {_flatten(v)}" for k, v in out.items())


def main(argv: Sequence[str] | None = None) -> int:
    return dispatch(argv).exit_code


if __name__ == "__main__":
    sys.exit(main())
