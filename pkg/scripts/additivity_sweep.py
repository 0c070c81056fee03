"""Build additivity witnesses for every admissible (n, k1, k2, m) in a range and time it."""

import argparse
import time

from semiform import additivity_witness, is_semi_invariant
from semiform.invariants import additivity_preconditions


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--max-k", type=int, default=8)
    ap.add_argument("--shear", action="store_true", help="also check via the shear expansion (slow)")
    args = ap.parse_args()
    start = time.perf_counter()
    count = 0
    for n in range(2, args.max_n + 1):
        for k1 in range(2, args.max_k + 1):
            for k2 in range(k1, args.max_k + 1):
                for m in range(2, n * (k1 + k2) // 2 + 1):
                    if additivity_preconditions(n, k1, k2, m):
                        continue
                    w = additivity_witness(n, k1, k2, m)
                    assert is_semi_invariant(w.polynomial)
                    if args.shear:
                        assert is_semi_invariant(w.polynomial, "shear")
                    count += 1
                    print(f"n={n} k1={k1} k2={k2} m={m:>2}  {w.case:<8} m1={w.m1} m2={w.m2}")
    print(f"{count} witnesses in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
