"""Print the semi-diagram commutator census for one partition, for i = 1..max-i."""

import argparse

from semiform import BoxPartition
from semiform.diagrams import commutator_census


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--lambda", dest="lam", default="4,2,1,0")
    ap.add_argument("--max-i", type=int, default=4)
    args = ap.parse_args()
    lam = BoxPartition.parse(args.lam, args.k, args.n)
    print(f"lambda={lam}  box {args.k}x{args.n}  c={args.n * args.k - 2 * lam.size}")
    print(" i   +-   -+  diff  ok")
    for i in range(1, args.max_i + 1):
        cen = commutator_census(lam, i)
        print(f"{i:>2} {cen.pm_factor:>4} {cen.mp_factor:>4} {cen.difference_factor:>5}  {cen.ok}")


if __name__ == "__main__":
    main()
