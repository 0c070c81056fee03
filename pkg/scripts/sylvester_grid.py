"""Dimension table of S_n(k, m) over a grid of boxes, written as TSV.

    python3 scripts/sylvester_grid.py --max-n 6 --max-k 6 > grid.tsv
"""

import argparse
import sys

from semiform.suites import SuiteConfig, dimension_tsv, sylvester_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--max-k", type=int, default=6)
    args = ap.parse_args()
    res = sylvester_suite(SuiteConfig(max_n=args.max_n, max_k=args.max_k))
    print(dimension_tsv(res.rows))
    print(f"# {res.passed}/{res.checked} signatures consistent", file=sys.stderr)
    return 0 if res.ok else 1


if __name__ == "__main__":
    sys.exit(main())
