"""Which k x n boxes have a strictly increasing partition count up to the middle weight."""

import argparse

from semiform import strict_unimodality_report


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=12)
    args = ap.parse_args()
    sizes = range(1, args.max + 1)
    print("n\\k " + " ".join(f"{k:>3}" for k in sizes))
    for n in sizes:
        marks = []
        for k in sizes:
            rep = strict_unimodality_report(n, k)
            marks.append("  +" if rep.strictly_unimodal else f"{len(rep.violations):>3}")
        print(f"{n:>3} " + " ".join(marks))
    print("\n+ strictly unimodal; otherwise the number of weights where p(m) <= p(m-1)")


if __name__ == "__main__":
    main()
