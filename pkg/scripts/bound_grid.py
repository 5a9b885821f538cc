"""Measure every bound over a grid and print one summary line per cell.

    python3 scripts/bound_grid.py --max 5 [--theorem union-isc]
"""
import argparse
import sys

from prefixsc.witnesses import THEOREMS, bound_report


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=5, help="largest m and n")
    ap.add_argument("--theorem", action="append", choices=sorted(THEOREMS))
    args = ap.parse_args()

    failures = 0
    for theorem in args.theorem or sorted(THEOREMS):
        _, min_m, min_n = THEOREMS[theorem]
        ms = [None] if min_m is None else range(min_m, args.max + 1)
        for m in ms:
            for n in range(min_n, args.max + 1):
                r = bound_report(theorem, m, n)
                failures += r.status != "tight"
                print(r.summary())
    print(f"non-tight cells: {failures}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
