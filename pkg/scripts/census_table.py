"""Print the star-complexity census for binary prefix-closed languages.

    python3 scripts/census_table.py --max-n 5 [--method canonical]
"""
import argparse
import time

from prefixsc.census import star_census


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--method", choices=["brute", "canonical"], default="brute")
    args = ap.parse_args()

    tables = []
    for n in range(2, args.max_n + 1):
        start = time.perf_counter()
        tables.append((star_census(n, args.k, method=args.method), time.perf_counter() - start))
    width = max(max(t.frequencies) for t, _ in tables)
    print("n    " + " ".join(f"{j:>6}" for j in range(1, width + 1)) + "   total   avg     secs")
    for t, secs in tables:
        cells = " ".join(f"{c:>6}" for c in t.row(width))
        print(f"{t.n:<4} {cells} {t.total:>7} {t.average_3dp():>6} {secs:>8.2f}")


if __name__ == "__main__":
    main()
