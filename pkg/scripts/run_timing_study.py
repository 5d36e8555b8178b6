#!/usr/bin/env python3
"""Reproduce the n*n timing study at desk scale.

Times n*n for n = 1..N (default 10) under the memoized strategy with and
without the parents optimization, prints a two-column table, and writes
the raw rows (including counters) to CSV.

Absolute seconds are machine-bound; what should reproduce anywhere is the
shape: both columns grow polynomially, the with-parents column stays
below the without-parents column, and the gap widens with n.

Usage:
  python scripts/run_timing_study.py [N] [--csv out.csv] [--repeats K] [--naive]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from surreal.bench import run_bench, write_csv  # noqa: E402
from surreal.engine import Strategy  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("n_max", nargs="?", type=int, default=10)
    parser.add_argument("--csv", default="timing.csv")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--budget-seconds", type=float, default=60.0)
    parser.add_argument("--naive", action="store_true",
                        help="also run the naive strategy (expect timeouts)")
    args = parser.parse_args()

    strategies = [Strategy.MEMO, Strategy.MEMO_PARENTS]
    if args.naive:
        strategies.append(Strategy.NAIVE)

    rows = run_bench(args.n_max, strategies, repeats=args.repeats,
                     budget_seconds=args.budget_seconds,
                     progress=lambda row: print("  " + row.csv(), flush=True))
    write_csv(rows, args.csv)

    cell = {(r.strategy, r.n): r for r in rows}
    print(f"\n timing of n*n (seconds, median of {args.repeats})")
    header = " n    without-parents  with-parents"
    if args.naive:
        header += "  naive"
    print(header)
    for n in range(1, args.n_max + 1):
        def fmt(strategy):
            row = cell[(strategy, n)]
            return "timeout" if row.timed_out else f"{row.millis / 1000:.2f}"
        line = f"{n:2d}    {fmt(Strategy.MEMO):>15}  {fmt(Strategy.MEMO_PARENTS):>12}"
        if args.naive:
            line += f"  {fmt(Strategy.NAIVE):>7}"
        print(line)
    print(f"\nwrote {args.csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
