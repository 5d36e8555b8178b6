"""Command-line entry point: REPL by default, bench or service on request."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import run_bench, write_csv
from .engine import Engine, Strategy
from .genealogy import DEFAULT_MAX_GENERATION, Genealogy
from .repl import run_repl
from . import service


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surreal",
        description="Calculator and benchmarks for Conway's short surreal numbers.")
    parser.add_argument("--strategy", choices=[s.value for s in Strategy],
                        default=Strategy.MEMO_PARENTS.value,
                        help="evaluation strategy (default: parents)")
    parser.add_argument("--max-generation", type=int,
                        default=DEFAULT_MAX_GENERATION, metavar="N",
                        help="genealogy tree depth cap")
    parser.add_argument("--bench", type=int, metavar="N",
                        help="time n*n for n=1..N under every strategy, then exit")
    parser.add_argument("--csv", metavar="PATH",
                        help="write bench results to PATH as CSV")
    parser.add_argument("--repeats", type=int, default=3, metavar="K",
                        help="bench repeats per cell (median wall time)")
    parser.add_argument("--budget-seconds", type=float, default=60.0,
                        metavar="S", help="per-cell bench budget")
    parser.add_argument("--serve", type=int, metavar="PORT",
                        help="start the calculator HTTP service")
    parser.add_argument("--static-dir", metavar="DIR",
                        help="web UI assets for --serve (default: ./frontend/dist if present)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    strategy = Strategy(args.strategy)

    if args.bench is not None:
        def progress(row):
            print(row.csv(), flush=True)
        print("n,strategy,millis,timesEvals,plusEvals,geCalls")
        rows = run_bench(args.bench, list(Strategy), repeats=args.repeats,
                         budget_seconds=args.budget_seconds,
                         max_generation=args.max_generation,
                         progress=progress)
        if args.csv:
            write_csv(rows, args.csv)
            print(f"wrote {args.csv}", file=sys.stderr)
        return 0

    engine = Engine(strategy, genealogy=Genealogy(args.max_generation))
    if args.serve is not None:
        static_dir = args.static_dir
        if static_dir is None and Path("frontend/dist").is_dir():
            static_dir = "frontend/dist"
        service.serve(args.serve, engine, static_dir)
        return 0

    return run_repl(engine)


if __name__ == "__main__":
    sys.exit(main())
