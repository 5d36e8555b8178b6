"""Benchmark harness: time n*n under each strategy and emit CSV.

Each cell runs on a fresh engine (cold tables), wall time is the median
over the configured repeats, and counters come from a reset-bracketed run.
Cells that overrun the budget are recorded as timeouts, with the counters
observed up to the abort.
"""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .engine import Engine, Stats, Strategy
from .errors import BudgetExceededError
from .genealogy import DEFAULT_MAX_GENERATION, Genealogy

CSV_HEADER = "n,strategy,millis,timesEvals,plusEvals,geCalls"


@dataclass
class BenchRow:
    n: int
    strategy: Strategy
    millis: Optional[float]  # None = timed out
    times_evals: int
    plus_evals: int
    ge_calls: int

    @property
    def timed_out(self) -> bool:
        return self.millis is None

    def csv(self) -> str:
        millis = "timeout" if self.millis is None else f"{self.millis:.3f}"
        return (f"{self.n},{self.strategy.value},{millis},"
                f"{self.times_evals},{self.plus_evals},{self.ge_calls}")


def run_cell(n: int, strategy: Strategy, repeats: int = 3,
             budget_seconds: Optional[float] = 60.0,
             max_generation: int = DEFAULT_MAX_GENERATION) -> BenchRow:
    """Time n*n once per repeat, each on a fresh engine."""
    millis: list[float] = []
    stats: Stats = Stats()
    for _ in range(max(1, repeats)):
        engine = Engine(strategy, genealogy=Genealogy(max_generation))
        engine.set_budget(budget_seconds)
        x = engine.tree.integer(n)
        engine.stats_reset()
        gc.collect()  # do not bill earlier cells' garbage to this one
        start = time.perf_counter()
        try:
            engine.mul(x, x)
        except BudgetExceededError:
            return BenchRow(n, strategy, None, *_counters(engine))
        millis.append((time.perf_counter() - start) * 1000.0)
        stats = engine.stats_snapshot()
    return BenchRow(n, strategy, statistics.median(millis),
                    stats.times_evals, stats.plus_evals, stats.ge_calls)


def _counters(engine: Engine) -> tuple[int, int, int]:
    s = engine.stats_snapshot()
    return s.times_evals, s.plus_evals, s.ge_calls


def run_bench(n_max: int, strategies: Sequence[Strategy], repeats: int = 3,
              budget_seconds: Optional[float] = 60.0,
              max_generation: int = DEFAULT_MAX_GENERATION,
              progress=None) -> list[BenchRow]:
    if not 1 <= n_max <= max_generation:
        raise ValueError("n_max must be between 1 and the generation cap")
    rows = []
    for strategy in strategies:
        for n in range(1, n_max + 1):
            row = run_cell(n, strategy, repeats, budget_seconds, max_generation)
            rows.append(row)
            if progress is not None:
                progress(row)
    return rows


def write_csv(rows: Iterable[BenchRow], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(CSV_HEADER + "\n")
        for row in rows:
            fh.write(row.csv() + "\n")


def read_csv(path: str) -> list[BenchRow]:
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != CSV_HEADER:
            raise ValueError(f"unexpected header: {header}")
        rows = []
        for line in fh:
            n, strategy, millis, times_evals, plus_evals, ge_calls = \
                line.strip().split(",")
            rows.append(BenchRow(
                int(n), Strategy(strategy),
                None if millis == "timeout" else float(millis),
                int(times_evals), int(plus_evals), int(ge_calls)))
        return rows
