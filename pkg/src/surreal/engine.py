"""Conway arithmetic over canonical surreals, three ways.

* ``NAIVE`` follows the definitions directly: every sub-sum and
  sub-product is re-derived on every access (the options of a naive result
  are recomputed each time something walks into them) and only the final
  result is located in the genealogy tree.  Cost explodes quickly: 3x3 is
  quick, 4x4 is already expensive, 5x5 is out of reach.
* ``MEMO`` routes + and × through lazy tables — trees of trees mirroring
  the genealogy — so each distinct operand pair is evaluated exactly once.
  Table lookups walk the tree by order comparisons.
* ``MEMO_PARENTS`` additionally uses stored parent links to trace table
  paths with no comparisons at all.

All three agree on every result; they differ only in the work done, which
the ``Stats`` counters make observable.
"""

from __future__ import annotations

import enum
import sys
import time
from typing import Callable, Optional

from . import forms
from .errors import BudgetExceededError
from .forms import DEFAULT_MAX_DEPTH, Form, Ordering
from .genealogy import CanonicalNode, Genealogy, Side


class Strategy(enum.Enum):
    NAIVE = "naive"
    MEMO = "memo"
    MEMO_PARENTS = "parents"


class Stats:
    """Monotone counters of primitive operations.

    ``ge_calls`` counts every virtual call of the order relation,
    recursion included; a short-circuited comparison therefore costs one
    root call and an equality check two.  ``plus_evals``/``times_evals``
    count evaluations of the definitional + and × (one per table fill
    under the memo strategies, one per derivation — including every
    re-derivation — under the naive strategy).  ``select_steps`` counts
    tree levels stepped during table lookups, ``table_hits`` lookups that
    found an already computed cell, ``nodes_built`` genealogy nodes
    constructed.
    """

    __slots__ = ("ge_calls", "plus_evals", "times_evals", "select_steps",
                 "table_hits", "nodes_built")

    def __init__(self, ge_calls=0, plus_evals=0, times_evals=0,
                 select_steps=0, table_hits=0, nodes_built=0):
        self.ge_calls = ge_calls
        self.plus_evals = plus_evals
        self.times_evals = times_evals
        self.select_steps = select_steps
        self.table_hits = table_hits
        self.nodes_built = nodes_built

    def snapshot(self) -> "Stats":
        return Stats(self.ge_calls, self.plus_evals, self.times_evals,
                     self.select_steps, self.table_hits, self.nodes_built)

    def delta(self, earlier: "Stats") -> "Stats":
        return Stats(*(getattr(self, f) - getattr(earlier, f)
                       for f in Stats.__slots__))

    def as_dict(self) -> dict:
        return {f: getattr(self, f) for f in Stats.__slots__}

    def __repr__(self) -> str:
        inner = " ".join(f"{f}={getattr(self, f)}" for f in Stats.__slots__)
        return f"Stats({inner})"


class LazyOptions:
    """A naive-strategy form whose option tuples are recomputed on every
    access: nothing is shared, nothing is cached."""

    __slots__ = ("_left_fn", "_right_fn")

    spine = None

    def __init__(self, left_fn, right_fn):
        self._left_fn = left_fn
        self._right_fn = right_fn

    def left_options(self):
        return self._left_fn()

    def right_options(self):
        return self._right_fn()


class _TableNode:
    """One position of a lazy table tree.  ``cell`` holds the inner tree
    (outer table) or the computed result node (inner table)."""

    __slots__ = ("cell", "left", "right")

    def __init__(self):
        self.cell = None
        self.left = None
        self.right = None


class Engine:
    """One arithmetic session: a strategy, its memo tables, and counters.

    Engines are single-threaded; several may share one genealogy tree
    (node identity then holds across them), while tables and stats stay
    per-engine.
    """

    def __init__(self, strategy: Strategy = Strategy.MEMO_PARENTS,
                 genealogy: Optional[Genealogy] = None,
                 max_depth: int = DEFAULT_MAX_DEPTH,
                 ge_memo: bool = False):
        if sys.getrecursionlimit() < 30_000:
            sys.setrecursionlimit(30_000)
        self.tree = genealogy if genealogy is not None else Genealogy()
        self.strategy = strategy
        self.max_depth = max_depth
        self.stats = Stats()
        self._nodes_baseline = self.tree.nodes_built
        self._ge_cache = {} if ge_memo else None
        self._plus_table = _TableNode()
        self._times_table = _TableNode()
        self._deadline = None
        self._tick_count = 0
        self.on_fill: Optional[Callable] = None  # (op, x, y) on each table fill

    # -- configuration / stats -------------------------------------------

    def set_strategy(self, strategy: Strategy) -> None:
        """Switch strategy and drop the memo tables, so counts observed
        under one strategy never leak into another's."""
        self.strategy = strategy
        self._plus_table = _TableNode()
        self._times_table = _TableNode()

    def stats_snapshot(self) -> Stats:
        snap = self.stats.snapshot()
        snap.nodes_built = self.tree.nodes_built - self._nodes_baseline
        return snap

    def stats_reset(self) -> None:
        self.stats = Stats()
        self._nodes_baseline = self.tree.nodes_built

    def set_budget(self, seconds: Optional[float]) -> None:
        self._deadline = None if seconds is None else time.monotonic() + seconds

    def _tick(self) -> None:
        self._tick_count += 1
        if self._tick_count & 1023 == 0 and self._deadline is not None:
            if time.monotonic() > self._deadline:
                raise BudgetExceededError("evaluation budget exceeded")

    def _budget_tick(self) -> None:
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise BudgetExceededError("evaluation budget exceeded")

    # -- order relation ----------------------------------------------------

    def ge(self, x, y) -> bool:
        cache = self._ge_cache
        if cache is not None and type(x) is CanonicalNode and type(y) is CanonicalNode:
            key = (id(x), id(y))
            hit = cache.get(key)
            if hit is not None:
                self.stats.ge_calls += 1
                return hit
            res = forms.ge(x, y, self.stats, self.max_depth, tick=self._budget_tick)
            cache[key] = res
            return res
        return forms.ge(x, y, self.stats, self.max_depth, tick=self._budget_tick)

    def cmp(self, x, y) -> Ordering:
        if not self.ge(x, y):
            return Ordering.LESS
        if self.ge(y, x):
            return Ordering.EQUAL
        return Ordering.GREATER

    def eq(self, x, y) -> bool:
        return self.ge(x, y) and self.ge(y, x)

    def le(self, x, y) -> bool:
        return self.ge(y, x)

    def lt(self, x, y) -> bool:
        return not self.ge(x, y)

    def gt(self, x, y) -> bool:
        return not self.ge(y, x)

    def is_number(self, x) -> bool:
        for xl in x.left_options():
            for xr in x.right_options():
                if self.ge(xl, xr):
                    return False
        return True

    def canonical(self, x) -> CanonicalNode:
        def watched_cmp(a, b):
            self._tick()
            return self.cmp(a, b)
        return self.tree.canonical(x, cmp_fn=watched_cmp)

    # -- arithmetic ----------------------------------------------------------

    def negate(self, x: CanonicalNode) -> CanonicalNode:
        """-x is the node at the mirrored path: the definitional
        ⟨-R|-L⟩ resolves there, with no comparisons needed."""
        return self.tree.mirror(x)

    def add(self, x: CanonicalNode, y: CanonicalNode) -> CanonicalNode:
        if self.strategy is Strategy.NAIVE:
            return self.canonical(self._naive_plus(x, y))
        return self._pair_result(self._plus_table, x, y, self._fill_plus)

    def mul(self, x: CanonicalNode, y: CanonicalNode) -> CanonicalNode:
        if self.strategy is Strategy.NAIVE:
            return self.canonical(self._naive_times(x, y))
        return self._pair_result(self._times_table, x, y, self._fill_times)

    def sub(self, x: CanonicalNode, y: CanonicalNode) -> CanonicalNode:
        return self.add(x, self.negate(y))

    def plus_form(self, x, y):
        """The definitional sum form; option terms use this strategy's +."""
        if self.strategy is Strategy.NAIVE:
            return self._naive_plus(x, y)
        left = tuple(self.add(xl, y) for xl in x.left_options()) + \
            tuple(self.add(x, yl) for yl in y.left_options())
        right = tuple(self.add(xr, y) for xr in x.right_options()) + \
            tuple(self.add(x, yr) for yr in y.right_options())
        return Form(left, right)

    def times_form(self, x, y):
        """The definitional product form; inner +, -, × all routed through
        this strategy.  Terms that mention a missing option are omitted."""
        if self.strategy is Strategy.NAIVE:
            return self._naive_times(x, y)

        def term(xo, yo):
            return self.sub(self.add(self.mul(xo, y), self.mul(x, yo)),
                            self.mul(xo, yo))

        xl, xr = x.left_options(), x.right_options()
        yl, yr = y.left_options(), y.right_options()
        left = tuple(term(a, b) for a in xl for b in yl) + \
            tuple(term(a, b) for a in xr for b in yr)
        right = tuple(term(a, b) for a in xl for b in yr) + \
            tuple(term(a, b) for a in xr for b in yl)
        return Form(left, right)

    # -- memo tables --------------------------------------------------------

    def select(self, table: _TableNode, x: CanonicalNode) -> _TableNode:
        """The table position corresponding to x: by stored path under
        MEMO_PARENTS (no comparisons), by lockstep ordering walk against
        the genealogy otherwise."""
        stats = self.stats
        if self.strategy is Strategy.MEMO_PARENTS:
            for side in self.tree.path_of(x):
                stats.select_steps += 1
                if side is Side.LEFT:
                    nxt = table.left
                    if nxt is None:
                        nxt = table.left = _TableNode()
                else:
                    nxt = table.right
                    if nxt is None:
                        nxt = table.right = _TableNode()
                table = nxt
            return table
        node = self.tree.root()
        while True:
            order = self.cmp(x, node)
            if order is Ordering.EQUAL:
                return table
            stats.select_steps += 1
            if order is Ordering.LESS:
                node = node.left_child()
                nxt = table.left
                if nxt is None:
                    nxt = table.left = _TableNode()
            else:
                node = node.right_child()
                nxt = table.right
                if nxt is None:
                    nxt = table.right = _TableNode()
            table = nxt

    def _pair_result(self, table, x, y, fill):
        self._tick()
        outer = self.select(table, x)
        if outer.cell is None:
            outer.cell = _TableNode()
        inner = self.select(outer.cell, y)
        if inner.cell is None:
            inner.cell = fill(x, y)
        else:
            self.stats.table_hits += 1
        return inner.cell

    def _fill_plus(self, x, y):
        self.stats.plus_evals += 1
        if self.on_fill is not None:
            self.on_fill("plus", x, y)
        return self.canonical(self.plus_form(x, y))

    def _fill_times(self, x, y):
        self.stats.times_evals += 1
        if self.on_fill is not None:
            self.on_fill("times", x, y)
        return self.canonical(self.times_form(x, y))

    # -- naive strategy -------------------------------------------------------

    def _naive_plus(self, a, b) -> LazyOptions:
        self.stats.plus_evals += 1
        self._tick()

        def lefts():
            return tuple(self._naive_plus(al, b) for al in a.left_options()) + \
                tuple(self._naive_plus(a, bl) for bl in b.left_options())

        def rights():
            return tuple(self._naive_plus(ar, b) for ar in a.right_options()) + \
                tuple(self._naive_plus(a, br) for br in b.right_options())

        return LazyOptions(lefts, rights)

    def _naive_negate(self, a) -> LazyOptions:
        self._tick()

        def lefts():
            return tuple(self._naive_negate(r) for r in a.right_options())

        def rights():
            return tuple(self._naive_negate(l) for l in a.left_options())

        return LazyOptions(lefts, rights)

    def _naive_times(self, x, y) -> LazyOptions:
        self.stats.times_evals += 1
        self._tick()

        def term(xo, yo):
            return self._naive_plus(
                self._naive_plus(self._naive_times(xo, y),
                                 self._naive_times(x, yo)),
                self._naive_negate(self._naive_times(xo, yo)))

        def lefts():
            xl, xr = x.left_options(), x.right_options()
            yl, yr = y.left_options(), y.right_options()
            return tuple(term(a, b) for a in xl for b in yl) + \
                tuple(term(a, b) for a in xr for b in yr)

        def rights():
            xl, xr = x.left_options(), x.right_options()
            yl, yr = y.left_options(), y.right_options()
            return tuple(term(a, b) for a in xl for b in yr) + \
                tuple(term(a, b) for a in xr for b in yl)

        return LazyOptions(lefts, rights)
