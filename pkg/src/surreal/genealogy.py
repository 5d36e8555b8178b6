"""The lazily built binary tree of canonical short surreals.

Zero sits at the root; each node has a left child (just below it) and a
right child (just above it), built by inserting the node itself as a new
option.  A node is created at most once, on first access, and carries its
parent link and child side so paths can be traced without any order
comparisons.  Names are exact dyadic rationals assigned by the usual
interval rule; they are display/oracle data only and never feed back into
the order relation or arithmetic.
"""

from __future__ import annotations

import enum
import threading
from typing import Callable, Iterator, Optional

from . import forms
from .dyadic import Dyadic, ZERO, ONE
from .errors import GenerationLimitError
from .forms import Form, Ordering, render_form

DEFAULT_MAX_GENERATION = 4096


class Side(enum.Enum):
    LEFT = "L"
    RIGHT = "R"

    def flipped(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT

    def __str__(self) -> str:
        return self.value


class CanonicalNode:
    """A canonical surreal: at most one option per side, each born earlier.

    ``left``/``right`` mirror ``form``'s option tuples.  ``spine`` is the
    signed integer value for nodes on the all-left/all-right spine (the
    integers), enabling the fast path in the order relation; ``None``
    elsewhere.
    """

    __slots__ = (
        "tree", "form", "parent", "side", "generation", "name",
        "lo", "hi", "spine", "_left_child", "_right_child",
    )

    def __init__(self, tree, form, parent, side, generation, name, lo, hi, spine):
        self.tree = tree
        self.form = form
        self.parent = parent
        self.side = side
        self.generation = generation
        self.name = name
        self.lo = lo
        self.hi = hi
        self.spine = spine
        self._left_child = None
        self._right_child = None

    def left_options(self):
        return self.form.left

    def right_options(self):
        return self.form.right

    @property
    def left(self):
        return self.form.left

    @property
    def right(self):
        return self.form.right

    def left_child(self) -> "CanonicalNode":
        node = self._left_child
        if node is None:
            node = self.tree._force_child(self, Side.LEFT)
        return node

    def right_child(self) -> "CanonicalNode":
        node = self._right_child
        if node is None:
            node = self.tree._force_child(self, Side.RIGHT)
        return node

    def __repr__(self) -> str:
        return f"<surreal {self.name} gen {self.generation}>"


class Genealogy:
    """The shared tree of canonical surreals, grown lazily from zero.

    Child forcing is idempotent (double-checked under a lock), so one tree
    may back several engines or calculator sessions.
    """

    def __init__(self, max_generation: int = DEFAULT_MAX_GENERATION):
        self.max_generation = max_generation
        self.nodes_built = 0
        self._lock = threading.Lock()
        self._root = CanonicalNode(
            self, Form(), None, None, 0, ZERO, None, None, 0
        )

    def root(self) -> CanonicalNode:
        return self._root

    # -- construction ----------------------------------------------------

    def _force_child(self, node: CanonicalNode, side: Side) -> CanonicalNode:
        with self._lock:
            slot = "_left_child" if side is Side.LEFT else "_right_child"
            existing = getattr(node, slot)
            if existing is not None:
                return existing
            if node.generation + 1 > self.max_generation:
                raise GenerationLimitError(
                    f"generation cap {self.max_generation} exceeded"
                )
            if side is Side.LEFT:
                form = Form(node.form.left, (node,))
                lo, hi = node.lo, node.name
            else:
                form = Form((node,), node.form.right)
                lo, hi = node.name, node.hi
            child = CanonicalNode(
                self, form, node, side, node.generation + 1,
                _interval_name(lo, hi), lo, hi, _child_spine(node, side),
            )
            setattr(node, slot, child)
            self.nodes_built += 1
            return child

    # -- searching -------------------------------------------------------

    def canonical(self, x, stats=None, cmp_fn: Optional[Callable] = None,
                  tick=None) -> CanonicalNode:
        """The unique tree node equal to the number form ``x`` — the node
        where x's value was born.  Descends by one ordering test per level.
        """
        if cmp_fn is None:
            def cmp_fn(a, b):
                return forms.cmp(a, b, stats, tick=tick)
        node = self._root
        while True:
            order = cmp_fn(x, node)
            if order is Ordering.EQUAL:
                return node
            if order is Ordering.LESS:
                node = node.left_child()
            else:
                node = node.right_child()

    def from_dyadic(self, value: Dyadic) -> CanonicalNode:
        """The node named ``value``, found by exact dyadic comparisons
        only (never the order relation).  Inverse of ``value_of``."""
        node = self._root
        while node.name != value:
            node = node.left_child() if value < node.name else node.right_child()
        return node

    def integer(self, n: int) -> CanonicalNode:
        return self.from_dyadic(Dyadic(n))

    # -- paths -----------------------------------------------------------

    @staticmethod
    def path_of(node: CanonicalNode) -> tuple[Side, ...]:
        """Root-to-node child sides, recovered from parent links alone."""
        path = []
        while node.parent is not None:
            path.append(node.side)
            node = node.parent
        path.reverse()
        return tuple(path)

    def node_at(self, path) -> CanonicalNode:
        node = self._root
        for side in path:
            node = node.left_child() if side is Side.LEFT else node.right_child()
        return node

    def mirror(self, node: CanonicalNode) -> CanonicalNode:
        """The node at the side-flipped path: the negation of ``node``."""
        out = self._root
        cursor = node
        flipped = []
        while cursor.parent is not None:
            flipped.append(cursor.side.flipped())
            cursor = cursor.parent
        for side in reversed(flipped):
            out = out.left_child() if side is Side.LEFT else out.right_child()
        return out

    # -- observation -----------------------------------------------------

    @staticmethod
    def value_of(node: CanonicalNode) -> Dyadic:
        return node.name

    @staticmethod
    def generation_of(node: CanonicalNode) -> int:
        return node.generation

    def in_order(self, depth: int) -> Iterator[CanonicalNode]:
        """All nodes of generation <= depth, in increasing value order."""
        def walk(node):
            if node.generation < depth:
                yield from walk(node.left_child())
                yield node
                yield from walk(node.right_child())
            else:
                yield node
        yield from walk(self._root)

    def dump(self, depth: int) -> list[str]:
        """One line per node to ``depth``: ``path<TAB>name<TAB>form``."""
        lines = []
        for node in self.in_order(depth):
            path = "".join(str(s) for s in self.path_of(node))
            lines.append(f"{path}\t{node.name}\t{render_form(node.form)}")
        return lines


def render_node(node: CanonicalNode) -> str:
    """Display form, e.g. ``1/2 = ⟨0|1⟩ (gen 2)``."""
    return f"{node.name} = {render_form(node.form)} (gen {node.generation})"


def _interval_name(lo: Optional[Dyadic], hi: Optional[Dyadic]) -> Dyadic:
    # simplest dyadic strictly inside (lo, hi): step past the known bound
    # by one, or take the midpoint when boxed in on both sides
    if lo is None and hi is None:
        return ZERO
    if hi is None:
        return lo + ONE
    if lo is None:
        return hi - ONE
    return lo.half_sum(hi)


def _child_spine(parent: CanonicalNode, side: Side) -> Optional[int]:
    s = parent.spine
    if s is None:
        return None
    if s == 0:
        return -1 if side is Side.LEFT else 1
    if s > 0:
        return s + 1 if side is Side.RIGHT else None
    return s - 1 if side is Side.LEFT else None
