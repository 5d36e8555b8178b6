"""Surreal forms and the recursive order relation.

A form is a pair of finite option collections ``⟨L|R⟩`` whose members are
previously built surreals.  Everything else in the engine (the genealogy
tree, arithmetic, the calculator) is defined on top of the single primitive
``ge`` implemented here.

``ge`` is implemented iteratively with an explicit stack so that the
descent guard can be far deeper than the interpreter's call stack, and so
that chains of single-option forms (the integer spine of the tree) run in a
tight loop.  The loop performs exactly the same virtual calls, in the same
order and with the same short-circuiting, as the textbook recursion::

    def ge(x, y):
        for xr in x.right_options():
            if ge(y, xr):          # some x_R <= y
                return False
        for yl in y.left_options():
            if ge(yl, x):          # some y_L >= x
                return False
        return True

and the ``ge_calls`` counter records every one of those virtual calls.
"""

from __future__ import annotations

import enum

from .errors import DepthLimitError

DEFAULT_MAX_DEPTH = 100_000


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self) -> str:  # pragma: no cover
        return self.name.capitalize()


class Form:
    """A surreal form: ordered option tuples, duplicates permitted.

    Options may be other ``Form`` instances or canonical tree nodes;
    anything exposing ``left_options()`` / ``right_options()`` works.
    """

    __slots__ = ("left", "right")

    #: spine value for the integer fast path; plain forms never qualify.
    spine = None

    def __init__(self, left=(), right=()):
        self.left = tuple(left)
        self.right = tuple(right)

    def left_options(self):
        return self.left

    def right_options(self):
        return self.right

    def __repr__(self) -> str:
        return f"Form({render_form(self)})"


def _ge_spine_simulated(a: int, b: int) -> tuple[bool, int]:
    """Order relation on two integer-spine values, simulated call by call.

    A spine node has at most one option: value-1 on the left for
    positives, value+1 on the right for negatives.  Returns
    ``(result, virtual_call_count)``.  Kept as the oracle for the closed
    form below.
    """
    calls = 0
    stack = []  # (a, b, resumed_after_cond1)
    res = None
    while True:
        if res is None:
            calls += 1
            if a < 0:  # lone right option a+1: cond1 subcall ge(b, a+1)
                stack.append((a, b, False))
                a, b = b, a + 1
                continue
            if b > 0:  # lone left option b-1: cond2 subcall ge(b-1, a)
                stack.append((a, b, True))
                a, b = b - 1, a
                continue
            res = True
        else:
            if not stack:
                return res, calls
            pa, pb, after_cond1 = stack.pop()
            if res:
                res = False  # a subcall held, so the parent's condition fails
                continue
            if not after_cond1 and pb > 0:
                stack.append((pa, pb, True))
                a, b = pb - 1, pa
                res = None
                continue
            res = True


def _ge_spine(a: int, b: int) -> tuple[bool, int]:
    """Closed form of ``_ge_spine_simulated``.

    The definitional recursion on single-option chains degenerates to an
    alternating descent whose length (and outcome) depends only on the two
    values, so the virtual calls can be counted without walking.  Equality
    with the simulation is property-tested.
    """
    if a >= 0:
        if b <= 0:
            return True, 1  # both conditions vacuous
        if a >= b:
            return True, 2 * b + 1
        return False, 2 * a + 2
    if b > 0:
        return False, 2  # x_R <= y holds immediately
    p, q = -b, -a  # mirror the negative chain onto the positive one
    if p >= q:
        return True, 2 * q + 1
    return False, 2 * p + 2


def ge(x, y, stats=None, max_depth: int = DEFAULT_MAX_DEPTH, tick=None) -> bool:
    """True iff x >= y: no right option of x is <= y and no left option of
    y is >= x.

    Total on finite acyclic number forms; raises ``DepthLimitError`` once
    the descent exceeds ``max_depth`` (a cyclic or malformed input).
    ``stats.ge_calls`` is incremented by the number of virtual calls when a
    sink is attached.  ``tick``, if given, is invoked periodically so long
    evaluations can be budgeted.
    """
    calls = 0
    stack = []  # frames: [x, y, options_tuple, stage, index]
    res = None
    cur_x, cur_y = x, y
    while True:
        if res is None:
            sx = cur_x.spine
            if sx is not None:
                sy = cur_y.spine
                if sy is not None:
                    res, c = _ge_spine(sx, sy)
                    calls += c
                    continue
            calls += 1
            if len(stack) >= max_depth:
                raise DepthLimitError(
                    f"order-relation descent exceeded {max_depth} steps "
                    "(cyclic or malformed form?)"
                )
            if tick is not None and calls & 1023 == 0:
                tick()
            xr = cur_x.right_options()
            if xr:
                stack.append([cur_x, cur_y, xr, 1, 0])
                cur_x, cur_y = cur_y, xr[0]
                continue
            yl = cur_y.left_options()
            if yl:
                stack.append([cur_x, cur_y, yl, 2, 0])
                cur_x, cur_y = yl[0], cur_x
                continue
            res = True
        else:
            if not stack:
                break
            frame = stack.pop()
            if res:
                res = False  # witnessing option found: parent call fails
                continue
            px, py, opts, stage, i = frame
            i += 1
            if i < len(opts):
                frame[4] = i
                stack.append(frame)
                if stage == 1:
                    cur_x, cur_y = py, opts[i]
                else:
                    cur_x, cur_y = opts[i], px
                res = None
                continue
            if stage == 1:
                yl = py.left_options()
                if yl:
                    stack.append([px, py, yl, 2, 0])
                    cur_x, cur_y = yl[0], px
                    res = None
                    continue
            res = True
    if stats is not None:
        stats.ge_calls += calls
    return res


def le(x, y, stats=None, **kw) -> bool:
    return ge(y, x, stats, **kw)


def lt(x, y, stats=None, **kw) -> bool:
    # valid for numbers only; games are rejected upstream by is_number
    return not ge(x, y, stats, **kw)


def gt(x, y, stats=None, **kw) -> bool:
    return not ge(y, x, stats, **kw)


def eq(x, y, stats=None, **kw) -> bool:
    return ge(x, y, stats, **kw) and ge(y, x, stats, **kw)


def ne(x, y, stats=None, **kw) -> bool:
    return not eq(x, y, stats, **kw)


def cmp(x, y, stats=None, **kw) -> Ordering:
    """The unique ordering of two number forms, short-circuiting: a Less
    verdict costs a single ge root call."""
    if not ge(x, y, stats, **kw):
        return Ordering.LESS
    if ge(y, x, stats, **kw):
        return Ordering.EQUAL
    return Ordering.GREATER


def is_number(x, stats=None, **kw) -> bool:
    """True iff no right option is <= any left option.

    Forms like ⟨0|0⟩ fail this and denote games, not numbers; the
    evaluator rejects them before they reach arithmetic.
    """
    for xl in x.left_options():
        for xr in x.right_options():
            if ge(xl, xr, stats, **kw):  # xr <= xl
                return False
    return True


def render_form(form, ascii_brackets: bool = False) -> str:
    """Canonical textual rendering ``⟨L|R⟩`` with named canonicals
    substituted for node options."""
    lo, hi = ("<", ">") if ascii_brackets else ("⟨", "⟩")

    def opt(o) -> str:
        name = getattr(o, "name", None)
        if name is not None:
            return str(name)
        return render_form(o, ascii_brackets)

    left = ",".join(opt(o) for o in form.left_options())
    right = ",".join(opt(o) for o in form.right_options())
    return f"{lo}{left}|{right}{hi}"
