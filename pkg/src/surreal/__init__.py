"""Exact arithmetic on Conway's short surreal numbers.

A short surreal is a finitely representable surreal number — equivalently
a dyadic rational — built from the order relation and the +, -, ×
definitions alone.  The package provides the form primitives, the lazy
genealogy tree of canonical surreals, a memoizing arithmetic engine with
selectable evaluation strategies, an expression language with a REPL, a
benchmark harness, and a small JSON calculator service.
"""

from .dyadic import Dyadic, parse_dyadic
from .errors import (
    BudgetExceededError,
    DepthLimitError,
    EvalError,
    GenerationLimitError,
    ResourceLimitError,
    SurrealError,
    SurrealSyntaxError,
)
from .forms import (
    Form,
    Ordering,
    cmp,
    eq,
    ge,
    gt,
    is_number,
    le,
    lt,
    ne,
    render_form,
)
from .genealogy import CanonicalNode, Genealogy, Side, render_node
from .engine import Engine, Stats, Strategy

__all__ = [
    "BudgetExceededError",
    "CanonicalNode",
    "DepthLimitError",
    "Dyadic",
    "Engine",
    "EvalError",
    "Form",
    "Genealogy",
    "GenerationLimitError",
    "Ordering",
    "ResourceLimitError",
    "Side",
    "Stats",
    "Strategy",
    "SurrealError",
    "SurrealSyntaxError",
    "cmp",
    "eq",
    "ge",
    "gt",
    "is_number",
    "le",
    "lt",
    "ne",
    "parse_dyadic",
    "render_form",
    "render_node",
]
