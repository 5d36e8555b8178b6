"""The calculator's expression language.

Grammar::

    stmt    := IDENT '=' expr | expr
    expr    := cmpexpr
    cmpexpr := addexpr (REL addexpr)?          REL in < <= = != >= >
    addexpr := mulexpr (('+'|'-') mulexpr)*
    mulexpr := unary ('*' unary)*
    unary   := '-' unary | atom
    atom    := NUMBER | IDENT | '(' expr ')' | '<' opts '|' opts '>'
    opts    := (expr (',' expr)*)?

NUMBER is an integer or ``i/d`` with d a positive power of two.  ``/`` is
notation inside dyadic literals only, never an operator: division does not
stay within the short surreals.  Unicode ⟨ ⟩ ≤ ≥ ≠ are accepted alongside
the ASCII spellings.  Relational operators are non-associative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .dyadic import Dyadic
from .engine import Engine
from .errors import EvalError, SurrealSyntaxError
from .forms import Form, Ordering
from .genealogy import CanonicalNode, render_node

RESERVED = frozenset({"true", "false"})

# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class DyadicLit:
    value: Dyadic


@dataclass(frozen=True)
class FormLit:
    left: tuple
    right: tuple


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Ast"


@dataclass(frozen=True)
class Add:
    a: "Ast"
    b: "Ast"


@dataclass(frozen=True)
class Sub:
    a: "Ast"
    b: "Ast"


@dataclass(frozen=True)
class Mul:
    a: "Ast"
    b: "Ast"


@dataclass(frozen=True)
class Compare:
    op: str  # one of < <= = != >= >
    a: "Ast"
    b: "Ast"


@dataclass(frozen=True)
class Let:
    name: str
    expr: "Ast"


Ast = Union[DyadicLit, FormLit, Var, Neg, Add, Sub, Mul, Compare, Let]


# -- values ------------------------------------------------------------------


@dataclass(frozen=True)
class SurrealValue:
    node: CanonicalNode


@dataclass(frozen=True)
class BoolValue:
    flag: bool


Value = Union[SurrealValue, BoolValue]


# -- lexer -------------------------------------------------------------------

_REL_ALIASES = {"≤": "<=", "≥": ">=", "≠": "!="}
_PUNCT = {"+", "-", "*", "(", ")", "|", ",", "=", "<", ">"}


@dataclass(frozen=True)
class _Token:
    kind: str  # NUM IDENT PUNCT REL EOF
    text: str
    pos: int
    value: Dyadic = None


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _REL_ALIASES:
            tokens.append(_Token("REL", _REL_ALIASES[ch], i))
            i += 1
            continue
        if ch == "⟨":
            tokens.append(_Token("PUNCT", "<", i))
            i += 1
            continue
        if ch == "⟩":
            tokens.append(_Token("PUNCT", ">", i))
            i += 1
            continue
        if text.startswith(("<=", ">=", "!="), i):
            tokens.append(_Token("REL", text[i:i + 2], i))
            i += 2
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i < n and text[i] == "/" and i + 1 < n and text[i + 1].isdigit():
                i += 1
                while i < n and text[i].isdigit():
                    i += 1
                num_text, den_text = text[start:i].split("/")
                den = int(den_text)
                if den <= 0 or den & (den - 1) != 0:
                    raise SurrealSyntaxError(
                        "denominator must be a power of two", start)
                tokens.append(_Token("NUM", text[start:i], start,
                                     Dyadic(int(num_text), den.bit_length() - 1)))
            else:
                tokens.append(_Token("NUM", text[start:i], start,
                                     Dyadic(int(text[start:i]))))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(_Token("IDENT", text[start:i], start))
            continue
        if ch == "/":
            raise SurrealSyntaxError("unknown operator /", i)
        if ch in _PUNCT:
            tokens.append(_Token("PUNCT", ch, i))
            i += 1
            continue
        raise SurrealSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("EOF", "", n))
    return tokens


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0
        # inside a form literal a bare < or > brackets options rather than
        # comparing; parentheses restore the relational reading
        self._rel_ok = [True]

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.next()
        if tok.text != text:
            raise SurrealSyntaxError(
                f"expected {text!r}, found {tok.text or 'end of input'!r}",
                tok.pos)
        return tok

    def statement(self) -> Ast:
        if (self.peek().kind == "IDENT"
                and self.tokens[self.i + 1].text == "="
                and self.tokens[self.i + 1].kind == "PUNCT"):
            name_tok = self.next()
            if name_tok.text in RESERVED:
                raise SurrealSyntaxError(
                    f"{name_tok.text} is a reserved word", name_tok.pos)
            self.next()  # '='
            node = Let(name_tok.text, self.expr())
        else:
            node = self.expr()
        tail = self.peek()
        if tail.kind != "EOF":
            raise SurrealSyntaxError(
                f"unexpected {tail.text!r} after statement", tail.pos)
        return node

    def expr(self) -> Ast:
        return self.cmpexpr()

    def _at_rel(self) -> bool:
        tok = self.peek()
        if tok.kind == "REL" or tok.text == "=":
            return True
        return tok.text in ("<", ">") and self._rel_ok[-1]

    def cmpexpr(self) -> Ast:
        left = self.addexpr()
        if self._at_rel():
            tok = self.next()
            right = self.addexpr()
            if self._at_rel():
                raise SurrealSyntaxError(
                    "relational operators do not chain", self.peek().pos)
            return Compare(tok.text, left, right)
        return left

    def addexpr(self) -> Ast:
        node = self.mulexpr()
        while self.peek().text in ("+", "-"):
            op = self.next().text
            rhs = self.mulexpr()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def mulexpr(self) -> Ast:
        node = self.unary()
        while self.peek().text == "*":
            self.next()
            node = Mul(node, self.unary())
        return node

    def unary(self) -> Ast:
        if self.peek().text == "-":
            self.next()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Ast:
        tok = self.next()
        if tok.kind == "NUM":
            return DyadicLit(tok.value)
        if tok.kind == "IDENT":
            return Var(tok.text)
        if tok.text == "(":
            self._rel_ok.append(True)
            inner = self.expr()
            self.expect(")")
            self._rel_ok.pop()
            return inner
        if tok.text == "<":
            self._rel_ok.append(False)
            left = self.opts()
            self.expect("|")
            right = self.opts()
            self.expect(">")
            self._rel_ok.pop()
            return FormLit(tuple(left), tuple(right))
        raise SurrealSyntaxError(
            f"unexpected {tok.text or 'end of input'!r}", tok.pos)

    def opts(self) -> list[Ast]:
        if self.peek().text in ("|", ">"):
            return []
        out = [self.expr()]
        while self.peek().text == ",":
            self.next()
            out.append(self.expr())
        return out


def parse(text: str) -> Ast:
    """Parse one statement."""
    return _Parser(_tokenize(text)).statement()


# -- evaluation --------------------------------------------------------------


def eval_ast(ast: Ast, env: dict, engine: Engine) -> Value:
    """Evaluate against the engine; ``env`` maps variable names to values."""
    if isinstance(ast, DyadicLit):
        return SurrealValue(engine.tree.from_dyadic(ast.value))
    if isinstance(ast, Var):
        if ast.name not in env:
            raise EvalError(f"unbound variable {ast.name}")
        return env[ast.name]
    if isinstance(ast, Let):
        value = eval_ast(ast.expr, env, engine)
        env[ast.name] = value
        return value
    if isinstance(ast, FormLit):
        left = tuple(_node(eval_ast(o, env, engine)) for o in ast.left)
        right = tuple(_node(eval_ast(o, env, engine)) for o in ast.right)
        form = Form(left, right)
        if not engine.is_number(form):
            raise EvalError("form is not a number")
        return SurrealValue(engine.canonical(form))
    if isinstance(ast, Neg):
        return SurrealValue(engine.negate(_node(eval_ast(ast.operand, env, engine))))
    if isinstance(ast, Add):
        return SurrealValue(engine.add(_node(eval_ast(ast.a, env, engine)),
                                       _node(eval_ast(ast.b, env, engine))))
    if isinstance(ast, Sub):
        return SurrealValue(engine.sub(_node(eval_ast(ast.a, env, engine)),
                                       _node(eval_ast(ast.b, env, engine))))
    if isinstance(ast, Mul):
        return SurrealValue(engine.mul(_node(eval_ast(ast.a, env, engine)),
                                       _node(eval_ast(ast.b, env, engine))))
    if isinstance(ast, Compare):
        a = _node(eval_ast(ast.a, env, engine))
        b = _node(eval_ast(ast.b, env, engine))
        order = engine.cmp(a, b)
        return BoolValue(_REL_TESTS[ast.op](order))
    raise EvalError(f"cannot evaluate {ast!r}")


_REL_TESTS = {
    "<": lambda o: o is Ordering.LESS,
    "<=": lambda o: o is not Ordering.GREATER,
    "=": lambda o: o is Ordering.EQUAL,
    "!=": lambda o: o is not Ordering.EQUAL,
    ">=": lambda o: o is not Ordering.LESS,
    ">": lambda o: o is Ordering.GREATER,
}


def _node(value: Value) -> CanonicalNode:
    if isinstance(value, SurrealValue):
        return value.node
    raise EvalError("comparison results cannot be used in arithmetic")


def format_value(value: Value) -> str:
    """Render a result: booleans plainly, surreals as name, form and
    generation."""
    if isinstance(value, BoolValue):
        return "true" if value.flag else "false"
    return render_node(value.node)


# -- pretty printer (inverse of parse, used by round-trip tests) -------------

_PREC = {Compare: 1, Add: 2, Sub: 2, Mul: 3, Neg: 4}


def render(ast: Ast) -> str:
    if isinstance(ast, Let):
        return f"{ast.name} = {render(ast.expr)}"
    if isinstance(ast, Compare) and ast.op == "=" and isinstance(ast.a, Var):
        # "x = y" at statement level would reparse as a binding
        return f"({_render(ast.a, 0)}) = {_render(ast.b, _PREC[Compare] + 1)}"
    return _render(ast, 0)


def _render(ast: Ast, parent_prec: int, in_form: bool = False) -> str:
    if isinstance(ast, DyadicLit):
        return str(ast.value)
    if isinstance(ast, Var):
        return ast.name
    if isinstance(ast, FormLit):
        left = ",".join(_render(o, 0, True) for o in ast.left)
        right = ",".join(_render(o, 0, True) for o in ast.right)
        return f"<{left}|{right}>"
    prec = _PREC[type(ast)]
    if isinstance(ast, Neg):
        body = f"-{_render(ast.operand, prec, in_form)}"
    elif isinstance(ast, Compare):
        if in_form and ast.op in ("<", ">"):
            # a bare < or > inside a form literal would read as a bracket
            return (f"({_render(ast.a, prec + 1)} {ast.op} "
                    f"{_render(ast.b, prec + 1)})")
        body = (f"{_render(ast.a, prec + 1, in_form)} {ast.op} "
                f"{_render(ast.b, prec + 1, in_form)}")
    else:
        op = {Add: "+", Sub: "-", Mul: "*"}[type(ast)]
        body = (f"{_render(ast.a, prec, in_form)} {op} "
                f"{_render(ast.b, prec + 1, in_form)}")
    return f"({body})" if prec < parent_prec else body
