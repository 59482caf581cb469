"""Tiny arithmetic language for target functions ``F(x, y)``.

Grammar (loosest binding first)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := primary ('^' unary)?          # right associative
    primary := NUMBER | 'x' | 'y' | FUNC '(' expr ')' | '(' expr ')'

so ``-2^2 == -4`` and ``2^3^2 == 512``.  Implicit multiplication (``10x``)
is rejected.  Evaluation works elementwise on numpy arrays.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

import numpy as np

FUNCTIONS = {
    "sin": np.sin,
    "cos": np.cos,
    "exp": np.exp,
    "sqrt": np.sqrt,
    "abs": np.abs,
}
VARIABLES = ("x", "y")
MAX_DEPTH = 100


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class UnknownIdentifierError(ParseError):
    pass


class EvalDomainError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expr"


Expr = Union[Num, Var, Neg, BinOp, Call]

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_]\w*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(source: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(source):
        mt = _TOKEN_RE.match(source, pos)
        if mt is None:
            raise ParseError(f"unexpected character {source[pos]!r}", pos)
        kind = mt.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, mt.group(), pos))
        pos = mt.end()
    toks.append(_Tok("end", "", len(source)))
    return toks


class _Parser:
    def __init__(self, source: str):
        self.toks = _tokenize(source)
        self.i = 0
        self.depth = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> None:
        if self.tok.text != text:
            raise ParseError(f"expected {text!r}, found {self._describe()}", self.tok.pos)
        self.advance()

    def _describe(self) -> str:
        return "end of input" if self.tok.kind == "end" else repr(self.tok.text)

    def _enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ParseError("expression nested too deeply", self.tok.pos)

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self._describe()}", self.tok.pos)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.tok.text in ("*", "/") and self.tok.kind == "op":
            op = self.advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Expr:
        self._enter()
        try:
            if self.tok.kind == "op" and self.tok.text in ("-", "+"):
                sign = self.advance().text
                operand = self.unary()
                return Neg(operand) if sign == "-" else operand
            return self.power()
        finally:
            self.depth -= 1

    def power(self) -> Expr:
        base = self.primary()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            return BinOp("^", base, self.unary())
        return base

    def primary(self) -> Expr:
        t = self.tok
        if t.kind == "num":
            self.advance()
            if self.tok.kind in ("ident", "num"):
                raise ParseError("implicit multiplication is not supported", self.tok.pos)
            return Num(float(t.text))
        if t.kind == "ident":
            self.advance()
            if t.text in VARIABLES:
                return Var(t.text)
            if t.text in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(t.text, arg)
            raise UnknownIdentifierError(f"unknown identifier {t.text!r}", t.pos)
        if t.kind == "op" and t.text == "(":
            self.advance()
            self._enter()
            try:
                node = self.expr()
            finally:
                self.depth -= 1
            self.expect(")")
            return node
        raise ParseError(f"unexpected {self._describe()}", t.pos)


def parse(source: str) -> Expr:
    """Parse ``source``; raises :class:`ParseError` with a 0-based position."""
    if not isinstance(source, str):
        raise TypeError("source must be str")
    return _Parser(source).parse()


def eval_expr(expr: Expr, x, y):
    """Evaluate on scalars or broadcastable arrays.

    Division by zero raises :class:`ZeroDivisionError`; ``sqrt`` of a
    negative number raises :class:`EvalDomainError`.
    """
    scalar = np.ndim(x) == 0 and np.ndim(y) == 0
    with np.errstate(all="ignore"):
        out = _eval(expr, np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    out = np.broadcast_to(out, np.broadcast(np.asarray(x), np.asarray(y)).shape)
    return float(out) if scalar else np.array(out, dtype=float)


def _eval(node: Expr, x, y):
    if isinstance(node, Num):
        return np.float64(node.value)
    if isinstance(node, Var):
        return x if node.name == "x" else y
    if isinstance(node, Neg):
        return -_eval(node.operand, x, y)
    if isinstance(node, Call):
        arg = _eval(node.arg, x, y)
        if node.func == "sqrt" and np.any(arg < 0):
            raise EvalDomainError("sqrt of a negative number")
        return FUNCTIONS[node.func](arg)
    left = _eval(node.left, x, y)
    right = _eval(node.right, x, y)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if node.op == "/":
        if np.any(right == 0):
            raise ZeroDivisionError("division by zero")
        return left / right
    return np.power(left, right)


def to_source(node: Expr) -> str:
    """Fully parenthesised text that parses back to an equivalent tree."""
    if isinstance(node, Num):
        v = node.value
        if np.isinf(v):
            return "1e999" if v > 0 else "(-1e999)"
        return repr(v) if v >= 0 else f"({v!r})"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return f"(-{to_source(node.operand)})"
    if isinstance(node, Call):
        return f"{node.func}({to_source(node.arg)})"
    return f"({to_source(node.left)} {node.op} {to_source(node.right)})"
