"""Input expression language for curves and families.

Grammar (whitespace insensitive, no implicit multiplication)::

    list   := expr ("," expr)*
    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := "-" factor | power
    power  := base ("^" nat)?
    base   := integer | "t" | param | "(" expr ")"

Unary minus binds looser than ``^``, so ``-t^2`` is ``-(t^2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import DomainError, ParseError
from .poly import Poly, RatFunc

__all__ = [
    "Num",
    "Sym",
    "Neg",
    "BinOp",
    "Pow",
    "parse_expr",
    "parse_list",
    "pretty",
    "evaluate",
    "parse_curve",
]

VAR = "t"


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int
    pos: int = field(default=0, compare=False)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^(),−]))")


def _tokenize(text):
    toks = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {text[i]!r}", text, i)
        num, ident, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            toks.append(("num", num, start))
        elif ident is not None:
            toks.append(("ident", ident, start))
        else:
            if op == "**":
                raise ParseError("use '^' for exponentiation", text, start)
            toks.append(("op", "-" if op == "−" else op, start))
        i = m.end()
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text, params):
        self.text = text
        self.params = set(params)
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.text, tok[2])

    def expect(self, value):
        tok = self.peek()
        if tok[0] != "op" or tok[1] != value:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise self.error(f"expected {value!r}, found {found}")
        return self.take()

    def at_op(self, *values):
        tok = self.peek()
        return tok[0] == "op" and tok[1] in values

    def parse_list(self):
        items = [self.expr()]
        while self.at_op(","):
            self.take()
            items.append(self.expr())
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return items

    def expr(self):
        node = self.term()
        while self.at_op("+", "-"):
            op = self.take()
            node = BinOp(op[1], node, self.term(), op[2])
        return node

    def term(self):
        node = self.factor()
        while True:
            if self.at_op("*", "/"):
                op = self.take()
                node = BinOp(op[1], node, self.factor(), op[2])
            elif self.peek()[0] in ("num", "ident") or self.at_op("("):
                raise self.error("implicit multiplication is not supported; use '*'")
            else:
                return node

    def factor(self):
        if self.at_op("-"):
            op = self.take()
            return Neg(self.factor(), op[2])
        return self.power()

    def power(self):
        node = self.base()
        if self.at_op("^"):
            op = self.take()
            tok = self.peek()
            if tok[0] != "num":
                raise self.error("exponent must be a nonnegative integer literal", tok)
            self.take()
            node = Pow(node, int(tok[1]), op[2])
            if self.at_op("^"):
                raise self.error("chained exponents need parentheses")
        return node

    def base(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            return Num(Fraction(int(tok[1])), tok[2])
        if tok[0] == "ident":
            if tok[1] != VAR and tok[1] not in self.params:
                raise self.error(f"unknown symbol {tok[1]!r}")
            self.take()
            return Sym(tok[1], tok[2])
        if self.at_op("("):
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        if tok[0] == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {tok[1]!r}")


def parse_list(text: str, params=()) -> list:
    """Parse a comma-separated list of expressions."""
    return _Parser(text, params).parse_list()


def parse_expr(text: str, params=()):
    items = parse_list(text, params)
    if len(items) != 1:
        raise ParseError("expected a single expression", text, 0)
    return items[0]


# -- printing --------------------------------------------------------------

def _prec(node) -> int:
    if isinstance(node, BinOp):
        return 1 if node.op in "+-" else 2
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Num):
        if node.value < 0:
            return 3
        return 2 if node.value.denominator != 1 else 5
    return 4 if isinstance(node, Pow) else 5


def pretty(node) -> str:
    """Canonical text with the fewest parentheses the grammar needs."""
    if isinstance(node, Num):
        v = node.value
        if v < 0:
            return "-" + pretty(Num(-v))
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Neg):
        inner = pretty(node.operand)
        return "-" + (inner if _prec(node.operand) >= 3 else f"({inner})")
    if isinstance(node, Pow):
        inner = pretty(node.base)
        return (inner if _prec(node.base) >= 5 else f"({inner})") + f"^{node.exp}"
    if isinstance(node, BinOp):
        p = _prec(node)
        left = pretty(node.left)
        if _prec(node.left) < p:
            left = f"({left})"
        right = pretty(node.right)
        if _prec(node.right) <= p:
            right = f"({right})"
        sep = f" {node.op} " if p == 1 else node.op
        return f"{left}{sep}{right}"
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluation ------------------------------------------------------------

def evaluate(node, env: dict, const: Callable = lambda v: v):
    """Bottom-up evaluation; ``env`` maps symbol names to values and ``const``
    lifts a Fraction literal into the target arithmetic."""
    if isinstance(node, Num):
        return const(node.value)
    if isinstance(node, Sym):
        return env[node.name]
    if isinstance(node, Neg):
        return -evaluate(node.operand, env, const)
    if isinstance(node, Pow):
        return evaluate(node.base, env, const) ** node.exp
    a = evaluate(node.left, env, const)
    b = evaluate(node.right, env, const)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    if node.op == "*":
        return a * b
    return a / b


def _to_ratfunc(node, text, p):
    t = RatFunc.gen(p)
    try:
        return evaluate(node, {VAR: t}, lambda v: RatFunc(Poly.constant(v, p)))
    except ZeroDivisionError:
        raise ParseError("division by the zero polynomial", text, _first_div(node)) from None
    except DomainError as exc:
        raise ParseError(str(exc), text, node.pos) from None


def _first_div(node):
    # position of the division whose right side vanishes is hard to pin
    # without re-evaluating; report the leftmost '/' in the subtree
    stack = [node]
    best = None
    while stack:
        n = stack.pop()
        if isinstance(n, BinOp):
            if n.op == "/" and (best is None or n.pos < best):
                best = n.pos
            stack.extend([n.left, n.right])
        elif isinstance(n, (Neg,)):
            stack.append(n.operand)
        elif isinstance(n, Pow):
            stack.append(n.base)
    return best if best is not None else node.pos


def _start(node):
    # offset of the leftmost token of a subtree
    while isinstance(node, (BinOp, Pow)):
        node = node.left if isinstance(node, BinOp) else node.base
    return node.pos


def parse_curve(text: str, p: int | None = None):
    """Parse ``"b_1, ..., b_k"`` into a TorusCurve, or an AdditiveCurve over F_p.

    >>> str(parse_curve("t, (1+t)^2"))
    't, t^2 + 2*t + 1'
    """
    from .artin_schreier import AdditiveCurve
    from .kummer import TorusCurve

    nodes = parse_list(text)
    field_p = p or 0
    coords = [_to_ratfunc(n, text, field_p) for n in nodes]
    if p is None:
        for i, (c, node) in enumerate(zip(coords, nodes)):
            if c.is_zero():
                raise ParseError(f"coordinate {i + 1} is identically zero", text, _start(node))
        return TorusCurve(tuple(coords))
    return AdditiveCurve(p, tuple(coords))
