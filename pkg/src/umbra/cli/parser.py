"""Recursive-descent parser for polynomial expressions.

Grammar (``^`` binds tightest and associates to the right, then unary minus,
then ``*``, then ``+``/``-``)::

    expr    := term (("+" | "-") term)*
    term    := unary ("*" unary)*
    unary   := "-" unary | power
    power   := atom ("^" exponent)?
    exponent:= INT ("^" exponent)?
    atom    := NUMBER | "x" | "B" "(" INT ("," INT)? ")" | "E" "(" INT ")" | "(" expr ")"
    NUMBER  := INT ("/" INT)?

Juxtaposition (``2x``) is a syntax error.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..algebra import Polynomial, fmt_rational
from ..config import DEFAULT


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += ", expected one of: " + " ".join(repr(e) for e in self.expected)
        super().__init__(detail)


# AST


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Family:
    kind: str  # "B" or "E"
    n: int
    r: Union[int, None] = None


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-", "*"
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Var, Family, Neg, BinOp, Pow]


# lexer

_TOKEN = re.compile(r"\s*(?:(\d+)|([xBE])|([-+*^(),/])|(\S))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int", "name", "op", "end"
    text: str
    offset: int  # byte offset into the UTF-8 source


def _tokenize(src: str) -> list:
    toks = []
    pos = 0
    data = src
    while True:
        m = _TOKEN.match(data, pos)
        if not m:
            break
        start = m.start(m.lastindex)
        off = len(data[:start].encode())
        if m.group(1):
            toks.append(_Tok("int", m.group(1), off))
        elif m.group(2):
            toks.append(_Tok("name", m.group(2), off))
        elif m.group(3):
            toks.append(_Tok("op", m.group(3), off))
        else:
            raise ParseError(f"unexpected character {m.group(4)!r}", off)
        pos = m.end()
    toks.append(_Tok("end", "", len(data.encode())))
    return toks


class _Parser:
    def __init__(self, src: str, max_degree: int):
        self.toks = _tokenize(src)
        self.i = 0
        self.max_degree = max_degree

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, expected, message=None):
        tok = self.tok
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(message or f"unexpected {what}", tok.offset, expected)

    def expect(self, text: str):
        if self.tok.text != text or self.tok.kind == "int":
            self.fail({text})
        return self.advance()

    def integer(self) -> int:
        if self.tok.kind != "int":
            self.fail({"integer"})
        return int(self.advance().text)

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            self.fail({"+", "-", "*", "^", "end of input"})
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.tok.kind == "op" and self.tok.text == "*":
            self.advance()
            left = BinOp("*", left, self.unary())
        return left

    def unary(self) -> Expr:
        if self.tok.kind == "op" and self.tok.text == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            return Pow(base, self.exponent())
        return base

    def exponent(self) -> int:
        off = self.tok.offset
        e = self.integer()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            inner = self.exponent()
            # e ** inner, refusing anything beyond the degree cap
            if e > 1 and inner > self.max_degree.bit_length():
                raise ParseError(f"exponent exceeds max degree {self.max_degree}", off)
            e = e**inner
        if e > self.max_degree:
            raise ParseError(f"exponent exceeds max degree {self.max_degree}", off)
        return e

    def family_index(self) -> int:
        off = self.tok.offset
        n = self.integer()
        if n > self.max_degree:
            raise ParseError(f"index exceeds max degree {self.max_degree}", off)
        return n

    def atom(self) -> Expr:
        tok = self.tok
        if tok.kind == "int":
            self.advance()
            num = int(tok.text)
            if self.tok.kind == "op" and self.tok.text == "/":
                self.advance()
                if self.tok.kind != "int":
                    self.fail({"integer"})
                den_tok = self.advance()
                if int(den_tok.text) == 0:
                    raise ParseError("zero denominator", den_tok.offset)
                return Num(Fraction(num, int(den_tok.text)))
            return Num(Fraction(num))
        if tok.kind == "name":
            self.advance()
            if tok.text == "x":
                return Var()
            self.expect("(")
            n = self.family_index()
            r = None
            if tok.text == "B" and self.tok.text == ",":
                self.advance()
                r = self.integer()
            if self.tok.text != ")":
                self.fail({")", ","} if tok.text == "B" and r is None else {")"})
            self.advance()
            return Family(tok.text, n, r)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            e = self.expr()
            if not (self.tok.kind == "op" and self.tok.text == ")"):
                self.fail({")", "+", "-", "*", "^"})
            self.advance()
            return e
        self.fail({"number", "x", "B", "E", "(", "-"})


def parse_expr(src: str, max_degree: int = DEFAULT.max_degree) -> Expr:
    """Parse ``src`` into an expression tree; raises :class:`ParseError`."""
    return _Parser(src, max_degree).parse()


# printing

_PREC = {"+": 1, "-": 1, "*": 2}
_NEG, _POW, _ATOM = 3, 4, 5


def _prec(e: Expr) -> int:
    if isinstance(e, BinOp):
        return _PREC[e.op]
    if isinstance(e, Neg):
        return _NEG
    if isinstance(e, Pow):
        return _POW
    return _ATOM


def to_source(e: Expr) -> str:
    """Print with the fewest parentheses that re-parse to the same tree."""
    if isinstance(e, Num):
        return fmt_rational(e.value)
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Family):
        return f"{e.kind}({e.n})" if e.r is None else f"{e.kind}({e.n}, {e.r})"
    if isinstance(e, Neg):
        inner = to_source(e.operand)
        # "--x" is fine, but a sum or product under the minus needs parentheses
        return f"-{inner}" if _prec(e.operand) >= _NEG else f"-({inner})"
    if isinstance(e, Pow):
        base = to_source(e.base)
        simple = _prec(e.base) == _ATOM and not (
            isinstance(e.base, Num) and e.base.value.denominator != 1
        )
        return f"{base}^{e.exponent}" if simple else f"({base})^{e.exponent}"
    p = _PREC[e.op]
    left = to_source(e.left)
    if _prec(e.left) < p:
        left = f"({left})"
    right = to_source(e.right)
    # left-associative: an equal-precedence right operand needs parentheses
    if _prec(e.right) <= p:
        right = f"({right})"
    return f"{left} {e.op} {right}"


# lowering


def lower(e: Expr) -> Polynomial:
    """Evaluate the tree to its polynomial in x."""
    from .. import classical

    if isinstance(e, Num):
        return Polynomial.constant(e.value)
    if isinstance(e, Var):
        return Polynomial.x()
    if isinstance(e, Family):
        if e.kind == "E":
            return classical.euler_poly(e.n)
        if e.r is None:
            return classical.bernoulli_poly(e.n)
        return classical.bernoulli_poly_order(e.n, e.r)
    if isinstance(e, Neg):
        return -lower(e.operand)
    if isinstance(e, Pow):
        return lower(e.base) ** e.exponent
    left, right = lower(e.left), lower(e.right)
    if e.op == "+":
        return left + right
    if e.op == "-":
        return left - right
    return left * right
