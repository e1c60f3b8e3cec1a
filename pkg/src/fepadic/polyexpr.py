"""Recursive-descent parser for polynomial expressions in x.

Grammar (whitespace insignificant)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := rational | 'x' | '(' expr ')'
    rational := '-'? uint ('/' uint)?

A sign is only allowed on numeric literals, so ``-x`` is written ``-1*x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivideByZero, PolySyntaxError
from .exact_arith import Poly


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Var, BinOp, Pow]


def lower(node: Node) -> Poly:
    if isinstance(node, Num):
        return Poly.constant(node.value)
    if isinstance(node, Var):
        return Poly.x()
    if isinstance(node, Pow):
        return lower(node.base) ** node.exponent
    left, right = lower(node.left), lower(node.right)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return left * right


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int", "x", "eof", or the punctuation character itself
    text: str
    offset: int  # byte offset into the UTF-8 encoding


_PUNCT = set("+-*/^()")
_BASE_START = {"integer", "'x'", "'('", "'-'"}
_AFTER_FACTOR = {"'+'", "'-'", "'*'", "end of input"}


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    i = 0
    byte = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            byte += len(ch.encode())
            i += 1
            continue
        if ch in "0123456789":
            j = i
            while j < len(text) and text[j] in "0123456789":
                j += 1
            toks.append(_Tok("int", text[i:j], byte))
            byte += j - i
            i = j
            continue
        if ch == "x" or ch in _PUNCT:
            toks.append(_Tok(ch, ch, byte))
        else:
            raise PolySyntaxError("unexpected character %r" % ch, byte, _BASE_START | _AFTER_FACTOR)
        byte += len(ch.encode())
        i += 1
    toks.append(_Tok("eof", "", byte))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.pos]

    def advance(self) -> _Tok:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def fail(self, expected) -> PolySyntaxError:
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        return PolySyntaxError("unexpected %s" % found, t.offset, expected)

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "eof":
            raise self.fail(_AFTER_FACTOR | {"'^'"})
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.tok.kind == "*":
            self.advance()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Node:
        node = self.base()
        if self.tok.kind == "^":
            self.advance()
            if self.tok.kind != "int":
                raise self.fail({"integer"})
            node = Pow(node, int(self.advance().text))
        return node

    def base(self) -> Node:
        t = self.tok
        if t.kind == "x":
            self.advance()
            return Var()
        if t.kind == "(":
            self.advance()
            node = self.expr()
            if self.tok.kind != ")":
                raise self.fail({"')'", "'+'", "'-'", "'*'", "'^'"})
            self.advance()
            return node
        if t.kind in ("int", "-"):
            return self.rational()
        raise self.fail(_BASE_START)

    def rational(self) -> Num:
        sign = 1
        if self.tok.kind == "-":
            self.advance()
            sign = -1
        if self.tok.kind != "int":
            raise self.fail({"integer"})
        num = int(self.advance().text)
        den = 1
        if self.tok.kind == "/":
            slash = self.advance()
            if self.tok.kind != "int":
                raise self.fail({"integer"})
            den = int(self.advance().text)
            if den == 0:
                raise DivideByZero("zero denominator in rational literal", slash.offset)
        return Num(Fraction(sign * num, den))


def parse_expr(text: str) -> Node:
    return _Parser(text).parse()


def parse_poly(text: str) -> Poly:
    """Parse ``text`` and expand it to a :class:`Poly`."""
    return lower(parse_expr(text))
