"""Parser for twist-element expressions.

Grammar::

    expr    := angle '@' expr | product
    product := postfix ('*' postfix)*
    postfix := atom ('^' '-' '1')*
    atom    := literal | '(' expr ')'
    literal := '[' word '|' angle ';' rational '|' angle ']'
    angle   := rational [('+' | '-') [INT '*'] 'theta'] | [INT '*'] 'theta'
    rational:= ['-'] INT ['/' INT]

Words use ``a A b B`` (capitals are inverses), with ``e`` for the identity.
Angles are the exact ``q + m*theta`` values that :func:`render_angle` prints,
so rendering an element and parsing it back gives the same element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import ExpressionSyntaxError
from ..exact_arith import Angle, BasePoint
from ..freegroup import LETTERS, EPSILON, Word, reduce
from ..twistcore.elements import ClassRep

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<int>\d+)|(?P<ident>[A-Za-zε]+)|(?P<op>[-+*/^@()\[\]|;])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "op" or "eof"
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExpressionSyntaxError(line, pos - line_start + 1, ["a token"], text[pos])
        kind = m.lastgroup
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


@dataclass(frozen=True)
class Literal:
    cls: ClassRep
    line: int
    col: int


@dataclass(frozen=True)
class Product:
    left: "Expression"
    right: "Expression"
    line: int
    col: int


@dataclass(frozen=True)
class Inverse:
    operand: "Expression"
    line: int
    col: int


@dataclass(frozen=True)
class Action:
    angle: Angle
    operand: "Expression"
    line: int
    col: int


Expression = Union[Literal, Product, Inverse, Action]


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected: list[str]):
        t = self.tok
        raise ExpressionSyntaxError(t.line, t.col, expected, t.text or "end of input")

    def accept(self, text: str) -> bool:
        if self.tok.kind in ("op", "ident") and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        t = self.tok
        if not self.accept(text):
            self.fail([repr(text)])
        return t

    def integer(self) -> int:
        t = self.tok
        if t.kind != "int":
            self.fail(["an integer"])
        self.i += 1
        return int(t.text)

    # expr := angle '@' expr | product
    def expr(self) -> Expression:
        t = self.tok
        if t.kind == "int" or (t.kind == "op" and t.text == "-") or (t.kind == "ident" and t.text == "theta"):
            z = self.angle()
            self.expect("@")
            return Action(z, self.expr(), t.line, t.col)
        if t.kind == "op" and t.text in "[(":
            return self.product()
        self.fail(["'['", "'('", "an angle"])

    def product(self) -> Expression:
        node = self.postfix()
        while self.tok.kind == "op" and self.tok.text == "*":
            t = self.tok
            self.i += 1
            node = Product(node, self.postfix(), t.line, t.col)
        return node

    def postfix(self) -> Expression:
        node = self.atom()
        while self.tok.kind == "op" and self.tok.text == "^":
            t = self.tok
            self.i += 1
            self.expect("-")
            if self.tok.kind != "int" or self.tok.text != "1":
                self.fail(["'1'"])
            self.i += 1
            node = Inverse(node, t.line, t.col)
        return node

    def atom(self) -> Expression:
        t = self.tok
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        if t.kind == "op" and t.text == "[":
            return self.literal()
        self.fail(["'['", "'('"])

    def literal(self) -> Literal:
        start = self.expect("[")
        word = self.word()
        self.expect("|")
        x = self.angle()
        self.expect(";")
        y = self.rational()
        self.expect("|")
        phase = self.angle()
        self.expect("]")
        return Literal(ClassRep(word, BasePoint(x, y), phase), start.line, start.col)

    def word(self) -> Word:
        t = self.tok
        if t.kind != "ident":
            self.fail(["a word"])
        if t.text in ("e", "ε"):
            self.i += 1
            return EPSILON
        for k, ch in enumerate(t.text):
            if ch not in LETTERS:
                raise ExpressionSyntaxError(t.line, t.col + k, ["a", "A", "b", "B", "e"], ch)
        self.i += 1
        return reduce(t.text)

    def rational(self) -> Fraction:
        negative = self.accept("-")
        num = self.integer()
        den = 1
        if self.accept("/"):
            t = self.tok
            den = self.integer()
            if den == 0:
                raise ExpressionSyntaxError(t.line, t.col, ["a nonzero denominator"], t.text)
        value = Fraction(num, den)
        return -value if negative else value

    def theta_multiple(self) -> int:
        """``theta`` or ``INT*theta``."""
        if self.accept("theta"):
            return 1
        k = self.integer()
        self.expect("*")
        self.expect("theta")
        return k

    def angle(self) -> Angle:
        t = self.tok
        if t.kind == "ident" and t.text == "theta":
            return Angle(0, self.theta_multiple())
        # INT '*' theta without a rational part
        if t.kind == "int" and self.tokens[self.i + 1].text == "*":
            return Angle(0, self.theta_multiple())
        q = self.rational()
        if self.tok.kind == "op" and self.tok.text in "+-":
            sign = 1 if self.tok.text == "+" else -1
            self.i += 1
            return Angle(q, sign * self.theta_multiple())
        return Angle(q)


def parse(text: str) -> Expression:
    p = _Parser(text)
    node = p.expr()
    if p.tok.kind != "eof":
        p.fail(["'*'", "'^'", "end of input"])
    return node


def parse_angle(text: str) -> Angle:
    p = _Parser(text)
    z = p.angle()
    if p.tok.kind != "eof":
        p.fail(["end of input"])
    return z


def parse_element(text: str) -> ClassRep:
    """A single literal ``[w | x ; y | phase]``."""
    p = _Parser(text)
    lit = p.literal()
    if p.tok.kind != "eof":
        p.fail(["end of input"])
    return lit.cls
