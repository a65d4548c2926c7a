"""Expression parser: text -> AST -> exact localized element.

Grammar (standard precedence, ^ binds tightest, then unary minus, then
* and / left-associatively, then + and -):

    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := "-" unary | power
    power    := atom ("^" exponent)?
    exponent := "-"? INT | "(" "-"? INT ")"
    atom     := INT | IDENT | "(" expr ")"

Exponents must be integer literals.  Division is resolved against the
declared multiplicative set: the divisor must be a unit of the localization
or divide the numerator exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import ExpressionError, ReductionError
from .fracs import FactoredFraction, FactorSet

# --- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Div:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Lit, Var, Add, Sub, Mul, Div, Neg, Pow]

# --- Tokenizer ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class _Token:
    kind: str  # "int" | "ident" | "op" | "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExpressionError(f"unexpected character {stripped[0]!r} at position {pos}")
        if m.group("int") is not None:
            tokens.append(_Token("int", m.group("int"), m.start("int")))
        elif m.group("ident") is not None:
            tokens.append(_Token("ident", m.group("ident"), m.start("ident")))
        else:
            tokens.append(_Token("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        tok = self.advance()
        if tok.kind != "op" or tok.text != op:
            raise ExpressionError(f"expected {op!r} at position {tok.pos} in {self.text!r}")

    def parse(self) -> Node:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExpressionError(f"unexpected {tok.text!r} at position {tok.pos} in {self.text!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.advance().text
            rhs = self.unary()
            node = Mul(node, rhs) if op == "*" else Div(node, rhs)
        return node

    def unary(self) -> Node:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            return Pow(base, self.exponent())
        return base

    def exponent(self) -> int:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            value = self._signed_int()
            self.expect_op(")")
            return value
        return self._signed_int()

    def _signed_int(self) -> int:
        sign = 1
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            sign = -1
        tok = self.advance()
        if tok.kind != "int":
            raise ExpressionError(
                f"exponent must be an integer literal (position {tok.pos} in {self.text!r})"
            )
        return sign * int(tok.text)

    def atom(self) -> Node:
        tok = self.advance()
        if tok.kind == "int":
            return Lit(int(tok.text))
        if tok.kind == "ident":
            return Var(tok.text)
        if tok.kind == "op" and tok.text == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ExpressionError(f"unexpected {tok.text!r} at position {tok.pos} in {self.text!r}")


def parse_ast(text: str) -> Node:
    return _Parser(text).parse()


def evaluate(node: Node, factors: FactorSet) -> FactoredFraction:
    if isinstance(node, Lit):
        return factors.constant(node.value)
    if isinstance(node, Var):
        try:
            return factors.var(node.name)
        except KeyError:
            raise ExpressionError(f"unknown variable {node.name!r}") from None
    if isinstance(node, Add):
        return evaluate(node.left, factors) + evaluate(node.right, factors)
    if isinstance(node, Sub):
        return evaluate(node.left, factors) - evaluate(node.right, factors)
    if isinstance(node, Mul):
        return evaluate(node.left, factors) * evaluate(node.right, factors)
    if isinstance(node, Div):
        lhs = evaluate(node.left, factors)
        rhs = evaluate(node.right, factors)
        if rhs.is_zero:
            raise ExpressionError("division by zero")
        try:
            return lhs / rhs
        except ReductionError as exc:
            raise ExpressionError(str(exc)) from None
    if isinstance(node, Neg):
        return -evaluate(node.operand, factors)
    if isinstance(node, Pow):
        base = evaluate(node.base, factors)
        if node.exponent < 0 and base.is_zero:
            raise ExpressionError("negative power of zero")
        try:
            return base ** node.exponent
        except ReductionError as exc:
            raise ExpressionError(str(exc)) from None
    raise TypeError(f"unknown AST node {node!r}")


def parse_expression(text: str, factors: FactorSet) -> FactoredFraction:
    """Parse and evaluate an expression over a localized ring."""
    return evaluate(parse_ast(text), factors)
