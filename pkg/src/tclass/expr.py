"""A small calculator language for ideal expressions.

    expr  := sum
    sum   := prod {"+" prod}
    prod  := atom {"*" atom}
    atom  := ident | literal | "(" expr ":" expr ")" | "(" expr ")"
           | fn "(" expr ")" | scalar ["*" atom]
    fn    := "v" | "t" | "inv" | "endo"
    scalar:= integer | "<" backend scalar text ">"

Backend ideal literals are taken verbatim and handed to the domain parser:
``(a, b+cw)/q`` (a parenthesised group with a top-level comma), ``{...}``,
``[...]``, ``P(...)`` and ``B(...)``.  A bare scalar denotes the principal
ideal it generates.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import core
from .errors import IdealError

FUNCTIONS = ("v", "t", "inv", "endo")
_CLOSE = {"(": ")", "[": "]", "{": "}", "<": ">"}


class ExprSyntaxError(SyntaxError):
    def __init__(self, text, pos, expected):
        self.text, self.pos, self.expected = text, pos, expected
        got = repr(text[pos]) if pos < len(text) else "end of input"
        super().__init__(f"at position {pos}: expected {expected}, got {got}")


class UnboundIdent(IdealError, NameError):
    pass


@dataclass(frozen=True)
class Ident:
    name: str


@dataclass(frozen=True)
class ScalarLit:
    text: str


@dataclass(frozen=True)
class Literal:
    text: str


@dataclass(frozen=True)
class Sum:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Prod:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Colon:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class V:
    arg: "Node"


@dataclass(frozen=True)
class T:
    arg: "Node"


@dataclass(frozen=True)
class Inv:
    arg: "Node"


@dataclass(frozen=True)
class Endo:
    arg: "Node"


@dataclass(frozen=True)
class Scale:
    scalar: ScalarLit
    arg: "Node"


Node = Union[Ident, ScalarLit, Literal, Sum, Prod, Colon, V, T, Inv, Endo, Scale]
_FN_NODES = {"v": V, "t": T, "inv": Inv, "endo": Endo}
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"-?\d+")


class _Parser:
    def __init__(self, text: str):
        self.s = text
        self.i = 0

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.ws()
        return self.s[self.i] if self.i < len(self.s) else ""

    def expect(self, ch):
        if self.peek() != ch:
            raise ExprSyntaxError(self.s, self.i, repr(ch))
        self.i += 1

    def matching(self, start) -> int:
        """Index just past the bracket that closes the one at ``start``."""
        depth = 0
        for j in range(start, len(self.s)):
            c = self.s[j]
            if c in "([{":
                depth += 1
            elif c in ")]}":
                depth -= 1
                if depth == 0:
                    return j + 1
        raise ExprSyntaxError(self.s, len(self.s), "closing bracket")

    def top_level_comma(self, start, end) -> bool:
        depth = 0
        for c in self.s[start + 1:end - 1]:
            if c in "([{":
                depth += 1
            elif c in ")]}":
                depth -= 1
            elif c == "," and depth == 0:
                return True
        return False

    def parse(self) -> Node:
        node = self.sum()
        if self.peek():
            raise ExprSyntaxError(self.s, self.i, "'+', '*' or end of input")
        return node

    def sum(self):
        node = self.prod()
        while self.peek() == "+":
            self.i += 1
            node = Sum(node, self.prod())
        return node

    def prod(self):
        node = self.atom()
        while self.peek() == "*":
            self.i += 1
            node = Prod(node, self.atom())
        return node

    def scalar_tail(self, lit):
        if self.peek() == "*":
            self.i += 1
            return Scale(lit, self.atom())
        return lit

    def atom(self) -> Node:
        c = self.peek()
        start = self.i
        if not c:
            raise ExprSyntaxError(self.s, self.i, "an ideal expression")
        if c == "<":
            end = self.s.find(">", start)
            if end < 0:
                raise ExprSyntaxError(self.s, len(self.s), "'>'")
            self.i = end + 1
            return self.scalar_tail(ScalarLit(self.s[start + 1:end].strip()))
        m = _INT.match(self.s, start)
        if m:
            self.i = m.end()
            return self.scalar_tail(ScalarLit(m.group()))
        if c in "[{":
            self.i = self.matching(start)
            return Literal(self.s[start:self.i])
        if c == "(":
            end = self.matching(start)
            if self.top_level_comma(start, end):
                m = re.compile(r"\s*/\s*\d+").match(self.s, end)
                self.i = m.end() if m else end
                return Literal(self.s[start:self.i])
            self.i += 1
            left = self.sum()
            if self.peek() == ":":
                self.i += 1
                right = self.sum()
                self.expect(")")
                return Colon(left, right)
            self.expect(")")
            return left
        m = _IDENT.match(self.s, start)
        if not m:
            raise ExprSyntaxError(self.s, start, "identifier, literal, scalar or '('")
        name = m.group()
        self.i = m.end()
        if name in ("P", "B") and self.peek() == "(":
            self.i = self.matching(self.i)
            return Literal(self.s[start:self.i])
        if name in _FN_NODES and self.peek() == "(":
            self.i += 1
            arg = self.sum()
            self.expect(")")
            return _FN_NODES[name](arg)
        return Ident(name)


def parse(text: str) -> Node:
    return _Parser(text).parse()


def evaluate(node: Node, domain, env: dict):
    def ev(n):
        if isinstance(n, Ident):
            if n.name not in env:
                raise UnboundIdent(f"unbound identifier {n.name!r}")
            return env[n.name]
        if isinstance(n, Literal):
            return domain.parse_ideal(n.text)
        if isinstance(n, ScalarLit):
            return core.scale(domain.parse_scalar(n.text), domain.one())
        if isinstance(n, Scale):
            return core.scale(domain.parse_scalar(n.scalar.text), ev(n.arg))
        if isinstance(n, Sum):
            return core.add(ev(n.left), ev(n.right))
        if isinstance(n, Prod):
            return core.mul(ev(n.left), ev(n.right))
        if isinstance(n, Colon):
            return core.colon(ev(n.left), ev(n.right))
        if isinstance(n, (V, T)):
            return core.v_closure(ev(n.arg)) if isinstance(n, V) else core.t_closure(ev(n.arg))
        if isinstance(n, Inv):
            return core.inverse(ev(n.arg))
        if isinstance(n, Endo):
            return core.endo_ring(ev(n.arg)).ideal
        raise TypeError(f"unknown node {n!r}")

    return ev(node)


def default_env(domain) -> dict:
    return dict(domain.named_ideals())


def calc(text: str, domain, env=None):
    """Parse and evaluate in one step; ``env`` extends the domain's named ideals."""
    full = default_env(domain)
    full.update(env or {})
    return evaluate(parse(text), domain, full)
