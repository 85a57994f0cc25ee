"""Parser for representation expressions.

Grammar (whitespace-insensitive)::

    expr   := term ('+' term)*
    term   := 'std(' INT ')'
            | 'dual(' expr ')'
            | 'sym' INT '(' expr ')'
            | 'ext' INT '(' expr ')'
            | 'tensor(' expr ',' expr ')'
            | '{' weight (',' weight)* '}'
    weight := '(' INT (',' INT)* ')' [':' INT]

Errors carry the byte offset of the failure; rank mismatches name both
ranks.  The AST evaluates to a weight-multiset Representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from . import reps
from .errors import RepParseError
from .reps import Representation


class RepExpr:
    """Base class of the expression AST."""

    def to_representation(self) -> Representation:
        raise NotImplementedError

    def rank(self) -> int:
        raise NotImplementedError


@dataclass(frozen=True)
class Std(RepExpr):
    n: int

    def to_representation(self):
        return reps.std_rep(self.n)

    def rank(self):
        return self.n


@dataclass(frozen=True)
class Weights(RepExpr):
    items: Tuple[Tuple[Tuple[int, ...], int], ...]

    def to_representation(self):
        return Representation(len(self.items[0][0]), list(self.items))

    def rank(self):
        return len(self.items[0][0])


@dataclass(frozen=True)
class Dual(RepExpr):
    inner: RepExpr

    def to_representation(self):
        return reps.dual(self.inner.to_representation())

    def rank(self):
        return self.inner.rank()


@dataclass(frozen=True)
class Sum(RepExpr):
    left: RepExpr
    right: RepExpr

    def to_representation(self):
        return reps.direct_sum(self.left.to_representation(),
                               self.right.to_representation())

    def rank(self):
        return self.left.rank()


@dataclass(frozen=True)
class Tensor(RepExpr):
    left: RepExpr
    right: RepExpr

    def to_representation(self):
        return reps.tensor(self.left.to_representation(),
                           self.right.to_representation())

    def rank(self):
        return self.left.rank()


@dataclass(frozen=True)
class Sym(RepExpr):
    k: int
    inner: RepExpr

    def to_representation(self):
        return reps.sym_power(self.inner.to_representation(), self.k)

    def rank(self):
        return self.inner.rank()


@dataclass(frozen=True)
class Ext(RepExpr):
    k: int
    inner: RepExpr

    def to_representation(self):
        return reps.ext_power(self.inner.to_representation(), self.k)

    def rank(self):
        return self.inner.rank()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise RepParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def integer(self):
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or not self.text[start:self.pos].lstrip("+-"):
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def word(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos]

    def parse(self) -> RepExpr:
        node = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error(f"unexpected trailing input {self.text[self.pos:]!r}")
        return node

    def expr(self) -> RepExpr:
        node = self.term()
        while self.peek() == "+":
            self.expect("+")
            right = self.term()
            self._check_ranks(node, right, "+")
            node = Sum(node, right)
        return node

    def term(self) -> RepExpr:
        ch = self.peek()
        if ch == "{":
            return self.weight_set()
        mark = self.pos
        name = self.word()
        if name == "std":
            self.expect("(")
            n = self.integer()
            self.expect(")")
            if n < 1:
                self.pos = mark
                self.error(f"std rank must be >= 1, got {n}")
            return Std(n)
        if name == "dual":
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return Dual(inner)
        if name == "tensor":
            self.expect("(")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            self._check_ranks(left, right, "tensor")
            return Tensor(left, right)
        if name in ("sym", "ext"):
            k = self.integer()
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return (Sym if name == "sym" else Ext)(k, inner)
        self.pos = mark
        self.error("expected std(, dual(, symK(, extK(, tensor( or '{'")

    def _check_ranks(self, left, right, what):
        if left.rank() != right.rank():
            self.error(f"rank mismatch in {what}: "
                       f"{left.rank()} vs {right.rank()}")

    def weight_set(self) -> Weights:
        self.expect("{")
        items: Dict[Tuple[int, ...], int] = {}
        rank = None
        while True:
            weight, mult = self.weight()
            if rank is None:
                rank = len(weight)
            elif len(weight) != rank:
                self.error(f"rank mismatch in weight set: "
                           f"{len(weight)} vs {rank}")
            items[weight] = items.get(weight, 0) + mult
            if self.peek() == ",":
                self.expect(",")
                continue
            break
        self.expect("}")
        return Weights(tuple(sorted(items.items())))

    def weight(self):
        self.expect("(")
        coords = [self.integer()]
        while self.peek() == ",":
            self.expect(",")
            coords.append(self.integer())
        self.expect(")")
        mult = 1
        if self.peek() == ":":
            self.expect(":")
            mult = self.integer()
            if mult < 1:
                self.error(f"multiplicity must be >= 1, got {mult}")
        return tuple(coords), mult


def parse_rep(text: str) -> RepExpr:
    """Parse a representation expression; raises RepParseError with the
    byte offset on malformed input."""
    return _Parser(text).parse()
