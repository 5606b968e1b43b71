"""Group expressions: a small recursive-descent parser and an evaluator.

Grammar::

    expr := "C" int | "S" int | "A" int | "D" int
          | "sdc(" int "," int "," int ")"
          | "x(" expr {"," expr} ")"
          | "wr(" prime "," int "," expr ")"
          | "geq(" int ")"
          | "tower(" int "," prime "," int ")"
          | "perm[" cycles {";" cycles} "]"

``D n`` is the dihedral group of order ``2n``. Spaces are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy import isprime

from .errors import ParseError
from .perm import Permutation

_FUNCS = ("sdc", "x", "wr", "geq", "tower", "perm")
_LETTERS = "CSAD"


@dataclass(frozen=True)
class Node:
    kind: str
    args: tuple
    text: str


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, expected=()):
        raise ParseError(message, self.pos, expected)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"unexpected {self.peek()!r}" if self.peek() else "unexpected end of input", [repr(ch)])
        self.pos += 1

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer", ["integer"])
        return int(self.text[start:self.pos])

    def prime(self):
        start = self.pos
        n = self.integer()
        if not isprime(n):
            raise ParseError(f"{n} is not prime", start, ["prime"])
        return n

    def word(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos]

    def expr(self):
        self.skip()
        start = self.pos
        w = self.word()
        if w in _LETTERS and len(w) == 1:
            n = self.integer()
            if n < 1:
                raise ParseError("size must be positive", start + 1, ["positive integer"])
            node = Node(w, (n,), "")
        elif w == "perm":
            node = self.perm_body()
        elif w in _FUNCS:
            node = self.call(w)
        else:
            self.pos = start
            self.error(f"unknown group {w!r}" if w else "expected a group expression",
                       list(_LETTERS) + [f + "(" for f in _FUNCS if f != "perm"] + ["perm["])
        return Node(node.kind, node.args, self.text[start:self.pos].strip())

    def call(self, name):
        self.expect("(")
        if name == "x":
            args = [self.expr()]
            while self.peek() == ",":
                self.pos += 1
                args.append(self.expr())
        elif name == "sdc":
            args = self.ints(3)
        elif name == "geq":
            args = [self.integer()]
        elif name == "wr":
            q = self.prime()
            self.expect(",")
            m = self.integer()
            self.expect(",")
            args = [q, m, self.expr()]
        else:
            d = self.integer()
            self.expect(",")
            p = self.prime()
            self.expect(",")
            args = [d, p, self.integer()]
        self.expect(")")
        return Node(name, tuple(args), "")

    def ints(self, k):
        out = [self.integer()]
        for _ in range(k - 1):
            self.expect(",")
            out.append(self.integer())
        return out

    def perm_body(self):
        self.expect("[")
        gens = []
        while True:
            self.skip()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] not in ";]":
                self.pos += 1
            chunk = self.text[start:self.pos]
            try:
                gens.append(Permutation.parse(chunk) if chunk.strip() else Permutation.identity(1))
            except Exception as exc:
                raise ParseError(f"bad permutation {chunk!r}: {exc}", start, ["cycle notation"]) from None
            if self.peek() == ";":
                self.pos += 1
                continue
            self.expect("]")
            return Node("perm", tuple(gens), "")


def parse(text):
    p = _Parser(text)
    node = p.expr()
    if p.peek():
        p.error(f"trailing input {p.text[p.pos:]!r}", ["end of input"])
    return node


def evaluate(node, order_cap=None):
    """Build the group: a PermGroup, or a StructuredGroup for ``wr``/``geq``/``tower``."""
    from . import constructions as con
    from . import group as grp

    cap = grp.DEFAULT_ORDER_CAP if order_cap is None else order_cap
    k, a = node.kind, node.args
    if k == "C":
        g = grp.cyclic(a[0])
    elif k == "S":
        g = grp.symmetric(a[0], order_cap=cap)
    elif k == "A":
        g = grp.alternating(a[0], order_cap=cap)
    elif k == "D":
        g = grp.dihedral(a[0])
    elif k == "sdc":
        g = grp.semidirect_cyclic(*a)
    elif k == "x":
        parts = [concrete(evaluate(x, cap), cap) for x in a]
        g = grp.direct_product(*parts)
    elif k == "perm":
        degree = max(p.degree for p in a)
        g = grp.group_from_generators(list(a), order_cap=cap, degree=degree)
    elif k == "wr":
        return _named(con.wreath_regular(a[0], a[1], concrete(evaluate(a[2], cap), cap)), node)
    elif k == "geq":
        return _named(con.prop_geq_group(a[0]), node)
    elif k == "tower":
        return _named(con.tower_group(*a, order_cap=cap), node)
    else:
        raise ValueError(f"unknown node {k}")
    return _named(g, node)


def _named(g, node):
    g.name = node.text
    return g


def concrete(g, order_cap=None):
    """A PermGroup for ``g``, materializing structured groups when they fit."""
    from .constructions import StructuredGroup
    from .group import DEFAULT_ORDER_CAP

    if isinstance(g, StructuredGroup):
        h = g.materialize(DEFAULT_ORDER_CAP if order_cap is None else order_cap)
        h.name = g.name
        return h
    return g


def build(text, order_cap=None):
    return evaluate(parse(text), order_cap)
