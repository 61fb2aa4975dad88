"""Text form of Iwahori-Weyl elements.

Grammar (whitespace is ignored)::

    expr := term ('*' term)*
    term := atom ('^' ['-'] digits)?
    atom := 't[' int (',' int)* ']' | 's' digits ('_' digits)? | '1' | '(' expr ')'

``s0`` is the affine simple reflection; with several simple factors they
are ``s0_1, s0_2, ...``.
"""

from __future__ import annotations

from . import affine as aw
from .affine import AffineWeylElt
from .rootdatum import RootDatum


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__("%s at column %d" % (msg, pos))
        self.pos = pos


class DimensionMismatch(ValueError):
    """A translation vector of the wrong length or outside the lattice."""


class _Parser:
    def __init__(self, text: str, G: RootDatum):
        self.text = text
        self.i = 0
        self.G = G
        self.gens = dict(aw.affine_simple_reflections(G))
        if "s0_1" in self.gens:
            pass
        elif "s0" in self.gens:
            self.gens["s0_1"] = self.gens["s0"]

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError("expected %r" % ch, self.i)
        self.i += 1

    def integer(self) -> int:
        self.skip()
        start = self.i
        if self.peek() in "+-":
            self.i += 1
        self.skip()
        d0 = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == d0:
            raise ParseError("expected integer", self.i)
        return int(self.text[start:self.i].replace(" ", ""))

    def expr(self) -> AffineWeylElt:
        out = self.term()
        while self.peek() == "*":
            self.i += 1
            out = aw.mul(self.G, out, self.term())
        return out

    def term(self) -> AffineWeylElt:
        a = self.atom()
        if self.peek() == "^":
            self.i += 1
            n = self.integer()
            base = a if n >= 0 else aw.inv(self.G, a)
            a = aw.identity(self.G)
            for _ in range(abs(n)):
                a = aw.mul(self.G, a, base)
        return a

    def atom(self) -> AffineWeylElt:
        c = self.peek()
        G = self.G
        if c == "(":
            self.i += 1
            e = self.expr()
            self.expect(")")
            return e
        if c == "1":
            self.i += 1
            return aw.identity(G)
        if c == "t":
            start = self.i
            self.i += 1
            self.expect("[")
            vals = [self.integer()]
            while self.peek() == ",":
                self.i += 1
                vals.append(self.integer())
            self.expect("]")
            if len(vals) != G.d:
                raise DimensionMismatch("translation has %d entries, expected %d (column %d)"
                                        % (len(vals), G.d, start))
            if not G.in_lattice(vals):
                raise DimensionMismatch("translation %s is not in the cocharacter lattice" % vals)
            return aw.translation(G, vals)
        if c == "s":
            start = self.i
            self.i += 1
            d0 = self.i
            while self.i < len(self.text) and self.text[self.i].isdigit():
                self.i += 1
            if self.i == d0:
                raise ParseError("expected reflection index", self.i)
            name = self.text[start:self.i]
            if self.i < len(self.text) and self.text[self.i] == "_":
                self.i += 1
                d1 = self.i
                while self.i < len(self.text) and self.text[self.i].isdigit():
                    self.i += 1
                name = self.text[start:self.i]
                if self.i == d1:
                    raise ParseError("expected component index", self.i)
            if name not in self.gens:
                raise ParseError("unknown reflection %r" % name, start)
            return self.gens[name]
        if not c:
            raise ParseError("unexpected end of input", self.i)
        raise ParseError("unexpected character %r" % c, self.i)


def parse_element(text: str, G: RootDatum) -> AffineWeylElt:
    p = _Parser(text, G)
    out = p.expr()
    if p.peek():
        raise ParseError("trailing input", p.i)
    return out


def format_element(G: RootDatum, x: AffineWeylElt) -> str:
    top = G.top
    head = "t[%s]" % ",".join(str(c) for c in x.lam)
    word = top.weyl(x.v).word
    return "*".join([head] + ["s%d" % (i + 1) for i in word])
