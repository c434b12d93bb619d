"""Recursive-descent parser for ring and field element expressions.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := INT | NAME | "(" expr ")"

Names resolve to the presentation's generators, or to the coefficient
field's generator (``u`` for F_2(u); ``w`` or ``u`` for GF(2^n)). Division
and negative exponents are only allowed on constants.
"""

import re

from stablyfree.errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, ring, text):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            _, op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                value = value * self._const_inverse(rhs, pos)
        return value

    def unary(self):
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            _, _, pos = self.take()
            negative = False
            if self.peek()[1] == "-":
                self.take()
                negative = True
            tok = self.take()
            if tok[0] != "int":
                raise ParseError("exponent must be an integer", tok[2])
            e = int(tok[1])
            if negative:
                base = self._const_inverse(base, pos)
            base = base ** e
        return base

    def atom(self):
        kind, value, pos = self.take()
        ring = self.ring
        if kind == "int":
            return ring.const(int(value))
        if kind == "name":
            if value in ring.vars:
                return ring.gen(value)
            if value in ring.field.gen_names:
                return ring.const(ring.field.gen)
            raise ParseError(f"unknown name {value!r} in {ring}", pos)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos)

    def _const_inverse(self, elem, pos):
        if not elem.is_constant():
            raise ParseError("only constants can be inverted", pos)
        c = elem.constant_term()
        if c.is_zero():
            raise ParseError("division by zero", pos)
        return self.ring.const(c.inverse())


def parse_element(ring, text):
    """Parse ``text`` into a normal-form element of ``ring``."""
    return _Parser(ring, text).parse()


def parse_field_element(field, text):
    from stablyfree.algebra.rings import Presentation

    scalar_ring = Presentation("K", (), field)
    return parse_element(scalar_ring, text).constant_term()
