"""Parsing of element and polynomial literals.

One small expression grammar serves both: sums of products of powers of
atoms, with integer literals, parentheses, and implicit multiplication
(``2u``, ``(u+1)T``).  Atoms are the field's named generators (``i``, ``u``,
``x``) plus ``T`` when parsing polynomials; integers are coerced into the
field immediately, so ``3/4`` means division in the field.  Evaluation in
the skew ring keeps the written order, so ``T*u`` is sigma(u)*T as it should
be.

Serialization is the canonical, descending-power form produced by
SkewPolynomial.__str__ / FieldElement.__str__; parse-then-serialize is
idempotent on canonical strings.
"""

from __future__ import annotations

from .errors import FieldLiteralError, ParseError
from .fields import FieldElement
from .poly import SkewPolynomial

_OPS = set("+-*/^(),")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            tokens.append(("int", int(text[start:pos]), start))
            continue
        if ch.isalpha():
            tokens.append(("name", ch, pos))
            pos += 1
            continue
        if ch in _OPS:
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", position=pos)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, env, coerce_int):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.env = env
        self.coerce_int = coerce_int

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", position=tok[2])
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"trailing input {tok[1]!r}", position=tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while True:
            kind = self.peek()[0]
            if kind in ("*", "/"):
                op, _, at = self.take()
                rhs = self.factor()
                if op == "*":
                    value = value * rhs
                else:
                    try:
                        value = value / rhs
                    except TypeError:
                        raise ParseError("cannot divide here", position=at) from None
            elif kind in ("int", "name", "("):
                value = value * self.factor()  # implicit multiplication
            else:
                return value

    def factor(self):
        tok = self.peek()
        if tok[0] in ("+", "-"):
            self.take()
            value = self.factor()
            return value if tok[0] == "+" else -value
        value = self.primary()
        while self.peek()[0] == "^":
            _, _, at = self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            e = sign * self.take("int")[1]
            try:
                result = value**e
            except TypeError:
                result = NotImplemented
            if result is NotImplemented:
                raise ParseError("bad exponent here", position=at)
            value = result
        return value

    def primary(self):
        tok = self.take()
        kind, payload, at = tok
        if kind == "int":
            return self.coerce_int(payload)
        if kind == "name":
            if payload not in self.env:
                raise FieldLiteralError(f"unknown symbol {payload!r}", position=at)
            return self.env[payload]
        if kind == "(":
            value = self.expr()
            self.take(")")
            return value
        raise ParseError(f"unexpected {payload!r}", position=at)


def parse_element(text, field):
    """Parse an element literal of the given field."""
    env = dict(field.atoms())
    value = _Parser(text, env, field.element).parse()
    if isinstance(value, SkewPolynomial):
        raise ParseError("polynomial found where a field element was expected")
    if not isinstance(value, FieldElement):
        value = field.element(value)
    return value


def parse_polynomial(text, field):
    """Parse a skew polynomial in T over the given field."""
    env = dict(field.atoms())
    env["T"] = SkewPolynomial.t(field)
    value = _Parser(text, env, field.element).parse()
    if isinstance(value, SkewPolynomial):
        return value
    return SkewPolynomial(field, (value,))


def parse_element_list(text, field):
    """Comma-separated element literals (no shipped literal contains a comma)."""
    items = [part for part in text.split(",") if part.strip()]
    return [parse_element(part, field) for part in items]
