"""Ordinary (commutative) polynomials with coefficients in a sigma-field.

Dense ascending representation, mirroring SkewPolynomial but with the usual
commutative product.  Used for the frobenius exponent reduction, where skew
evaluation collapses to evaluating an ordinary polynomial.
"""

from __future__ import annotations

from .errors import FieldMismatchError
from .fields import FieldElement


class OrdinaryPolynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise FieldMismatchError("coefficient from a different field")
                cs.append(c)
            else:
                cs.append(field.element(c))
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("OrdinaryPolynomial is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __eq__(self, other):
        if not isinstance(other, OrdinaryPolynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.descriptor(), self.coeffs))

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return OrdinaryPolynomial(
            self.field, (self.coefficient(i) + other.coefficient(i) for i in range(n))
        )

    def __neg__(self):
        return OrdinaryPolynomial(self.field, (-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return OrdinaryPolynomial(self.field, ())
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return OrdinaryPolynomial(self.field, out)

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        m = other.degree
        inv = other.coeffs[-1].inverse()
        r = list(self.coeffs)
        q = [self.field.zero] * max(0, len(r) - m)
        while len(r) - 1 >= m:
            c = r[-1] * inv
            e = len(r) - 1 - m
            q[e] = c
            for i, d in enumerate(other.coeffs):
                r[e + i] = r[e + i] - c * d
            del r[-1]
            while r and r[-1].is_zero():
                del r[-1]
        return OrdinaryPolynomial(self.field, q), OrdinaryPolynomial(self.field, r)

    def derivative(self):
        return OrdinaryPolynomial(
            self.field, (i * c for i, c in enumerate(self.coeffs) if i)
        )

    def eval(self, a):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def monic(self):
        if self.is_zero() or self.coeffs[-1] == self.field.one:
            return self
        inv = self.coeffs[-1].inverse()
        return OrdinaryPolynomial(self.field, (inv * c for c in self.coeffs))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            if k == 0:
                parts.append(str(c))
            else:
                xp = "x" if k == 1 else f"x^{k}"
                parts.append(xp if c == self.field.one else f"({c})*{xp}")
        return " + ".join(parts)

    __repr__ = __str__


def poly_gcd(f, g):
    """Monic gcd by the Euclidean algorithm."""
    while not g.is_zero():
        f, g = g, f.divmod(g)[1]
    return f.monic()
