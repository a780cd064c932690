"""The skew polynomial ring K[T;sigma].

Polynomials are stored in left-coefficient form a_0 + a_1*T + ... + a_n*T^n
as a stripped ascending tuple of field elements; the zero polynomial is the
empty tuple and its degree is the float -inf sentinel (compares below every
integer, which keeps the division loops branch-free).

Multiplication twists scalars past T: T*a = sigma(a)*T, so
(a*T^m)(b*T^n) = a*sigma^m(b)*T^(m+n).  Right division works for any sigma;
left division and the right-coefficient view need sigma to be an
automorphism, which every shipped field provides.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    BothZeroError,
    DivisionByZeroPolynomialError,
    FieldMismatchError,
    InvalidAlpha0Error,
)
from .fields import FieldElement, sigma_norm

NEG_INF = float("-inf")


class SkewPolynomial:
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
        raise AttributeError("SkewPolynomial is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,))

    @classmethod
    def t(cls, field, power=1):
        return cls.monomial(field, field.one, power)

    @classmethod
    def monomial(cls, field, coeff, power):
        coeff = coeff if isinstance(coeff, FieldElement) else field.element(coeff)
        return cls(field, (field.zero,) * power + (coeff,))

    @classmethod
    def t_minus(cls, a):
        """T - a, the right-root atom."""
        return cls(a.field, (-a, a.field.one))

    # -- structure ----------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    @property
    def leading_coefficient(self):
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def coefficient(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def constant_term(self):
        return self.coefficient(0)

    def monic(self):
        """Left-scale by the inverse leading coefficient."""
        if self.is_zero() or self.is_monic():
            return self
        return self.leading_coefficient.inverse() * self

    def __eq__(self, other):
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.descriptor(), self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations ----------------------------------------------------

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatchError("polynomials over different fields")

    def __add__(self, other):
        if isinstance(other, (FieldElement, int, Fraction)):
            other = SkewPolynomial(self.field, (other,))
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPolynomial(
            self.field,
            (self.coefficient(i) + other.coefficient(i) for i in range(n)),
        )

    __radd__ = __add__

    def __neg__(self):
        return SkewPolynomial(self.field, (-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (FieldElement, int, Fraction)):
            other = SkewPolynomial(self.field, (other,))
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int, Fraction)):
            # right scalar: a_i picks up sigma^i
            c = other if isinstance(other, FieldElement) else self.field.element(other)
            return SkewPolynomial(
                self.field, (a * c.sigma(i) for i, a in enumerate(self.coeffs))
            )
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        self._check(other)
        if self.is_zero() or other.is_zero():
            return SkewPolynomial.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        twisted = other.coeffs
        for i, a in enumerate(self.coeffs):
            if i:
                twisted = tuple(b.sigma() for b in twisted)
            if a.is_zero():
                continue
            for j, b in enumerate(twisted):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return SkewPolynomial(self.field, out)

    def __rmul__(self, other):
        # left scalar: coefficients scale directly
        if isinstance(other, (FieldElement, int, Fraction)):
            c = other if isinstance(other, FieldElement) else self.field.element(other)
            return SkewPolynomial(self.field, (c * a for a in self.coeffs))
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        acc = SkewPolynomial.one(self.field)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def times_t(self, k=1):
        """self * T^k (a plain coefficient shift)."""
        if self.is_zero():
            return self
        return SkewPolynomial(self.field, (self.field.zero,) * k + self.coeffs)

    # -- division -----------------------------------------------------------

    def right_divmod(self, divisor):
        """Q, R with self = Q*divisor + R and deg R < deg divisor."""
        self._check(divisor)
        if divisor.is_zero():
            raise DivisionByZeroPolynomialError("right division by zero")
        m = divisor.degree
        r = list(self.coeffs)
        q = [self.field.zero] * max(0, len(r) - m)
        # sigma^e of the divisor for each needed shift, built incrementally
        rows = [divisor.coeffs]
        for _ in range(len(r) - 1 - m):
            rows.append(tuple(d.sigma() for d in rows[-1]))
        while len(r) - 1 >= m:
            e = len(r) - 1 - m
            row = rows[e]
            c = r[-1] * row[-1].inverse()
            q[e] = c
            for i, d in enumerate(row):
                r[e + i] = r[e + i] - c * d
            del r[-1]
            while r and r[-1].is_zero():
                del r[-1]
        return SkewPolynomial(self.field, q), SkewPolynomial(self.field, r)

    def left_divmod(self, divisor):
        """Q, R with self = divisor*Q + R and deg R < deg divisor."""
        self._check(divisor)
        if divisor.is_zero():
            raise DivisionByZeroPolynomialError("left division by zero")
        m = divisor.degree
        r = list(self.coeffs)
        q = [self.field.zero] * max(0, len(r) - m)
        lead_inv = divisor.leading_coefficient.inverse()
        while len(r) - 1 >= m:
            e = len(r) - 1 - m
            c = (lead_inv * r[-1]).sigma(-m)
            q[e] = c
            ci = c
            for i, d in enumerate(divisor.coeffs):
                if i:
                    ci = ci.sigma()
                r[e + i] = r[e + i] - d * ci
            del r[-1]
            while r and r[-1].is_zero():
                del r[-1]
        return SkewPolynomial(self.field, q), SkewPolynomial(self.field, r)

    # -- evaluation ---------------------------------------------------------

    def eval_right(self, a):
        """Sum of a_i * N_i(a); the remainder of right division by T - a."""
        if not isinstance(a, FieldElement) or a.field != self.field:
            a = self.field.element(a)
        acc = self.field.zero
        norm = self.field.one
        for i, c in enumerate(self.coeffs):
            if i:
                norm = norm.sigma() * a
            if not c.is_zero():
                acc = acc + c * norm
        return acc

    def eval_left(self, a):
        """Sum of sigma^(-i)(a_i) * N_(-i)(a); remainder of left division by T - a."""
        if not isinstance(a, FieldElement) or a.field != self.field:
            a = self.field.element(a)
        acc = self.field.zero
        norm = self.field.one
        for i, c in enumerate(self.coeffs):
            if i:
                norm = norm.sigma(-1) * a
            if not c.is_zero():
                acc = acc + c.sigma(-i) * norm
        return acc

    # -- the right-coefficient view ----------------------------------------

    def to_right_form(self):
        """Coefficients b_i with self = b_0 + T*b_1 + ... + T^n*b_n."""
        return tuple(c.sigma(-i) for i, c in enumerate(self.coeffs))

    @classmethod
    def from_right_form(cls, field, bs):
        bs = [b if isinstance(b, FieldElement) else field.element(b) for b in bs]
        return cls(field, (b.sigma(i) for i, b in enumerate(bs)))

    # -- printing -----------------------------------------------------------

    @staticmethod
    def _compound(s):
        depth = 0
        for pos, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch in "+-" and depth == 0 and pos > 0:
                return True
        return False

    def __str__(self):
        if self.is_zero():
            return "0"
        if len(self.coeffs) == 1:
            return str(self.coeffs[0])
        one = self.field.one
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            sign = "+"
            cs = str(c)
            if cs.startswith("-") and str(-c) == cs[1:]:
                sign, c, cs = "-", -c, cs[1:]
            if k == 0:
                body = f"({cs})" if self._compound(cs) else cs
            else:
                tpart = "T" if k == 1 else f"T^{k}"
                if c == one:
                    body = tpart
                else:
                    wrapped = f"({cs})" if (self._compound(cs) or "/" in cs) else cs
                    body = f"{wrapped}*{tpart}"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


# ---------------------------------------------------------------------------
# two-sided Euclidean combinations
# ---------------------------------------------------------------------------


def gcrd(p, q):
    """Greatest common right divisor with Bezout cofactors.

    Returns (g, u, v) with g = u*p + v*q monic and
    K[T;sigma]p + K[T;sigma]q = K[T;sigma]g.
    """
    if p.is_zero() and q.is_zero():
        raise BothZeroError("gcrd(0, 0) is undefined")
    field = p.field
    r0, r1 = p, q
    u0, u1 = SkewPolynomial.one(field), SkewPolynomial.zero(field)
    v0, v1 = SkewPolynomial.zero(field), SkewPolynomial.one(field)
    while not r1.is_zero():
        quo, rem = r0.right_divmod(r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - quo * u1
        v0, v1 = v1, v0 - quo * v1
    c = r0.leading_coefficient.inverse()
    return c * r0, c * u0, c * v0


def lclm(p, q):
    """Least common left multiple, monic: the generator of K[T;s]p ∩ K[T;s]q."""
    if p.is_zero() and q.is_zero():
        raise BothZeroError("lclm(0, 0) is undefined")
    if p.is_zero() or q.is_zero():
        return SkewPolynomial.zero(p.field)
    field = p.field
    r0, r1 = p, q
    u0, u1 = SkewPolynomial.one(field), SkewPolynomial.zero(field)
    while not r1.is_zero():
        quo, rem = r0.right_divmod(r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - quo * u1
    m = u1 * p
    return m.leading_coefficient.inverse() * m


def gcld(p, q):
    """Greatest common left divisor: the mirror of gcrd, via left division.

    Returns (g, u, v) with g = p*u + q*v.
    """
    if p.is_zero() and q.is_zero():
        raise BothZeroError("gcld(0, 0) is undefined")
    field = p.field
    r0, r1 = p, q
    u0, u1 = SkewPolynomial.one(field), SkewPolynomial.zero(field)
    v0, v1 = SkewPolynomial.zero(field), SkewPolynomial.one(field)
    while not r1.is_zero():
        quo, rem = r0.left_divmod(r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - u1 * quo
        v0, v1 = v1, v0 - v1 * quo
    # monic via a right unit, so g = p*u + q*v is preserved
    c = r0.leading_coefficient.inverse().sigma(-r0.degree)
    return r0 * c, u0 * c, v0 * c


def lcrm(p, q):
    """Least common right multiple, monic: m = p*u = q*v.

    Returns (m, u, v); the cofactors are what fraction arithmetic needs to
    bring two right denominators to a common one.
    """
    if p.is_zero() and q.is_zero():
        raise BothZeroError("lcrm(0, 0) is undefined")
    if p.is_zero() or q.is_zero():
        z = SkewPolynomial.zero(p.field)
        return z, z, z
    field = p.field
    r0, r1 = p, q
    u0, u1 = SkewPolynomial.one(field), SkewPolynomial.zero(field)
    v0, v1 = SkewPolynomial.zero(field), SkewPolynomial.one(field)
    while not r1.is_zero():
        quo, rem = r0.left_divmod(r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - u1 * quo
        v0, v1 = v1, v0 - v1 * quo
    m = p * u1
    c = m.leading_coefficient.inverse().sigma(-m.degree)
    return m * c, u1 * c, (-v1) * c


# ---------------------------------------------------------------------------
# anti-automorphisms
# ---------------------------------------------------------------------------


def alpha0_catalog(field):
    """Tags of the base-field automorphisms available as alpha_0."""
    tags = ["id"]
    if not field.sigma_is_identity:
        tags.append("sigma")
    if getattr(field, "k", 1) > 1:
        tags.extend(f"frob^{j}" for j in range(1, field.k))
    return tags


def apply_alpha0(field, tag, a):
    if tag == "id":
        return a
    if tag == "sigma":
        return a.sigma()
    if tag.startswith("frob^") and field.is_finite:
        j = int(tag[5:])
        return a ** (field.p**j)
    raise InvalidAlpha0Error(f"unknown alpha0 tag {tag!r} for {field.label}")


def _alpha0_probe_set(field):
    probes = [field.one, -field.one]
    probes.extend(field.atoms().values())
    if field.is_finite and field.k > 1:
        g = field.generator
        probes.extend([g + 1, g * g])
    elif not field.is_finite:
        probes.append(field.element(Fraction(3, 2)))
    return probes


def check_alpha0(field, tag):
    """Verify sigma∘alpha0∘sigma = alpha0 on the probe set; raise if it fails."""
    for g in _alpha0_probe_set(field):
        lhs = apply_alpha0(field, tag, g.sigma()).sigma()
        if lhs != apply_alpha0(field, tag, g):
            raise InvalidAlpha0Error(
                f"alpha0={tag!r} is not compatible with sigma on {field.label}"
            )


def anti_automorphism(p, alpha0="id", a0=None):
    """The anti-automorphism with alpha(T) = a0*T extending alpha0.

    Maps sum of b_i*T^i to sum of sigma^i(alpha0(b_i))*N_i(a0)*T^i; additive,
    and reverses products: alpha(PQ) = alpha(Q)alpha(P).
    """
    field = p.field
    a0 = field.one if a0 is None else a0
    if a0.is_zero():
        raise InvalidAlpha0Error("a0 must be nonzero")
    check_alpha0(field, alpha0)
    out = []
    norm = field.one
    for i, b in enumerate(p.coeffs):
        if i:
            norm = norm.sigma() * a0
        out.append(apply_alpha0(field, alpha0, b).sigma(i) * norm)
    return SkewPolynomial(field, out)


def vanishes_on(p, elems):
    return all(p.eval_right(a).is_zero() for a in elems)


def root_conjugacy_classes_hit(p, roots):
    """Number of distinct sigma-conjugacy classes met by the given roots."""
    from .fields import are_conjugate

    reps = []
    for r in roots:
        if not any(are_conjugate(r, s) for s in reps):
            reps.append(r)
    return len(reps)
