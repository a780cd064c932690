"""Concrete sigma-fields and their exact element arithmetic.

A sigma-field is a commutative field K together with an injective
endomorphism sigma.  Every field shipped here is inversive (sigma is an
automorphism), which is what the two-sided division theory needs.

Supported fields and payload representations:

* ``Rationals``            -- Fraction; sigma = identity.
* ``GaussianRationals``    -- (Fraction, Fraction) for a+bi; sigma = conjugation.
* ``RationalFunctionField``-- reduced pair of Fraction-coefficient polynomial
                              tuples num/den in one indeterminate x, denominator
                              monic; sigma substitutes x -> 1/x.
* ``FiniteField(p, k)``    -- residue polynomials mod an explicit irreducible
                              modulus, stored as stripped ascending int tuples;
                              sigma(a) = a^(p^n) for a chosen frobenius power n.
                              k = 1 gives the prime field (sigma = identity).

Payloads are immutable and canonical: equal values have equal payloads, so
``==`` and ``hash`` are structural.  All operations are pure.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _math_gcd

from .errors import (
    FieldLiteralError,
    FieldMismatchError,
    InfiniteFieldError,
    UndecidableConjugacyError,
    ZeroConjugatorError,
)

# ---------------------------------------------------------------------------
# univariate polynomials with Fraction coefficients (payload plumbing for Q(x))
# ---------------------------------------------------------------------------
# Representation: tuple of Fractions, ascending powers, no trailing zeros.
# () is the zero polynomial.


def _qp_strip(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _qp_add(a, b):
    n = max(len(a), len(b))
    return _qp_strip(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _qp_neg(a):
    return tuple(-c for c in a)


def _qp_mul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        return b if a[0] == 1 else tuple(a[0] * c for c in b)
    if len(b) == 1:
        return a if b[0] == 1 else tuple(b[0] * c for c in a)
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _qp_strip(out)


def _qp_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = list(a)
    inv_lead = 1 / b[-1]
    while len(r) >= len(b):
        c = r[-1] * inv_lead
        if c:
            k = len(r) - len(b)
            q[k] = c
            for j, bj in enumerate(b):
                r[k + j] -= c * bj
        del r[-1]
        while r and r[-1] == 0:
            del r[-1]
    return _qp_strip(q), _qp_strip(r)


def _qp_gcd(a, b):
    """Monic gcd via a primitive pseudo-remainder sequence over Z.

    Clearing denominators and stripping integer content each step keeps the
    coefficients small; plain Fraction Euclid squares them every division.
    """
    if not a or not b:
        src = a or b
        return tuple(c / src[-1] for c in src) if src else ()

    def to_int(cs):
        den = 1
        for c in cs:
            den = den * c.denominator // _math_gcd(den, c.denominator)
        return [int(c * den) for c in cs]

    def primitive(v):
        while v and v[-1] == 0:
            v.pop()
        if not v:
            return v
        g = 0
        for x in v:
            g = _math_gcd(g, abs(x))
        if g > 1:
            v = [x // g for x in v]
        if v[-1] < 0:
            v = [-x for x in v]
        return v

    ia, ib = primitive(to_int(a)), primitive(to_int(b))
    while ib:
        r = list(ia)
        lb = ib[-1]
        db = len(ib) - 1
        while r and len(r) - 1 >= db:
            lr = r[-1]
            k = len(r) - 1 - db
            if lb != 1:
                r = [lb * x for x in r]
            for i, bi in enumerate(ib):
                r[k + i] -= lr * bi
            del r[-1]
            while r and r[-1] == 0:
                del r[-1]
        ia, ib = ib, primitive(r)
    return tuple(Fraction(x, ia[-1]) for x in ia)


def _qp_monic_scale(num, den):
    # canonical form: gcd(num, den) = 1 and den monic
    if len(den) == 1:
        d = den[0]
        if d == 1:
            return num, den
        return tuple(c / d for c in num), (Fraction(1),)
    if len(num) == 1:
        # nonzero constants are coprime to everything
        lead = den[-1]
        if lead == 1:
            return num, den
        return (num[0] / lead,), tuple(c / lead for c in den)
    g = _qp_gcd(num, den)
    if len(g) > 1:
        num = _qp_divmod(num, g)[0]
        den = _qp_divmod(den, g)[0]
    lead = den[-1]
    if lead != 1:
        num = tuple(c / lead for c in num)
        den = tuple(c / lead for c in den)
    return num, den


# ---------------------------------------------------------------------------
# univariate polynomials over Z/p (payload plumbing for finite fields)
# ---------------------------------------------------------------------------
# Same shape: ascending int tuples in [0, p), stripped; () is zero.


def _zp_strip(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _zp_add(a, b, p):
    n = max(len(a), len(b))
    return _zp_strip(
        ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)
    )


def _zp_neg(a, p):
    return tuple((-c) % p for c in a)


def _zp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _zp_strip(out)


def _zp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while len(r) >= len(b):
        c = (r[-1] * inv_lead) % p
        if c:
            k = len(r) - len(b)
            q[k] = c
            for j, bj in enumerate(b):
                r[k + j] = (r[k + j] - c * bj) % p
        del r[-1]
        while r and r[-1] == 0:
            del r[-1]
    return _zp_strip(q), _zp_strip(r)


def _zp_gcd(a, b, p):
    while b:
        a, b = b, _zp_divmod(a, b, p)[1]
    if a and a[-1] != 1:
        inv = pow(a[-1], -1, p)
        a = tuple((c * inv) % p for c in a)
    return a


def _zp_xgcd(a, b, p):
    # returns (g, s, t) with s*a + t*b = g, g monic
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = _zp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _zp_add(s0, _zp_neg(_zp_mul(q, s1, p), p), p)
        t0, t1 = t1, _zp_add(t0, _zp_neg(_zp_mul(q, t1, p), p), p)
    if r0 and r0[-1] != 1:
        inv = pow(r0[-1], -1, p)
        r0 = tuple((c * inv) % p for c in r0)
        s0 = tuple((c * inv) % p for c in s0)
        t0 = tuple((c * inv) % p for c in t0)
    return r0, s0, t0


def _zp_powmod(base, e, mod, p):
    result = (1,)
    base = _zp_divmod(base, mod, p)[1]
    while e > 0:
        if e & 1:
            result = _zp_divmod(_zp_mul(result, base, p), mod, p)[1]
        base = _zp_divmod(_zp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _zp_is_irreducible(f, p):
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = (0, 1)
    # x^(p^d) == x mod f, and x^(p^(d/q)) - x coprime to f for prime q | d
    if _zp_powmod(x, p**d, f, p) != _zp_divmod(x, f, p)[1]:
        return False
    for q in _prime_factors(d):
        h = _zp_add(_zp_powmod(x, p ** (d // q), f, p), _zp_neg(_zp_divmod(x, f, p)[1], p), p)
        if len(_zp_gcd(h, f, p)) != 1:
            return False
    return True


def _smallest_irreducible(p, d):
    """Lexicographically smallest monic irreducible of degree d over Z/p."""
    if d == 1:
        return (0, 1)
    for code in range(p**d):
        cs = []
        c = code
        for _ in range(d):
            cs.append(c % p)
            c //= p
        if cs[0] == 0:
            continue  # divisible by x
        f = tuple(cs) + (1,)
        if _zp_is_irreducible(f, p):
            return f
    raise RuntimeError(f"no irreducible of degree {d} over GF({p})")  # unreachable


def _is_prime(n):
    if n < 2:
        return False
    for d in range(2, int(n**0.5) + 1):
        if n % d == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# field elements
# ---------------------------------------------------------------------------


class FieldElement:
    """An exact value of one sigma-field.

    Thin immutable wrapper over a canonical payload; all arithmetic is
    delegated to the owning field.  Integers coerce on either side of an
    operator.
    """

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, *_):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"{other.field} is not {self.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int, Fraction)):
            other = self._coerce(other)
            return FieldElement(self.field, self.field._mul(self.value, other.value))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        acc = self.field.one
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            try:
                other = self.field.element(other)
            except (TypeError, ValueError):
                return NotImplemented
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.value == other.value and (
            self.field is other.field or self.field == other.field
        )

    def __hash__(self):
        return hash((self.field.descriptor(), self.value))

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self):
        return self.value == self.field._zero_payload()

    def inverse(self):
        return FieldElement(self.field, self.field._inv(self.value))

    def sigma(self, power=1):
        """Apply sigma ``power`` times (negative powers use the inverse map)."""
        f = self.field._sigma if power >= 0 else self.field._sigma_inv
        v = self.value
        for _ in range(abs(power)):
            v = f(v)
        return FieldElement(self.field, v)

    def sigma_inv(self):
        return self.sigma(-1)

    def sort_key(self):
        return self.field._sort_key(self.value)

    def __str__(self):
        return self.field._format(self.value)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# the fields
# ---------------------------------------------------------------------------


class SigmaField:
    """Common interface of the concrete sigma-fields."""

    is_finite = False

    # subclasses provide: _zero_payload, _one_payload, _add, _neg, _mul, _inv,
    # _sigma, _sigma_inv, _sort_key, _format, element, descriptor, label,
    # sigma_is_identity, sigma_is_involution, atoms, random_element

    @property
    def zero(self):
        return FieldElement(self, self._zero_payload())

    @property
    def one(self):
        return FieldElement(self, self._one_payload())

    def order(self):
        return None

    def elements(self):
        raise InfiniteFieldError(f"{self.label} is infinite")

    def nonzero_elements(self):
        z = self._zero_payload()
        return (a for a in self.elements() if a.value != z)

    def random_nonzero(self, rng):
        while True:
            a = self.random_element(rng)
            if not a.is_zero():
                return a

    def __eq__(self, other):
        return isinstance(other, SigmaField) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash(self.descriptor())

    def __repr__(self):
        return self.label


class Rationals(SigmaField):
    """The trivial sigma-field Q (sigma = identity)."""

    label = "Q"
    sigma_is_identity = True
    sigma_is_involution = True

    def descriptor(self):
        return "q"

    def _zero_payload(self):
        return Fraction(0)

    def _one_payload(self):
        return Fraction(1)

    def element(self, v):
        if isinstance(v, FieldElement):
            if v.field != self:
                raise FieldMismatchError("cannot coerce across fields")
            return v
        return FieldElement(self, Fraction(v))

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return 1 / a

    def _sigma(self, a):
        return a

    _sigma_inv = _sigma

    def _sort_key(self, a):
        return (a.numerator, a.denominator)

    def _format(self, a):
        return str(a)

    def atoms(self):
        return {}

    def random_element(self, rng):
        return FieldElement(self, Fraction(rng.randint(-9, 9), rng.randint(1, 9)))


class GaussianRationals(SigmaField):
    """Q(i) with sigma = complex conjugation (an involution).

    Stands in for the paper-style complex field: exact, countable, and every
    conjugation identity is decidable.
    """

    label = "Q(i)"
    sigma_is_identity = False
    sigma_is_involution = True

    def descriptor(self):
        return "qi"

    def _zero_payload(self):
        return (Fraction(0), Fraction(0))

    def _one_payload(self):
        return (Fraction(1), Fraction(0))

    def element(self, v):
        if isinstance(v, FieldElement):
            if v.field != self:
                raise FieldMismatchError("cannot coerce across fields")
            return v
        return FieldElement(self, (Fraction(v), Fraction(0)))

    def from_parts(self, re, im):
        return FieldElement(self, (Fraction(re), Fraction(im)))

    @property
    def i(self):
        return self.from_parts(0, 1)

    def _add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _neg(self, a):
        return (-a[0], -a[1])

    def _mul(self, a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def _inv(self, a):
        n = a[0] * a[0] + a[1] * a[1]
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return (a[0] / n, -a[1] / n)

    def _sigma(self, a):
        return (a[0], -a[1])

    _sigma_inv = _sigma

    def _sort_key(self, a):
        return (a[0].numerator, a[0].denominator, a[1].numerator, a[1].denominator)

    def _format(self, a):
        re, im = a
        if im == 0:
            return str(re)
        if im == 1:
            imagpart = "i"
        elif im == -1:
            imagpart = "-i"
        elif im.denominator == 1:
            imagpart = f"{im}i"
        else:
            imagpart = f"({abs(im)})i" if im > 0 else f"-({abs(im)})i"
        if re == 0:
            return imagpart
        sign = "" if imagpart.startswith("-") else "+"
        return f"{re}{sign}{imagpart}"

    def atoms(self):
        return {"i": self.i}

    def random_element(self, rng):
        return self.from_parts(
            Fraction(rng.randint(-5, 5), rng.randint(1, 4)),
            Fraction(rng.randint(-5, 5), rng.randint(1, 4)),
        )


class RationalFunctionField(SigmaField):
    """Q(x) with the order-two automorphism substituting x -> 1/x."""

    label = "Q(x)"
    sigma_is_identity = False
    sigma_is_involution = True

    def descriptor(self):
        return "qx-inv"

    def _zero_payload(self):
        return ((), (Fraction(1),))

    def _one_payload(self):
        return ((Fraction(1),), (Fraction(1),))

    def element(self, v):
        if isinstance(v, FieldElement):
            if v.field != self:
                raise FieldMismatchError("cannot coerce across fields")
            return v
        v = Fraction(v)
        if v == 0:
            return self.zero
        return FieldElement(self, ((v,), (Fraction(1),)))

    def from_coeffs(self, num, den=(1,)):
        num = _qp_strip(Fraction(c) for c in num)
        den = _qp_strip(Fraction(c) for c in den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return self.zero
        return FieldElement(self, _qp_monic_scale(num, den))

    @property
    def x(self):
        return self.from_coeffs((0, 1))

    def _add(self, a, b):
        num = _qp_add(_qp_mul(a[0], b[1]), _qp_mul(b[0], a[1]))
        if not num:
            return self._zero_payload()
        return _qp_monic_scale(num, _qp_mul(a[1], b[1]))

    def _neg(self, a):
        return (_qp_neg(a[0]), a[1])

    def _mul(self, a, b):
        num = _qp_mul(a[0], b[0])
        if not num:
            return self._zero_payload()
        return _qp_monic_scale(num, _qp_mul(a[1], b[1]))

    def _inv(self, a):
        # swapping a coprime pair stays coprime: only rescale
        if not a[0]:
            raise ZeroDivisionError("division by zero")
        num, den = a[1], a[0]
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        return (num, den)

    def _sigma(self, a):
        # f(x) -> f(1/x): num(1/x) = rev(num)/x^deg(num), likewise for den.
        # Reversal keeps the pair coprime (the reversed parts have nonzero
        # constant terms), so no gcd is needed, only a power-of-x shift.
        num, den = a
        if not num:
            return a
        rn = _qp_strip(reversed(num))
        rd = _qp_strip(reversed(den))
        e = (len(den) - 1) - (len(num) - 1)
        if e >= 0:
            num2 = ((Fraction(0),) * e) + rn
            den2 = rd
        else:
            num2 = rn
            den2 = ((Fraction(0),) * (-e)) + rd
        lead = den2[-1]
        if lead != 1:
            num2 = tuple(c / lead for c in num2)
            den2 = tuple(c / lead for c in den2)
        return (num2, den2)

    _sigma_inv = _sigma

    def _sort_key(self, a):
        def poly_key(cs):
            return (len(cs),) + tuple((c.numerator, c.denominator) for c in cs)

        return (poly_key(a[0]), poly_key(a[1]))

    @staticmethod
    def _poly_str(cs):
        if not cs:
            return "0"
        terms = []
        for j in range(len(cs) - 1, -1, -1):
            c = cs[j]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if j == 0:
                body = str(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            else:
                xpart = "x" if j == 1 else f"x^{j}"
                if c == 1:
                    body = xpart
                elif c.denominator == 1:
                    body = f"{c}{xpart}"
                else:
                    body = f"({c}){xpart}"
            terms.append((sign, body))
        s = terms[0][1] if terms[0][0] == "+" else "-" + terms[0][1]
        for sign, body in terms[1:]:
            s += sign + body
        return s

    def _format(self, a):
        num, den = a
        if not num:
            return "0"
        ns = self._poly_str(num)
        if den == (Fraction(1),):
            return ns
        ds = self._poly_str(den)

        def wrap(s):
            core = s[1:] if s.startswith("-") else s
            atomic = core.replace("/", "").isalnum() and "+" not in core and "-" not in core
            return s if (atomic and not s.startswith("-")) else f"({s})"

        return f"{wrap(ns)}/{wrap(ds)}"

    def atoms(self):
        return {"x": self.x}

    def random_element(self, rng):
        # degree <= 1 parts keep the exact sweeps cheap while still moving
        # under sigma(x) = 1/x
        num = [Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(1, 2))]
        den = [Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(1, 2))]
        if not any(den):
            den[0] = Fraction(1)
        if not any(num):
            return self.zero
        return self.from_coeffs(num, den)


class FiniteField(SigmaField):
    """GF(p^k) with sigma(a) = a^(p^n), for an explicit irreducible modulus.

    ``k = 1`` is the prime field; there sigma is the identity map and the
    default modulus is x.  Residues are written in the generator ``u``.
    """

    is_finite = True

    def __init__(self, p, k=1, modulus=None, frob=1):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        if frob < 1:
            raise ValueError("frobenius power must be >= 1")
        if modulus is None:
            modulus = _smallest_irreducible(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] == 0:
            raise ValueError(f"modulus must have degree {k}")
        if modulus[-1] != 1:
            inv = pow(modulus[-1], -1, p)
            modulus = tuple((c * inv) % p for c in modulus)
        if not _zp_is_irreducible(modulus, p):
            raise ValueError("modulus is reducible")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.frob_power = frob
        self._desc = (
            f"gf:{p}"
            if k == 1
            else f"gf:{p}^{k}:modulus={','.join(str(c) for c in modulus)}:frob={frob}"
        )
        self.label = f"GF({p**k})" if k > 1 or frob == 1 else f"GF({p});frob={frob}"
        # frobenius powers are F_p-linear: precompute basis images once
        self._sig_table = self._frob_table(frob % k)
        self._sig_inv_table = self._frob_table((k - frob % k) % k)

    def _frob_table(self, m):
        if m == 0:
            return None
        g = self._pow_payload((0, 1) if self.k > 1 else (1,), self.p**m)
        rows = []
        acc = (1,)
        for _ in range(self.k):
            rows.append(tuple(acc) + (0,) * (self.k - len(acc)))
            acc = self._mul(acc, g)
        return rows

    def _apply_table(self, table, a):
        out = [0] * self.k
        for j, c in enumerate(a):
            if c:
                row = table[j]
                for t in range(self.k):
                    v = row[t]
                    if v:
                        out[t] = (out[t] + c * v) % self.p
        return _zp_strip(out)

    def descriptor(self):
        return self._desc

    @property
    def sigma_is_identity(self):
        return self.frob_power % self.k == 0

    @property
    def sigma_is_involution(self):
        return (2 * self.frob_power) % self.k == 0

    def order(self):
        return self.p**self.k

    def fixed_field_order(self):
        import math

        return self.p ** math.gcd(self.frob_power, self.k)

    def fixed_elements(self):
        """Elements with sigma(a) = a; exactly fixed_field_order() of them."""
        return [a for a in self.elements() if self._sigma(a.value) == a.value]

    def _zero_payload(self):
        return ()

    def _one_payload(self):
        return (1,)

    def element(self, v):
        if isinstance(v, FieldElement):
            if v.field != self:
                raise FieldMismatchError("cannot coerce across fields")
            return v
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            v = v.numerator * pow(v.denominator, -1, self.p)
        return FieldElement(self, _zp_strip(((int(v) % self.p),)))

    def from_coeffs(self, cs):
        payload = _zp_divmod(tuple(int(c) % self.p for c in cs), self.modulus, self.p)[1]
        return FieldElement(self, payload)

    @property
    def generator(self):
        if self.k == 1:
            raise ValueError("prime field has no extension generator")
        return FieldElement(self, (0, 1))

    def elements(self):
        for code in range(self.p**self.k):
            cs = []
            c = code
            for _ in range(self.k):
                cs.append(c % self.p)
                c //= self.p
            yield FieldElement(self, _zp_strip(cs))

    def _add(self, a, b):
        return _zp_add(a, b, self.p)

    def _neg(self, a):
        return _zp_neg(a, self.p)

    def _mul(self, a, b):
        return _zp_divmod(_zp_mul(a, b, self.p), self.modulus, self.p)[1]

    def _inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero")
        g, s, _ = _zp_xgcd(a, self.modulus, self.p)
        if len(g) != 1:
            raise ZeroDivisionError("non-invertible residue")  # impossible: modulus irreducible
        inv_g = pow(g[0], -1, self.p)
        return _zp_divmod(tuple((c * inv_g) % self.p for c in s), self.modulus, self.p)[1]

    def _pow_payload(self, a, e):
        result = (1,)
        while e > 0:
            if e & 1:
                result = self._mul(result, a)
            a = self._mul(a, a)
            e >>= 1
        return result

    def _sigma(self, a):
        if not a or self._sig_table is None:
            return a
        return self._apply_table(self._sig_table, a)

    def _sigma_inv(self, a):
        if not a or self._sig_inv_table is None:
            return a
        return self._apply_table(self._sig_inv_table, a)

    def _sort_key(self, a):
        return sum(c * self.p**j for j, c in enumerate(a))

    def _format(self, a):
        if not a:
            return "0"
        if self.k == 1:
            return str(a[0])
        terms = []
        for j in range(len(a) - 1, -1, -1):
            c = a[j]
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                upart = "u" if j == 1 else f"u^{j}"
                terms.append(upart if c == 1 else f"{c}{upart}")
        return "+".join(terms)

    def atoms(self):
        return {"u": self.generator} if self.k > 1 else {}

    def random_element(self, rng):
        return FieldElement(self, _zp_strip(rng.randrange(self.p) for _ in range(self.k)))


def PrimeField(p):
    """The trivial sigma-field GF(p) (sigma = Frobenius = identity)."""
    return FiniteField(p, 1)


# ---------------------------------------------------------------------------
# sigma-norms and conjugacy
# ---------------------------------------------------------------------------


def sigma_norm(i, a):
    """The i-th sigma-norm of ``a``.

    For i >= 0 this is sigma^(i-1)(a)...sigma(a)*a with the empty product 1;
    negative indices give the mirror products sigma^{-(i-1)}(a)...sigma^{-1}(a)*a
    used by left evaluation.
    """
    field = a.field
    acc = field.one
    if i >= 0:
        for _ in range(i):
            acc = acc.sigma() * a
    else:
        for _ in range(-i):
            acc = acc.sigma(-1) * a
    return acc


def conjugate(b, x):
    """sigma(x) * b * x^(-1), the sigma-conjugate of b by x (x nonzero)."""
    if x.is_zero():
        raise ZeroConjugatorError("conjugator must be nonzero")
    return x.sigma() * b * x.inverse()


def conjugacy_classes(field):
    """Partition of a finite field into {0} and the sigma-conjugacy orbits.

    Classes are sorted by their canonical minimum; each class is a tuple
    sorted the same way.
    """
    if not field.is_finite:
        raise InfiniteFieldError(f"{field.label} is infinite")
    zero = field.zero
    seen = {zero}
    classes = [(zero,)]
    units = [x for x in field.nonzero_elements()]
    for a in units:
        if a in seen:
            continue
        orbit = {conjugate(a, x) for x in units}
        seen |= orbit
        classes.append(tuple(sorted(orbit, key=lambda e: e.sort_key())))
    classes.sort(key=lambda cls: cls[0].sort_key())
    return classes


def are_conjugate(a, b):
    """Decide sigma-conjugacy of two elements of the same field.

    Finite fields use the orbit directly.  On the shipped infinite fields the
    question is settled by a complete invariant: equality for trivial sigma,
    and the Hilbert-90 norm sigma(a)*a for the order-two automorphisms.
    """
    if a.field != b.field:
        raise FieldMismatchError("elements of different fields")
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    field = a.field
    if field.sigma_is_identity:
        return a == b
    if field.is_finite:
        return b in {conjugate(a, x) for x in field.nonzero_elements()}
    if field.sigma_is_involution:
        return a.sigma() * a == b.sigma() * b
    raise UndecidableConjugacyError(f"no conjugacy certificate for {field.label}")


# ---------------------------------------------------------------------------
# descriptors, embeddings, towers
# ---------------------------------------------------------------------------


def parse_descriptor(text):
    """Parse a field descriptor string.

    Grammar: ``q`` | ``qi`` | ``qx-inv`` | ``gf:p`` |
    ``gf:p^k:modulus=c0,c1,...,ck:frob=n`` (modulus/frob optional, defaulting
    to the smallest irreducible and n = 1).
    """
    text = text.strip()
    if text == "q":
        return Rationals()
    if text == "qi":
        return GaussianRationals()
    if text == "qx-inv":
        return RationalFunctionField()
    if text.startswith("gf:"):
        parts = text.split(":")
        head = parts[1]
        try:
            if "^" in head:
                p_s, k_s = head.split("^")
                p, k = int(p_s), int(k_s)
            else:
                p, k = int(head), 1
            modulus, frob = None, 1
            for part in parts[2:]:
                if part.startswith("modulus="):
                    modulus = tuple(int(c) for c in part[len("modulus="):].split(","))
                elif part.startswith("frob="):
                    frob = int(part[len("frob="):])
                else:
                    raise FieldLiteralError(f"unknown descriptor option {part!r}")
            return FiniteField(p, k, modulus, frob)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldLiteralError(f"bad field descriptor {text!r}: {exc}") from exc
    raise FieldLiteralError(f"unknown field descriptor {text!r}")


class FieldEmbedding:
    """A sigma-homomorphism from one shipped field into another."""

    def __init__(self, source, target, fn):
        self.source = source
        self.target = target
        self._fn = fn

    def __call__(self, a):
        if a.field != self.source:
            raise FieldMismatchError("element not in the embedding's source field")
        return self._fn(a)


def embedding(source, target):
    """Build the canonical embedding between two supported fields.

    Supported pairs: identity; Q into Q, Q(i), or Q(x); GF(p) or GF(p^k) into
    GF(p^(k*j)) carrying the same frobenius power.
    """
    if source == target:
        return FieldEmbedding(source, target, lambda a: a)
    if isinstance(source, Rationals) and isinstance(
        target, (Rationals, GaussianRationals, RationalFunctionField)
    ):
        return FieldEmbedding(source, target, lambda a: target.element(a.value))
    if isinstance(source, FiniteField) and isinstance(target, FiniteField):
        if source.p != target.p or target.k % source.k != 0:
            raise FieldMismatchError(f"{source.label} does not embed in {target.label}")
        if (target.frob_power - source.frob_power) % source.k != 0:
            raise FieldMismatchError("frobenius powers are incompatible")
        if source.k == 1:
            return FieldEmbedding(source, target, lambda a: target.element(a.value[0] if a.value else 0))
        # image of the small generator: a root of the small modulus upstairs
        mod = [target.element(c) for c in source.modulus]
        root = None
        for cand in target.elements():
            acc = target.zero
            powv = target.one
            for c in mod:
                acc = acc + c * powv
                powv = powv * cand
            if acc.is_zero():
                root = cand
                break  # elements() iterates in canonical order: smallest root
        if root is None:
            raise FieldMismatchError("modulus has no root in the target field")

        def fn(a, root=root):
            acc = target.zero
            powv = target.one
            for c in a.value:
                acc = acc + target.element(c) * powv
                powv = powv * root
            return acc

        return FieldEmbedding(source, target, fn)
    raise FieldMismatchError(f"no embedding {source.label} -> {target.label}")


_TOWER_CACHE = {}


def extension_field(field, j):
    """GF(p^(k*j)) over a finite field, with the embedding into it.

    The big modulus is the deterministic smallest irreducible of degree k*j;
    results are cached per (field, j).
    """
    if not isinstance(field, FiniteField):
        raise InfiniteFieldError("extension towers exist for finite fields only")
    key = (field.descriptor(), j)
    if key not in _TOWER_CACHE:
        big = FiniteField(field.p, field.k * j, frob=field.frob_power)
        _TOWER_CACHE[key] = (big, embedding(field, big))
    return _TOWER_CACHE[key]


def standard_fields():
    """The sigma-fields exercised by the test sweeps."""
    return [
        Rationals(),
        GaussianRationals(),
        RationalFunctionField(),
        FiniteField(5),
        FiniteField(2, 2),
        FiniteField(3, 2),
    ]
