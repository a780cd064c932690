"""Right fractions A*B^(-1) over K[T;sigma], their series, and partial fractions.

Fractions are canonicalized by cancelling the greatest common right divisor
and right-scaling the denominator monic; two fractions are equal iff their
canonical forms coincide.  Addition and multiplication ride on least common
right multiples of denominators.

Partial fractions follow the right-indecomposable atoms: powers of T and
affine factors 1 - c*T.  The splitting step writes the denominator D as
E1*(T-r1) = E2*(T-r2) for two distinct right roots, lifts the numerator
through a Bezout identity of the right factors, and recurses; roots are
searched in the field and then in extension fields of growing degree.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import (
    FieldMismatchError,
    NegativeValuationError,
    UnsplittableDenominatorError,
    ZeroDenominatorError,
)
from .fields import extension_field, sigma_norm
from .pdep import vandermonde, vandermonde_rank
from .poly import SkewPolynomial, gcrd, lcrm


def t_valuation(p):
    """Index of the lowest nonzero coefficient (None for the zero polynomial)."""
    for i, c in enumerate(p.coeffs):
        if not c.is_zero():
            return i
    return None


class OreFraction:
    """A right fraction numerator * denominator^(-1)."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=None):
        if denominator is None:
            denominator = SkewPolynomial.one(numerator.field)
        if numerator.field != denominator.field:
            raise FieldMismatchError("numerator and denominator over different fields")
        if denominator.is_zero():
            raise ZeroDenominatorError("zero denominator")
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def __setattr__(self, *_):
        raise AttributeError("OreFraction is immutable")

    @property
    def field(self):
        return self.numerator.field

    @classmethod
    def zero(cls, field):
        return cls(SkewPolynomial.zero(field))

    @classmethod
    def one(cls, field):
        return cls(SkewPolynomial.one(field))

    @classmethod
    def from_polynomial(cls, p):
        return cls(p)

    def is_zero(self):
        return self.numerator.is_zero()

    @property
    def degree(self):
        """deg A - deg B (minus infinity for zero)."""
        if self.is_zero():
            return float("-inf")
        return self.numerator.degree - self.denominator.degree

    def reduced(self):
        """Cancel the gcrd and make the denominator monic by a right unit."""
        a, b = self.numerator, self.denominator
        if a.is_zero():
            return OreFraction.zero(self.field)
        g, _, _ = gcrd(a, b)
        if g.degree > 0:
            qa, ra = a.right_divmod(g)
            qb, rb = b.right_divmod(g)
            assert ra.is_zero() and rb.is_zero()
            a, b = qa, qb
        if not b.is_monic():
            u = b.leading_coefficient.inverse().sigma(-b.degree)
            a, b = a * u, b * u
        return OreFraction(a, b)

    def __eq__(self, other):
        if not isinstance(other, OreFraction):
            return NotImplemented
        x, y = self.reduced(), other.reduced()
        return x.numerator == y.numerator and x.denominator == y.denominator

    def __hash__(self):
        x = self.reduced()
        return hash((x.numerator, x.denominator))

    def __add__(self, other):
        if isinstance(other, SkewPolynomial):
            other = OreFraction(other)
        if not isinstance(other, OreFraction):
            return NotImplemented
        if self.field != other.field:
            raise FieldMismatchError("fractions over different fields")
        if self.is_zero():
            return other.reduced()
        if other.is_zero():
            return self.reduced()
        m, u, v = lcrm(self.denominator, other.denominator)
        num = self.numerator * u + other.numerator * v
        return OreFraction(num, m).reduced()

    __radd__ = __add__

    def __neg__(self):
        return OreFraction(-self.numerator, self.denominator)

    def __sub__(self, other):
        if isinstance(other, SkewPolynomial):
            other = OreFraction(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SkewPolynomial):
            other = OreFraction(other)
        if not isinstance(other, OreFraction):
            return NotImplemented
        if self.field != other.field:
            raise FieldMismatchError("fractions over different fields")
        if self.is_zero() or other.is_zero():
            return OreFraction.zero(self.field)
        # B^(-1) C = U V^(-1) where B U = C V is the least common right multiple
        _, u, v = lcrm(self.denominator, other.numerator)
        return OreFraction(self.numerator * u, other.denominator * v).reduced()

    def inverse(self):
        if self.is_zero():
            raise ZeroDenominatorError("zero fraction has no inverse")
        return OreFraction(self.denominator, self.numerator).reduced()

    def __str__(self):
        if self.denominator.is_monic() and self.denominator.degree == 0:
            return str(self.numerator)
        return f"({self.numerator}) * ({self.denominator})^-1"

    __repr__ = __str__

    # -- series --------------------------------------------------------------

    def series(self, precision=16):
        """Truncated Laurent expansion at T = 0.

        The valuation is exact: T-adic order of the numerator minus that of
        the denominator.
        """
        if precision < 1:
            raise ValueError("precision must be positive")
        a, b = self.numerator, self.denominator
        if a.is_zero():
            return TruncatedSeries(self.field, 0, (self.field.zero,) * precision)
        m = t_valuation(b)
        # b = T^m * b2 where b2 has invertible constant term
        b2 = SkewPolynomial(self.field, (c.sigma(-m) for c in b.coeffs[m:]))
        va = t_valuation(a)
        # inverse series w of b2 to enough terms: b2 * w = 1
        terms = precision
        w = [b2.constant_term().inverse()]
        for kk in range(1, terms):
            s = self.field.zero
            for i in range(1, min(kk, b2.degree) + 1):
                s = s + b2.coefficient(i) * w[kk - i].sigma(i)
            w.append(-(b2.constant_term().inverse()) * s)
        # product (a * w), coefficients from exponent va upward
        coeffs = []
        for kk in range(va, va + precision):
            s = self.field.zero
            for i in range(max(0, kk - (terms - 1)), min(kk, a.degree) + 1):
                j = kk - i
                if 0 <= j < terms:
                    s = s + a.coefficient(i) * w[j].sigma(i)
            coeffs.append(s)
        return TruncatedSeries(self.field, va - m, tuple(coeffs))


class TruncatedSeries:
    """Finitely many exact Laurent coefficients starting at the valuation.

    coeffs[j] is the coefficient of T^(valuation + j); coefficients below the
    valuation are zero, coefficients at or beyond known_upto are unknown.
    """

    __slots__ = ("field", "valuation", "coeffs")

    def __init__(self, field, valuation, coeffs):
        coeffs = tuple(coeffs)
        while coeffs and coeffs[0].is_zero():
            coeffs = coeffs[1:]
            valuation += 1
        if not coeffs:
            valuation = 0
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "valuation", valuation)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *_):
        raise AttributeError("TruncatedSeries is immutable")

    def is_zero(self):
        return not self.coeffs

    @property
    def known_upto(self):
        """First exponent whose coefficient is unknown."""
        if not self.coeffs:
            return None  # identically zero to precision: everything known
        return self.valuation + len(self.coeffs)

    def coeff_at(self, e):
        if not self.coeffs:
            return self.field.zero
        if e < self.valuation:
            return self.field.zero
        if e >= self.known_upto:
            raise IndexError(f"coefficient of T^{e} is beyond the computed window")
        return self.coeffs[e - self.valuation]

    def window(self, lo, hi):
        return tuple(self.coeff_at(e) for e in range(lo, hi))

    def __add__(self, other):
        if self.field != other.field:
            raise FieldMismatchError("series over different fields")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.valuation, other.valuation)
        hi = min(self.known_upto, other.known_upto)
        return TruncatedSeries(
            self.field, lo, (self.coeff_at(e) + other.coeff_at(e) for e in range(lo, hi))
        )

    def __neg__(self):
        return TruncatedSeries(self.field, self.valuation, (-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.field == other.field
            and self.valuation == other.valuation
            and self.coeffs == other.coeffs
        )

    def agrees_with(self, other, upto=None):
        """Exact agreement on the overlap of the known windows."""
        if self.is_zero() and other.is_zero():
            return True
        los = [s.valuation for s in (self, other) if s.coeffs]
        his = [s.known_upto for s in (self, other) if s.coeffs]
        lo, hi = min(los, default=0), min(his, default=0)
        if upto is not None:
            hi = min(hi, upto)
        return all(self.coeff_at(e) == other.coeff_at(e) for e in range(lo, hi))

    def __str__(self):
        if self.is_zero():
            return "0 + O(T^?)"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            e = self.valuation + j
            if e == 0:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*T^{e}" if e != 1 else f"({c})*T")
        return " + ".join(parts) + f" + O(T^{self.known_upto})"

    __repr__ = __str__


def geometric_fraction(b, c):
    """The simple fraction b * (1 - c*T)^(-1)."""
    field = b.field
    den = SkewPolynomial(field, (field.one, -c))
    return OreFraction(SkewPolynomial(field, (b,)), den)


# ---------------------------------------------------------------------------
# partial fraction decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PfdResult:
    """x = polynomial_part + sum a_i T^(-i) + sum b_j (1 - c_j T)^(-1).

    ``principal`` lists a_1..a_m; ``terms`` lists the (b_j, c_j) pairs with
    the c_j nonzero and P-independent.  ``field`` is where the output lives:
    the input field, or the extension climbed to find splitting roots
    (``tower_level`` > 1); in that case the input was embedded first.
    """

    field: object
    polynomial_part: SkewPolynomial
    principal: tuple
    terms: tuple
    tower_level: int = 1

    @property
    def pole_order(self):
        return len(self.principal)

    def recombine(self):
        acc = OreFraction.from_polynomial(self.polynomial_part)
        field = self.field
        for i, a in enumerate(self.principal, start=1):
            if not a.is_zero():
                acc = acc + OreFraction(
                    SkewPolynomial(field, (a,)), SkewPolynomial.t(field, i)
                )
        for b, c in self.terms:
            acc = acc + geometric_fraction(b, c)
        return acc

    def to_dict(self):
        return {
            "field": self.field.descriptor(),
            "tower_level": self.tower_level,
            "polynomial_part": str(self.polynomial_part),
            "principal": [str(a) for a in self.principal],
            "terms": [[str(b), str(c)] for b, c in self.terms],
        }

    def to_text(self):
        bits = []
        if not self.polynomial_part.is_zero():
            bits.append(str(self.polynomial_part))
        for i, a in enumerate(self.principal, start=1):
            if not a.is_zero():
                bits.append(f"({a})*T^-{i}")
        for b, c in self.terms:
            bits.append(f"({b})*(1 - ({c})*T)^-1")
        body = " + ".join(bits) if bits else "0"
        return f"[{self.field.label}, tower level {self.tower_level}] {body}"


class _NeedExtension(Exception):
    def __init__(self, level):
        self.level = level


def _embed_fraction(x, emb):
    lift = lambda p: SkewPolynomial(emb.target, tuple(emb(c) for c in p.coeffs))
    return OreFraction(lift(x.numerator), lift(x.denominator))


def _two_roots(d, remaining_budget, root_choice):
    """Two distinct right roots of d, or the tower level where they appear."""
    field = d.field
    roots = [a for a in field.elements() if d.eval_right(a).is_zero()]
    roots.sort(key=lambda e: e.sort_key())
    if len(roots) >= 2:
        if root_choice == "max":
            return roots[-1], roots[-2]
        return roots[0], roots[1]
    for j in range(2, remaining_budget + 1):
        big, emb = extension_field(field, j)
        dd = SkewPolynomial(big, tuple(emb(c) for c in d.coeffs))
        roots = [a for a in big.elements() if dd.eval_right(a).is_zero()]
        if len(roots) >= 2:
            raise _NeedExtension(j)
    raise UnsplittableDenominatorError(
        f"denominator {d} has fewer than two roots within the extension tower"
    )


def _split_regular(c_poly, d_poly, remaining_budget, root_choice):
    """Decompose C*D^(-1) with deg C < deg D and D(0) != 0 into simple terms.

    Returns (terms, scraps) where scraps are polynomial leftovers of the
    Bezout pieces; they cancel in total.
    """
    field = d_poly.field
    if d_poly.degree == 0:
        assert c_poly.is_zero()
        return [], []
    if d_poly.degree == 1:
        d1, d0 = d_poly.coefficient(1), d_poly.coefficient(0)
        u = d0.inverse()
        c = -(d1 * u.sigma())
        b = c_poly.constant_term() * u
        return ([(b, c)] if not b.is_zero() else []), []
    r1, r2 = _two_roots(d_poly, remaining_budget, root_choice)
    f1 = SkewPolynomial.t_minus(r1)
    f2 = SkewPolynomial.t_minus(r2)
    e1, rem1 = d_poly.right_divmod(f1)
    e2, rem2 = d_poly.right_divmod(f2)
    assert rem1.is_zero() and rem2.is_zero()
    g, u, v = gcrd(f1, f2)
    assert g.degree == 0  # distinct linear right factors are right co-prime
    # c = (c*u)*f1 + (c*v)*f2, so c*d^(-1) = (c*u)*e1^(-1) + (c*v)*e2^(-1)
    terms, scraps = [], []
    for cofactor, e in ((u, e1), (v, e2)):
        piece = OreFraction(c_poly * cofactor, e).reduced()
        if piece.is_zero():
            continue
        num, den = piece.numerator, piece.denominator
        q, r = num.right_divmod(den)
        if not q.is_zero():
            scraps.append(q)
        if r.is_zero():
            continue
        sub_terms, sub_scraps = _split_regular(r, den, remaining_budget, root_choice)
        terms.extend(sub_terms)
        scraps.extend(sub_scraps)
    return terms, scraps


def _consolidate_terms(raw_terms, target, field):
    """Merge duplicate generators, enforce P-independence, verify exactly.

    ``target`` is the exact fraction the simple terms must sum to.
    """
    by_c = {}
    order = []
    for b, c in raw_terms:
        if c in by_c:
            by_c[c] = by_c[c] + b
        else:
            by_c[c] = b
            order.append(c)
    cs = [c for c in order if not by_c[c].is_zero()]
    if not cs:
        assert target.is_zero()
        return ()
    if vandermonde_rank(cs) < len(cs):
        # keep a maximal P-independent subset (same span of norm vectors),
        # then re-solve the coefficients from the series of the target
        independent = []
        for c in sorted(cs, key=lambda e: e.sort_key()):
            if vandermonde_rank(independent + [c]) == len(independent) + 1:
                independent.append(c)
        n = len(independent)
        rows = vandermonde(independent, nrows=n)
        s = target.series(precision=n)
        rhs = [s.coeff_at(j) for j in range(n)]
        sol = linalg.solve(rows, rhs)
        assert sol is not None
        pairs = [(b, c) for b, c in zip(sol, independent) if not b.is_zero()]
    else:
        pairs = [(by_c[c], c) for c in cs]
    check = OreFraction.zero(field)
    for b, c in pairs:
        check = check + geometric_fraction(b, c)
    assert check == target, "partial fraction terms failed to recombine"
    return tuple(sorted(pairs, key=lambda bc: bc[1].sort_key()))


def pfd(x, tower_bound=6, root_choice="min"):
    """Partial fraction decomposition of a right fraction.

    Splits x into a polynomial part, a T^(-i) pole part, and simple terms
    b*(1-c*T)^(-1) with P-independent c's.  Needs a finite coefficient field
    (roots may be searched in extensions up to degree ``tower_bound``); raises
    UnsplittableDenominatorError when a denominator refuses to split within
    the tower.  The decomposition recombines to x exactly.
    """
    level = 1
    base = x
    while True:
        try:
            return _pfd_at_level(base, x, level, tower_bound, root_choice)
        except _NeedExtension as need:
            level *= need.level
            if level > tower_bound:
                raise UnsplittableDenominatorError(
                    f"splitting needs extension degree {level} > bound {tower_bound}"
                ) from None
            big, emb = extension_field(x.field, level)
            base = _embed_fraction(x, emb)


def _pfd_at_level(x, original, level, tower_bound, root_choice):
    field = x.field
    x = x.reduced()
    if x.is_zero():
        return PfdResult(field, SkewPolynomial.zero(field), (), (), level)
    a, b = x.numerator, x.denominator
    p0, r = a.right_divmod(b)
    rest = OreFraction(r, b).reduced()
    m = t_valuation(b)
    principal = []
    if m and not rest.is_zero():
        s = rest.series(precision=max(1, m))
        principal = [s.coeff_at(-i) for i in range(1, m + 1)]
        pole = OreFraction.zero(field)
        for i, ai in enumerate(principal, start=1):
            if not ai.is_zero():
                pole = pole + OreFraction(
                    SkewPolynomial(field, (ai,)), SkewPolynomial.t(field, i)
                )
        rest = rest - pole
    while principal and principal[-1].is_zero():
        principal.pop()
    terms = ()
    if not rest.is_zero():
        c_poly, d_poly = rest.numerator, rest.denominator
        assert not d_poly.constant_term().is_zero()
        assert c_poly.degree < d_poly.degree
        budget = tower_bound // level
        raw, scraps = _split_regular(c_poly, d_poly, max(budget, 1), root_choice)
        leftover = SkewPolynomial.zero(field)
        for scr in scraps:
            leftover = leftover + scr
        assert leftover.is_zero(), "polynomial scraps must cancel"
        terms = _consolidate_terms(raw, rest, field)
    return PfdResult(field, p0, tuple(principal), terms, level)
