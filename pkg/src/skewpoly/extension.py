"""Root adjunction: a universal extension containing a root of a skew polynomial.

Given a monic skew polynomial of degree n+1 with nonzero constant term over
(K, sigma), build the commutative polynomial ring K[y_0,...,y_(n-1)],
localize at the multiplicative set generated by the nonzero combinations
d_0 + d_1*y_0 + d_2*y_0*y_1 + ... + d_n*y_0...y_(n-1), and extend sigma to a
structure endomorphism under which y_0 becomes a root of the polynomial with
exactly the right minimal degree.  Everything is exact and symbolic.

Denominators are kept as explicit factor lists of such combinations: that
makes membership in the multiplicative set a syntactic property instead of
an undecidable one.  There is no global normal form for the rationals;
equality is decided by cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DegreeMismatchError,
    DenominatorNotInSError,
    FieldMismatchError,
    NotMinimalError,
    ZeroConstantTermError,
)
from .fields import (
    FieldElement,
    FiniteField,
    GaussianRationals,
    RationalFunctionField,
    Rationals,
    embedding,
)
from .poly import SkewPolynomial


def _base_coordinates(emb, values):
    """Coordinate rows of target-field values over the embedded source field.

    Returns rows of source FieldElements, or None when no coordinate system
    is available for the pair (the caller then falls back to sampling).
    """
    src, tgt = emb.source, emb.target
    if src == tgt:
        return [[v] for v in values]
    if isinstance(src, Rationals) and isinstance(tgt, GaussianRationals):
        return [[src.element(v.value[0]), src.element(v.value[1])] for v in values]
    if isinstance(src, Rationals) and isinstance(tgt, RationalFunctionField):
        # clear denominators jointly; coordinates are polynomial coefficients
        dens = [v.value[1] for v in values]
        rows_raw = []
        for i, v in enumerate(values):
            num = v.value[0]
            for j, d in enumerate(dens):
                if j != i:
                    num = _qp_mul_frac(num, d)
            rows_raw.append(num)
        width = max((len(r) for r in rows_raw), default=0)
        return [
            [src.element(r[j] if j < len(r) else 0) for j in range(width)]
            for r in rows_raw
        ]
    if isinstance(src, FiniteField) and src.k == 1 and isinstance(tgt, FiniteField):
        return [
            [src.element(v.value[j] if j < len(v.value) else 0) for j in range(tgt.k)]
            for v in values
        ]
    return None


def _qp_mul_frac(a, b):
    if not a or not b:
        return ()
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class MultiPoly:
    """Ordinary polynomial in y_0..y_(n-1) over a sigma-field.

    terms maps exponent tuples (length n) to nonzero coefficients.
    """

    __slots__ = ("field", "n", "terms")

    def __init__(self, field, n, terms=()):
        clean = {}
        for e, c in dict(terms).items():
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise ValueError(f"exponent vector {e} has length != {n}")
            if not isinstance(c, FieldElement):
                c = field.element(c)
            elif c.field != field:
                raise FieldMismatchError("coefficient from a different field")
            if not c.is_zero():
                clean[e] = clean[e] + c if e in clean else c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if not c.is_zero()})

    def __setattr__(self, *_):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def constant(cls, field, n, c):
        return cls(field, n, {(0,) * n: c})

    @classmethod
    def variable(cls, field, n, i):
        e = [0] * n
        e[i] = 1
        return cls(field, n, {tuple(e): field.one})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.field.descriptor(), self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        merged = dict(self.terms)
        for e, c in other.terms.items():
            merged[e] = merged[e] + c if e in merged else c
        return MultiPoly(self.field, self.n, merged)

    def __neg__(self):
        return MultiPoly(self.field, self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return MultiPoly(self.field, self.n, {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                out[e] = out[e] + prod if e in out else prod
        return MultiPoly(self.field, self.n, out)

    def __rmul__(self, other):
        if isinstance(other, FieldElement):
            return self * other
        return NotImplemented

    def __pow__(self, e):
        acc = MultiPoly.constant(self.field, self.n, self.field.one)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def map_coefficients(self, fn):
        return MultiPoly(self.field, self.n, {e: fn(c) for e, c in self.terms.items()})

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            vars_ = "*".join(
                (f"y{i}" if k == 1 else f"y{i}^{k}") for i, k in enumerate(e) if k
            )
            cs = str(c)
            if not vars_:
                parts.append(f"({cs})" if ("+" in cs or "-" in cs[1:]) else cs)
            elif c == self.field.one:
                parts.append(vars_)
            else:
                cs = f"({cs})" if ("+" in cs or "-" in cs[1:] or "/" in cs) else cs
                parts.append(f"{cs}*{vars_}")
        return " + ".join(parts)

    __repr__ = __str__


class NormCombination:
    """A combination d_0 + d_1*y_0 + d_2*y_0*y_1 + ... + d_n*y_0...y_(n-1).

    These span the norm monomials of the adjoined root; their nonzero members
    generate the multiplicative set we localize at.
    """

    __slots__ = ("field", "n", "d")

    def __init__(self, field, n, d):
        d = tuple(c if isinstance(c, FieldElement) else field.element(c) for c in d)
        if len(d) != n + 1:
            raise ValueError(f"need {n + 1} coefficients, got {len(d)}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *_):
        raise AttributeError("NormCombination is immutable")

    def is_zero(self):
        return all(c.is_zero() for c in self.d)

    def __eq__(self, other):
        if not isinstance(other, NormCombination):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.d == other.d

    def __hash__(self):
        return hash((self.field.descriptor(), self.n, self.d))

    def to_multipoly(self):
        terms = {}
        for i, c in enumerate(self.d):
            if not c.is_zero():
                terms[tuple(1 if j < i else 0 for j in range(self.n))] = c
        return MultiPoly(self.field, self.n, terms)

    def __str__(self):
        return str(self.to_multipoly())

    __repr__ = __str__


class MultiRational:
    """numerator / product(factors): element of the localized ring.

    The factor list is the certificate that the denominator belongs to the
    multiplicative set; it is never expanded away.
    """

    __slots__ = ("numerator", "factors")

    def __init__(self, numerator, factors=()):
        factors = tuple(factors)
        for s in factors:
            if not isinstance(s, NormCombination):
                raise DenominatorNotInSError("denominator factors must be norm combinations")
            if s.is_zero():
                raise DenominatorNotInSError("zero denominator factor")
            if s.n != numerator.n or s.field != numerator.field:
                raise FieldMismatchError("factor shape mismatch")
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "factors", factors)

    def __setattr__(self, *_):
        raise AttributeError("MultiRational is immutable")

    @property
    def field(self):
        return self.numerator.field

    @property
    def n(self):
        return self.numerator.n

    def is_zero(self):
        return self.numerator.is_zero()

    def expanded_denominator(self):
        acc = MultiPoly.constant(self.field, self.n, self.field.one)
        for s in self.factors:
            acc = acc * s.to_multipoly()
        return acc

    def __add__(self, other):
        num = self.numerator * other.expanded_denominator() + other.numerator * self.expanded_denominator()
        return MultiRational(num, self.factors + other.factors)

    def __neg__(self):
        return MultiRational(-self.numerator, self.factors)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return MultiRational(self.numerator * other, self.factors)
        return MultiRational(self.numerator * other.numerator, self.factors + other.factors)

    def __rmul__(self, other):
        if isinstance(other, FieldElement):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, MultiRational):
            return NotImplemented
        return (self.numerator * other.expanded_denominator()) == (
            other.numerator * self.expanded_denominator()
        )

    def __str__(self):
        if not self.factors:
            return str(self.numerator)
        den = " * ".join(f"({s})" for s in self.factors)
        return f"({self.numerator}) / [{den}]"

    __repr__ = __str__


@dataclass(frozen=True)
class RootVerification:
    ok: bool
    value_at_root: MultiRational
    norm_monomials: tuple
    detail: str


class RootAdjunction:
    """The sigma-domain adjoining a universal root of one skew polynomial.

    The polynomial must be monic of degree n+1 >= 1 with nonzero constant
    term (anything of the shape a*T^m can have no nonzero root anywhere).
    Degree is capped (default 4) to bound symbolic blow-up.
    """

    def __init__(self, p, max_degree=4):
        if p.is_zero() or not p.is_monic():
            raise DegreeMismatchError("need a monic polynomial of degree >= 1")
        if p.degree < 1:
            raise DegreeMismatchError("need degree >= 1")
        if p.degree > max_degree:
            raise DegreeMismatchError(
                f"degree {p.degree} exceeds the configured cap {max_degree}"
            )
        if p.constant_term().is_zero():
            raise ZeroConstantTermError("constant term must be nonzero")
        self.poly = p
        self.field = p.field
        self.n = p.degree - 1
        # write the polynomial as T^(n+1) - c_n T^n - ... - c_1 T - c_0
        self.c = tuple(-p.coefficient(i) for i in range(self.n + 1))

    # -- building blocks ----------------------------------------------------

    def combination(self, d):
        return NormCombination(self.field, self.n, d)

    def poly_of(self, terms):
        return MultiPoly(self.field, self.n, terms)

    def constant(self, c):
        return MultiRational(MultiPoly.constant(self.field, self.n, c))

    @property
    def top_monomial(self):
        """y_0*y_1*...*y_(n-1) as a combination (the d_n basis vector)."""
        return self.combination([self.field.zero] * self.n + [self.field.one])

    @property
    def root(self):
        """The adjoined root: y_0, or the constant c_0 in the degree-1 case."""
        if self.n == 0:
            return self.constant(self.c[0])
        return MultiRational(MultiPoly.variable(self.field, self.n, 0))

    # -- the structure maps -------------------------------------------------

    def shift(self, y):
        """The span-preserving map sending Y to root * twist(Y).

        On coefficients: (d_0,...,d_n) -> (sigma(d_n)c_0, sigma(d_0)+sigma(d_n)c_1,
        ..., sigma(d_(n-1)) + sigma(d_n)c_n).  Injective because c_0 != 0.
        """
        if y.n != self.n or y.field != self.field:
            raise FieldMismatchError("combination does not belong to this adjunction")
        ds = [c.sigma() for c in y.d]
        out = [ds[-1] * self.c[0]]
        for i in range(1, self.n + 1):
            out.append(ds[i - 1] + ds[-1] * self.c[i])
        return self.combination(out)

    def _twist_poly(self, q):
        """Image of a polynomial under the structure endomorphism."""
        if q.n != self.n or q.field != self.field:
            raise FieldMismatchError("polynomial does not belong to this adjunction")
        if self.n == 0:
            return MultiRational(q.map_coefficients(lambda c: c.sigma()))
        top = self.top_monomial
        lnum = self.shift(top).to_multipoly()  # = c_0 + c_1 y_0 + ... + c_n y_0..y_(n-1)
        dmax = max((e[self.n - 1] for e in q.terms), default=0)
        acc = MultiPoly(self.field, self.n, {})
        one = MultiPoly.constant(self.field, self.n, self.field.one)
        for e, coef in q.terms.items():
            shifted = {tuple(
                (e[i - 1] if 1 <= i < self.n else 0) for i in range(self.n)
            ): coef.sigma()}
            term = MultiPoly(self.field, self.n, shifted)
            k = e[self.n - 1]
            term = term * (lnum**k) * (top.to_multipoly() ** (dmax - k)) if dmax else term
            acc = acc + term
        return MultiRational(acc, (top,) * dmax)

    def twist(self, x):
        """The injective structure endomorphism of the localized ring.

        Extends sigma, sends y_i to y_(i+1), and folds the last variable back
        through the defining relation; denominators stay in the multiplicative
        set because each factor s maps to shift(s)/y_0.
        """
        if isinstance(x, NormCombination):
            x = MultiRational(x.to_multipoly())
        if isinstance(x, MultiPoly):
            x = MultiRational(x)
        num_img = self._twist_poly(x.numerator)
        if self.n == 0:
            sig_factors = tuple(
                self.combination([s.d[0].sigma()]) for s in x.factors
            )
            return MultiRational(num_img.numerator, num_img.factors + sig_factors)
        m = len(x.factors)
        y0 = MultiPoly.variable(self.field, self.n, 0)
        num = num_img.numerator * (y0**m) if m else num_img.numerator
        new_factors = tuple(self.shift(s) for s in x.factors)
        return MultiRational(num, num_img.factors + new_factors)

    # -- norms and evaluation ----------------------------------------------

    def root_norm(self, i):
        """N_i of the adjoined root, with sigma taken to be the twist."""
        acc = self.constant(self.field.one)
        r = self.root
        for _ in range(i):
            acc = self.twist(acc) * r
        return acc

    def eval_skew(self, q):
        """Skew evaluation of a polynomial over K at the adjoined root."""
        if q.field != self.field:
            raise FieldMismatchError("polynomial over a different field")
        acc = self.constant(self.field.zero)
        norm = self.constant(self.field.one)
        r = self.root
        for i, coef in enumerate(q.coeffs):
            if i:
                norm = self.twist(norm) * r
            if not coef.is_zero():
                acc = acc + norm * coef
        return acc

    # -- verification -------------------------------------------------------

    def verify_root(self):
        """Check that the adjoined root is a root, and a minimal one.

        The defining polynomial must evaluate to exact symbolic zero, and the
        norms N_0..N_n of the root must be the distinct monomials
        1, y_0, y_0y_1, ...; distinct monomials are K-linearly independent, so
        no monic annihilator of degree <= n can exist.
        """
        value = self.eval_skew(self.poly)
        norms = tuple(self.root_norm(i) for i in range(self.n + 1))
        expected = []
        for i in range(self.n + 1):
            e = tuple(1 if j < i else 0 for j in range(self.n))
            expected.append(MultiRational(self.poly_of({e: self.field.one})))
        if self.n == 0:
            monomials_ok = True  # degenerate: the root is a field constant
        else:
            monomials_ok = all(
                nm.numerator == ex.numerator and not nm.factors
                for nm, ex in zip(norms, expected)
            )
        ok = value.is_zero() and monomials_ok
        detail = "root verified" if ok else "verification failed"
        return RootVerification(ok, value, norms, detail)

    def check_specialization(self, a, rng=None, samples=25):
        """Validate the evaluation map y_0 -> a into a concrete extension field.

        ``a`` lives in a shipped sigma-field extending the coefficient field;
        the caller asserts the defining polynomial is its minimal polynomial.
        The map sends y_i to sigma^i(a) and coefficients through the canonical
        embedding.  Raises NotMinimalError when some admissible denominator
        specializes to zero (exactly the failure of minimality); checks ring
        laws and sigma-compatibility on random samples otherwise.
        """
        import random as _random

        rng = rng or _random.Random(0)
        target = a.field
        emb = embedding(self.field, target)

        images = [a.sigma(i) for i in range(self.n)]

        def spec_poly(q):
            acc = target.zero
            for e, coef in q.terms.items():
                v = emb(coef)
                for i, k in enumerate(e):
                    if k:
                        v = v * images[i] ** k
                acc = acc + v
            return acc

        def spec(x):
            num = spec_poly(x.numerator)
            den = target.one
            for s in x.factors:
                sv = spec_poly(s.to_multipoly())
                if sv.is_zero():
                    raise NotMinimalError(
                        f"admissible denominator {s} specializes to zero at {a}"
                    )
                den = den * sv
            return num * den.inverse()

        # the defining polynomial must vanish at a (minimal polynomial contract)
        pa = target.zero
        norm = target.one
        for i, coef in enumerate(self.poly.coeffs):
            if i:
                norm = norm.sigma() * a
            pa = pa + emb(coef) * norm
        if not pa.is_zero():
            raise NotMinimalError(f"{self.poly} does not vanish at {a}")
        if self.n == 0 and a != emb(self.c[0]):
            raise NotMinimalError("degree-1 specialization must send the root to c_0")

        # Every nonzero combination must stay nonzero downstairs.  A zero
        # specialization is exactly a base-field dependence among the norms
        # N_0(a)..N_n(a); decide that with coordinates when the embedding
        # supports them, and by sampling otherwise.
        norms_at_a = [target.one]
        for _ in range(self.n):
            norms_at_a.append(norms_at_a[-1].sigma() * a)
        coords = _base_coordinates(emb, norms_at_a)
        if coords is not None:
            from . import linalg

            if linalg.rank(coords) < len(norms_at_a):
                raise NotMinimalError(
                    f"a base-field combination of the norms of {a} vanishes: "
                    "the minimal polynomial has degree <= "
                    f"{self.n}"
                )
        for _ in range(samples):
            d = [self.field.random_element(rng) for _ in range(self.n + 1)]
            s = self.combination(d)
            if s.is_zero():
                continue
            if spec_poly(s.to_multipoly()).is_zero():
                raise NotMinimalError(
                    f"admissible denominator {s} specializes to zero at {a}"
                )

        def random_rational():
            terms = {}
            for _ in range(rng.randint(1, 3)):
                e = tuple(rng.randint(0, 2) for _ in range(self.n))
                terms[e] = self.field.random_element(rng)
            num = self.poly_of(terms)
            factors = []
            for _ in range(rng.randint(0, 2)):
                while True:
                    s = self.combination(
                        [self.field.random_element(rng) for _ in range(self.n + 1)]
                    )
                    if not s.is_zero():
                        factors.append(s)
                        break
            return MultiRational(num, tuple(factors))

        for _ in range(samples):
            x, y = random_rational(), random_rational()
            if spec(x + y) != spec(x) + spec(y):
                return False
            if spec(x * y) != spec(x) * spec(y):
                return False
            if spec(self.twist(x)) != spec(x).sigma():
                return False
        if spec(self.root) != a:
            return False
        return True
