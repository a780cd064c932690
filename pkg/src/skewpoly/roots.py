"""Root enumeration and counting over finite sigma-fields.

Three routes are kept deliberately independent so they can check each other:
brute-force evaluation at every field element, the fixed-field-linear kernel
for roots conjugate to 1, and (for frobenius twists) reduction to an ordinary
polynomial whose exponents are the norm exponents (p^(i*n)-1)/(p^n-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import (
    InfiniteFieldError,
    SeparabilityError,
    WrongFieldKindError,
    ZeroConstantTermError,
)
from .fields import FiniteField, conjugacy_classes, extension_field
from .ordinary import OrdinaryPolynomial, poly_gcd
from .poly import SkewPolynomial


@dataclass(frozen=True)
class RootReport:
    polynomial: SkewPolynomial
    roots: tuple
    classes_hit: int
    per_class_counts: dict

    def to_dict(self):
        return {
            "polynomial": str(self.polynomial),
            "roots": [str(r) for r in self.roots],
            "count": len(self.roots),
            "classes_hit": self.classes_hit,
            "per_class_counts": {str(k): v for k, v in self.per_class_counts.items()},
        }

    def to_text(self):
        lines = [
            f"polynomial: {self.polynomial}",
            f"roots ({len(self.roots)}): " + ", ".join(str(r) for r in self.roots),
            f"classes hit: {self.classes_hit}",
        ]
        for rep, cnt in self.per_class_counts.items():
            lines.append(f"  class of {rep}: {cnt} root(s)")
        return "\n".join(lines)


def enumerate_roots(p):
    """Exhaustive root report; the oracle every other route is checked against."""
    field = p.field
    if not field.is_finite:
        raise InfiniteFieldError("exhaustive enumeration needs a finite field")
    if p.is_zero():
        raise ValueError("every element is a root of the zero polynomial")
    roots = tuple(
        sorted(
            (a for a in field.elements() if p.eval_right(a).is_zero()),
            key=lambda e: e.sort_key(),
        )
    )
    per_class = {}
    if roots:
        rootset = set(roots)
        for cls in conjugacy_classes(field):
            hits = sum(1 for a in cls if a in rootset)
            if hits:
                per_class[cls[0]] = hits
    return RootReport(p, roots, len(per_class), per_class)


@dataclass(frozen=True)
class SemilinearKernel:
    """Solutions of sum a_i sigma^i(x) = 0, as a space over the fixed field."""

    basis: tuple
    dimension: int
    fixed_field_order: int

    @property
    def projective_count(self):
        q, d = self.fixed_field_order, self.dimension
        return (q**d - 1) // (q - 1)


def class_roots_via_kernel(p):
    """Roots of p conjugate to 1, counted through the semilinear kernel.

    The kernel is a vector space over the fixed field F; x -> sigma(x) x^(-1)
    maps its projectivization bijectively onto the roots in the class of 1,
    so the count is (|F|^dim - 1)/(|F| - 1).
    """
    fieldk = p.field
    if not fieldk.is_finite:
        raise InfiniteFieldError("kernel counting needs a finite field")
    kernel = [
        x
        for x in fieldk.elements()
        if sum(
            (c * x.sigma(i) for i, c in enumerate(p.coeffs)), start=fieldk.zero
        ).is_zero()
    ]
    fixed = fieldk.fixed_elements()
    q = len(fixed)
    # greedy basis over F: extend while the F-span grows
    basis = []
    span = {fieldk.zero}
    for x in kernel:
        if x in span or x.is_zero():
            continue
        basis.append(x)
        span = {s + c * x for s in span for c in fixed}
    dim = len(basis)
    assert len(kernel) == q**dim, "kernel is not an F-subspace (bug)"
    roots = sorted(
        {x.sigma() * x.inverse() for x in kernel if not x.is_zero()},
        key=lambda e: e.sort_key(),
    )
    kern = SemilinearKernel(tuple(basis), dim, q)
    assert len(roots) == kern.projective_count
    return kern, tuple(roots)


def _norm_exponent(p, n, i):
    return (p ** (i * n) - 1) // (p**n - 1)


def frobenius_reduce(skew_p):
    """The ordinary polynomial computing skew evaluation under a frobenius twist.

    Over GF(p^k) with sigma(a) = a^(p^n), N_i(a) = a^((p^(i*n)-1)/(p^n-1)), so
    eval_right agrees with f(x) = sum a_i x^((p^(i*n)-1)/(p^n-1)) everywhere,
    including on every extension carrying the same twist.
    """
    fieldk = skew_p.field
    if not isinstance(fieldk, FiniteField):
        raise WrongFieldKindError("frobenius reduction needs a finite field")
    p, n = fieldk.p, fieldk.frob_power
    if skew_p.is_zero():
        return OrdinaryPolynomial(fieldk, ())
    top = _norm_exponent(p, n, skew_p.degree)
    dense = [fieldk.zero] * (top + 1)
    for i, c in enumerate(skew_p.coeffs):
        if not c.is_zero():
            dense[_norm_exponent(p, n, i)] = c
    return OrdinaryPolynomial(fieldk, dense)


def closure_root_count(skew_p):
    """Number of distinct roots over the algebraic closure.

    For monic-degree-m input with nonzero constant term this is
    (p^(n*m)-1)/(p^n-1): the reduced ordinary polynomial is separable, so the
    count is its degree.  A failed separability check signals a bug, never a
    property of the input.
    """
    fieldk = skew_p.field
    if not isinstance(fieldk, FiniteField):
        raise WrongFieldKindError("closure counting needs a finite field")
    if skew_p.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    if skew_p.constant_term().is_zero():
        raise ZeroConstantTermError("constant term must be nonzero")
    f = frobenius_reduce(skew_p)
    if poly_gcd(f, f.derivative()).degree != 0:
        raise SeparabilityError(f"reduced polynomial {f} is not squarefree")
    count = f.degree
    assert count == _norm_exponent(fieldk.p, fieldk.frob_power, skew_p.degree)
    return count


@dataclass(frozen=True)
class Degree2Report:
    """Exhaustive root-count survey of degree-2 polynomials with nonzero
    constant term over one finite sigma-field."""

    field_descriptor: str
    target: int
    swept: int
    min_count: int
    max_count: int
    attains_target: bool
    histogram: dict = dc_field(default_factory=dict)

    def to_dict(self):
        return {
            "field": self.field_descriptor,
            "target": self.target,
            "swept": self.swept,
            "min_count": self.min_count,
            "max_count": self.max_count,
            "attains_target": self.attains_target,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
        }

    def to_text(self):
        hist = ", ".join(f"{k} roots: {v} polys" for k, v in sorted(self.histogram.items()))
        return (
            f"field {self.field_descriptor}: swept {self.swept} degree-2 polynomials "
            f"with nonzero constant term\n"
            f"root counts in the field: min {self.min_count}, max {self.max_count} ({hist})\n"
            f"minimum reaches target {self.target}: {self.attains_target}"
        )


def check_degree2_closedness(fieldk, target):
    """Sweep every degree-2 polynomial with nonzero constant term and report
    how many roots each has in the field (a bounded probe of c-closedness,
    never a proof)."""
    if not fieldk.is_finite:
        raise InfiniteFieldError("the sweep needs a finite field")
    units = list(fieldk.nonzero_elements())
    everything = list(fieldk.elements())
    histogram = {}
    swept = 0
    for a2 in units:
        for a1 in everything:
            for a0 in units:
                p = SkewPolynomial(fieldk, (a0, a1, a2))
                cnt = sum(1 for x in everything if p.eval_right(x).is_zero())
                histogram[cnt] = histogram.get(cnt, 0) + 1
                swept += 1
    mn, mx = min(histogram), max(histogram)
    return Degree2Report(
        fieldk.descriptor(), target, swept, mn, mx, mn >= target, histogram
    )


def roots_in_tower(p, max_extension=6):
    """Right roots of p found by scanning extension fields of growing degree.

    Returns (roots, fieldk, embedding) for the first level 1..max_extension
    where roots exist, scanning each GF(p^(k*j)) exhaustively; (, None, None)
    if none are found within the bound.
    """
    fieldk = p.field
    if not isinstance(fieldk, FiniteField):
        raise WrongFieldKindError("tower scanning needs a finite field")
    for j in range(1, max_extension + 1):
        if j == 1:
            big, emb = fieldk, None
            q = p
        else:
            big, emb = extension_field(fieldk, j)
            q = SkewPolynomial(big, tuple(emb(c) for c in p.coeffs))
        found = [a for a in big.elements() if q.eval_right(a).is_zero()]
        if found:
            return (
                tuple(sorted(found, key=lambda e: e.sort_key())),
                big,
                emb,
            )
    return (), None, None
