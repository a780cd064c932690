"""The twisted Hadamard algebra: coefficientwise products of regular series.

The algebra homomorphism at the heart of this module sends the norm sequence
(N_0(a), N_1(a), ...) of a nonzero element to the series expansion of
(1 - a*T)^(-1); pointwise products of norm sequences then match Hadamard
products of series, because N_i(ab) = N_i(a) N_i(b).  Everything is asserted
at a finite, recorded precision.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NegativeValuationError, ZeroGeneratorError
from .fracfield import OreFraction, TruncatedSeries, pfd
from .fields import sigma_norm


@dataclass(frozen=True)
class NormVector:
    """A truncation of the norm sequence of one generator."""

    generator: object
    coeffs: tuple

    @property
    def precision(self):
        return len(self.coeffs)

    def pointwise(self, other):
        """Coefficientwise product; equals the norm vector of the product
        of the generators, truncated to the shorter length."""
        n = min(len(self.coeffs), len(other.coeffs))
        return NormVector(
            self.generator * other.generator,
            tuple(a * b for a, b in zip(self.coeffs[:n], other.coeffs[:n])),
        )


def norm_vector(a, precision=64):
    if a.is_zero():
        raise ZeroGeneratorError("norm vectors are indexed by nonzero elements")
    coeffs = [a.field.one]
    for _ in range(precision - 1):
        coeffs.append(coeffs[-1].sigma() * a)
    return NormVector(a, tuple(coeffs))


def hadamard_product(s, t):
    """Coefficientwise product of two series of nonnegative valuation."""
    if s.field != t.field:
        raise ValueError("series over different fields")
    if (s.coeffs and s.valuation < 0) or (t.coeffs and t.valuation < 0):
        raise NegativeValuationError("the Hadamard product needs regular series")
    if s.is_zero() or t.is_zero():
        return TruncatedSeries(s.field, 0, ())
    hi = min(s.known_upto, t.known_upto)
    return TruncatedSeries(
        s.field, 0, (s.coeff_at(e) * t.coeff_at(e) for e in range(hi))
    )


def norm_combination_series(terms, precision=64, field=None):
    """Series image of a linear combination of norm vectors.

    ``terms`` is a list of (b_j, a_j); the result expands
    sum b_j (1 - a_j T)^(-1), i.e. coefficient i is sum b_j N_i(a_j).
    """
    terms = list(terms)
    if not terms and field is None:
        raise ValueError("an empty combination needs an explicit field")
    field = field or terms[0][0].field
    coeffs = [field.zero] * precision
    for b, a in terms:
        if a.is_zero():
            raise ZeroGeneratorError("generators must be nonzero")
        norm = field.one
        for i in range(precision):
            if i:
                norm = norm.sigma() * a
            coeffs[i] = coeffs[i] + b * norm
    return TruncatedSeries(field, 0, coeffs)


@dataclass(frozen=True)
class NormRecovery:
    """Eventual norm-combination law of a rational series.

    Coefficient i of the series equals sum b_j N_i(c_j) for every
    i >= threshold; the combination was checked against the exact series to
    threshold + check_window.
    """

    terms: tuple
    threshold: int
    field: object
    tower_level: int

    def to_dict(self):
        return {
            "field": self.field.descriptor(),
            "tower_level": self.tower_level,
            "threshold": self.threshold,
            "terms": [[str(b), str(c)] for b, c in self.terms],
        }


def recover_norm_combination(x, tower_bound=6, check_window=32):
    """Write the series tail of a fraction as a norm-vector combination.

    Decomposes x by partial fractions; the polynomial part and the T^(-i)
    poles only touch finitely many coefficients, so beyond them coefficient i
    is exactly sum b_j N_i(c_j) over the simple terms.
    """
    result = pfd(x, tower_bound=tower_bound)
    p0 = result.polynomial_part
    threshold = 0 if p0.is_zero() else p0.degree + 1
    # the pole part lives at negative exponents; it never moves the threshold
    target = x
    if result.tower_level > 1:
        from .fields import extension_field
        from .fracfield import _embed_fraction

        _, emb = extension_field(x.field, result.tower_level)
        target = _embed_fraction(x, emb)
    # enough terms to cover [threshold, threshold + window) past any pole part
    depth = threshold + check_window + len(result.principal) + 1
    series = target.series(precision=depth)
    combo = norm_combination_series(
        result.terms, precision=threshold + check_window, field=result.field
    )
    for i in range(threshold, threshold + check_window):
        if series.coeff_at(i) != combo.coeff_at(i):
            raise AssertionError("norm recovery failed its own verification")
    return NormRecovery(result.terms, threshold, result.field, result.tower_level)
