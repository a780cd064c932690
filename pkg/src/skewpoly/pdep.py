"""P-dependence: sigma-Vandermonde rank, minimal polynomials, and friends.

The rank of a finite set S is the degree of the unique monic polynomial
vanishing on S, and equals the rank of the matrix whose rows are the
sigma-norms N_j of the elements.  Everything here is exact; determinants and
ranks come from plain elimination in linalg.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import ConjugatePairError, NotPIndependentError, ZeroElementError
from .fields import are_conjugate, conjugate, sigma_norm
from .poly import SkewPolynomial


def vandermonde(elems, nrows=None):
    """Rows (N_j(a_1), ..., N_j(a_n)) for j = 0..nrows-1 (default square)."""
    elems = list(elems)
    n = len(elems)
    nrows = n if nrows is None else nrows
    rows = []
    if nrows:
        current = [a.field.one for a in elems]
        rows.append(list(current))
        for _ in range(nrows - 1):
            current = [c.sigma() * a for c, a in zip(current, elems)]
            rows.append(list(current))
    return rows


def left_vandermonde(elems, nrows=None):
    """Same, with the mirror norms N_(-j) (sigma must be an automorphism)."""
    elems = list(elems)
    n = len(elems)
    nrows = n if nrows is None else nrows
    rows = []
    if nrows:
        current = [a.field.one for a in elems]
        rows.append(list(current))
        for _ in range(nrows - 1):
            current = [c.sigma(-1) * a for c, a in zip(current, elems)]
            rows.append(list(current))
    return rows


def vandermonde_rank(elems):
    """Rank of the square sigma-Vandermonde matrix = rank of the set."""
    return linalg.rank(vandermonde(elems))


def left_vandermonde_rank(elems):
    return linalg.rank(left_vandermonde(elems))


def is_p_independent(elems):
    elems = list(elems)
    return vandermonde_rank(elems) == len(elems)


@dataclass(frozen=True)
class AlgebraicSet:
    """A finite set with its monic minimal polynomial and rank."""

    elements: tuple
    minimal_poly: SkewPolynomial

    @property
    def rank(self):
        d = self.minimal_poly.degree
        return 0 if d == float("-inf") else d


def minimal_polynomial(elems):
    """Minimal monic polynomial of a finite set, built incrementally.

    Extending by a: if the current P already kills a, keep it; otherwise
    multiply by T - sigma(P(a)) a P(a)^(-1) on the left (the product formula
    makes the new polynomial vanish at a without disturbing the old zeros).
    """
    elems = tuple(elems)
    field = elems[0].field if elems else None
    if field is None:
        raise ValueError("empty set needs a field; use minimal_polynomial_over")
    return minimal_polynomial_over(field, elems)


def minimal_polynomial_over(field, elems):
    p = SkewPolynomial.one(field)
    for a in elems:
        v = p.eval_right(a)
        if not v.is_zero():
            p = SkewPolynomial.t_minus(conjugate(a, v)) * p
    return AlgebraicSet(tuple(elems), p)


def _square_vandermonde_det(elems):
    return linalg.det(vandermonde(elems), field=elems[0].field if elems else None)


def minpoly_eval_det(elems, a):
    """Value of the minimal polynomial at ``a`` as a Vandermonde determinant ratio.

    Requires a P-independent tuple; equals minimal_polynomial(...).eval_right(a).
    """
    elems = list(elems)
    d = _square_vandermonde_det(elems)
    if d.is_zero():
        raise NotPIndependentError("determinant route needs a P-independent set")
    big = linalg.det(vandermonde(elems + [a]))
    return big * d.inverse()


def minpoly_coeffs_vieta(elems):
    """Coefficients of the minimal polynomial by signed Vandermonde minors.

    b_i is (-1)^(n+i)/det V times the tall Vandermonde with row N_i removed;
    the result is monic of degree n and must agree with minimal_polynomial.
    """
    elems = list(elems)
    n = len(elems)
    field = elems[0].field
    d = _square_vandermonde_det(elems)
    if d.is_zero():
        raise NotPIndependentError("Vieta formulas need a P-independent set")
    tall = vandermonde(elems, nrows=n + 1)
    d_inv = d.inverse()
    coeffs = []
    for i in range(n + 1):
        minor = linalg.det([tall[j] for j in range(n + 1) if j != i], field=field)
        b = minor * d_inv
        coeffs.append(b if (n + i) % 2 == 0 else -b)
    return SkewPolynomial(field, coeffs)


def interpolate(elems, values):
    """The unique polynomial of degree < n hitting the prescribed values.

    Built from the punctured minimal polynomials P_i of S minus a_i as
    sum of b_i * P_i(a_i)^(-1) * P_i.
    """
    elems = list(elems)
    values = list(values)
    if len(elems) != len(values):
        raise ValueError("need one value per interpolation node")
    if not is_p_independent(elems):
        raise NotPIndependentError("interpolation nodes must be P-independent")
    field = elems[0].field
    acc = SkewPolynomial.zero(field)
    for i, (a, b) in enumerate(zip(elems, values)):
        punctured = elems[:i] + elems[i + 1:]
        p_i = minimal_polynomial_over(field, punctured).minimal_poly
        acc = acc + (b * p_i.eval_right(a).inverse()) * p_i
    return acc


def bray_whaples(elems):
    """Monic polynomial of degree n whose full root set is the given
    pairwise non-sigma-conjugate n elements."""
    elems = list(elems)
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            if are_conjugate(elems[i], elems[j]):
                raise ConjugatePairError(
                    f"{elems[i]} and {elems[j]} are sigma-conjugate"
                )
    p = minimal_polynomial(elems).minimal_poly if elems else None
    if p is None:
        raise ValueError("need at least one element")
    assert p.degree == len(elems), "nonconjugate elements must be P-independent"
    return p


def dual_set(elems):
    """sigma^(-1)(a^(-1)) for each a: the left-rank mirror of a right set."""
    out = []
    for a in elems:
        if a.is_zero():
            raise ZeroElementError("dual set is defined on nonzero elements")
        out.append(a.inverse().sigma(-1))
    return out


def dual_left_rank(elems):
    """Left rank of the dual set; equals the right rank of the input."""
    return left_vandermonde_rank(dual_set(elems))
