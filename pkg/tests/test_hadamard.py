"""Hadamard products, the norm-to-series homomorphism, and recovery."""

import pytest

from skewpoly.errors import NegativeValuationError, ZeroGeneratorError
from skewpoly.fields import sigma_norm
from skewpoly.fracfield import OreFraction, TruncatedSeries, geometric_fraction
from skewpoly.hadamard import (
    hadamard_product,
    norm_combination_series,
    norm_vector,
    recover_norm_combination,
)
from skewpoly.poly import SkewPolynomial

from conftest import rand_poly
from test_fracfield import built_fraction, independent_elements


def test_norm_vector_recurrence(F9, rng):
    a = F9.random_nonzero(rng)
    nv = norm_vector(a, 16)
    for i in range(15):
        assert nv.coeffs[i + 1] == nv.coeffs[i].sigma() * a
    with pytest.raises(ZeroGeneratorError):
        norm_vector(F9.zero, 4)


def test_alpha_of_norm_vector(F9, rng):
    for _ in range(10):
        a = F9.random_nonzero(rng)
        s = norm_combination_series([(F9.one, a)], precision=64)
        geom = geometric_fraction(F9.one, a).series(precision=64)
        assert s.agrees_with(geom)
        for i in range(64):
            assert s.coeff_at(i) == sigma_norm(i, a)


def test_alpha_empty_combination(F9):
    s = norm_combination_series([], precision=8, field=F9)
    assert s.is_zero()


def test_alpha_rejects_zero_generator(F9):
    with pytest.raises(ZeroGeneratorError):
        norm_combination_series([(F9.one, F9.zero)], precision=8)


def test_hadamard_identity_and_zero(F9, rng):
    ones = geometric_fraction(F9.one, F9.one).series(32)
    x = OreFraction.from_polynomial(rand_poly(F9, rng, 4)).series(32)
    assert hadamard_product(x, ones).agrees_with(x)
    zero = TruncatedSeries(F9, 0, ())
    assert hadamard_product(x, zero).is_zero()


def test_hadamard_of_geometrics(F9, rng):
    # (1-aT)^{-1} ⊙ (1-bT)^{-1} = (1-abT)^{-1}: the N_i(ab) = N_i(a)N_i(b) law
    for _ in range(30):
        a = F9.random_nonzero(rng)
        b = F9.random_nonzero(rng)
        lhs = hadamard_product(
            geometric_fraction(F9.one, a).series(64),
            geometric_fraction(F9.one, b).series(64),
        )
        rhs = geometric_fraction(F9.one, a * b).series(64)
        assert lhs.agrees_with(rhs)


def test_hadamard_rejects_negative_valuation(F9):
    s = OreFraction(SkewPolynomial.one(F9), SkewPolynomial.t(F9)).series(8)
    t = geometric_fraction(F9.one, F9.one).series(8)
    with pytest.raises(NegativeValuationError):
        hadamard_product(s, t)


def test_hadamard_algebra_laws(F9, rng):
    def regular_series(rng):
        num = rand_poly(F9, rng, 3)
        den = SkewPolynomial(F9, (F9.one, F9.random_element(rng), F9.random_element(rng)))
        return OreFraction(num, den).series(24)

    for _ in range(60):
        x, y, z = (regular_series(rng) for _ in range(3))
        assert hadamard_product(x, y).agrees_with(hadamard_product(y, x))
        assert hadamard_product(hadamard_product(x, y), z).agrees_with(
            hadamard_product(x, hadamard_product(y, z))
        )
        assert hadamard_product(x, y + z).agrees_with(
            hadamard_product(x, y) + hadamard_product(x, z)
        )


def test_alpha_multiplicative_on_norm_vectors(F9, rng):
    for _ in range(100):
        a = F9.random_nonzero(rng)
        b = F9.random_nonzero(rng)
        prod = norm_vector(a, 64).pointwise(norm_vector(b, 64))
        via_alpha = norm_combination_series([(F9.one, prod.generator)], precision=64)
        assert tuple(via_alpha.coeff_at(i) for i in range(64)) == prod.coeffs
        had = hadamard_product(
            norm_combination_series([(F9.one, a)], 64),
            norm_combination_series([(F9.one, b)], 64),
        )
        assert via_alpha.agrees_with(had)


def test_alpha_injective_on_independent_combinations(F9, rng):
    # a nonzero combination over P-independent generators has a nonzero series
    for _ in range(40):
        n = rng.randint(1, 4)
        cs = independent_elements(F9, rng, n)
        bs = [F9.random_element(rng) for _ in range(n)]
        if all(b.is_zero() for b in bs):
            bs[0] = F9.one
        s = norm_combination_series(list(zip(bs, cs)), precision=n)
        assert not s.is_zero()


def test_recover_geometric(F9):
    a = F9.generator
    rec = recover_norm_combination(geometric_fraction(F9.one, a))
    assert rec.terms == ((F9.one, a),)
    assert rec.threshold == 0


def test_recover_round_trip(F9, rng):
    for _ in range(25):
        x, poly, pole, _ = built_fraction(F9, rng, nterms=rng.randint(1, 3))
        rec = recover_norm_combination(x)
        # the threshold is exactly where the polynomial part stops
        assert rec.threshold == (0 if poly.is_zero() else poly.degree + 1)
        depth = rec.threshold + 32
        combo = norm_combination_series(rec.terms, precision=depth, field=F9)
        series = x.series(precision=depth + len(pole) + 1)
        for i in range(rec.threshold, depth):
            assert series.coeff_at(i) == combo.coeff_at(i)


def test_recover_threshold_past_finite_parts(F9, rng):
    x, _, _, built = built_fraction(F9, rng, nterms=2, with_poly=False, with_pole=False)
    poly = SkewPolynomial(F9, (2, 1, 1))
    xx = x + OreFraction.from_polynomial(poly) + OreFraction(
        SkewPolynomial.one(F9), SkewPolynomial.t(F9, 2)
    )
    rec = recover_norm_combination(xx)
    assert rec.threshold == poly.degree + 1
