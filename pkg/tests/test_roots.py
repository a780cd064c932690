"""Root enumeration, kernel counting, frobenius reduction, closure counts."""

import pytest

from skewpoly import FiniteField, are_conjugate, extension_field
from skewpoly.errors import (
    InfiniteFieldError,
    WrongFieldKindError,
    ZeroConstantTermError,
)
from skewpoly.ordinary import OrdinaryPolynomial, poly_gcd
from skewpoly.pdep import minimal_polynomial
from skewpoly.poly import SkewPolynomial
from skewpoly.roots import (
    check_degree2_closedness,
    class_roots_via_kernel,
    closure_root_count,
    enumerate_roots,
    frobenius_reduce,
    roots_in_tower,
)

from conftest import rand_nonzero_poly


def test_enumerate_linear(F9, rng):
    a = F9.random_element(rng)
    report = enumerate_roots(SkewPolynomial.t_minus(a))
    assert report.roots == (a,)
    assert report.classes_hit == 1


def test_enumerate_t2_plus_1_f4(F4):
    report = enumerate_roots(SkewPolynomial(F4, (1, 0, 1)))
    assert len(report.roots) == 3
    assert set(report.roots) == set(F4.nonzero_elements())
    assert report.classes_hit == 1


def test_norm_kernel_size_f9(F9):
    # T^2 - 1: roots are the norm-one elements, p + 1 of them
    report = enumerate_roots(SkewPolynomial(F9, (-1, 0, 1)))
    assert len(report.roots) == F9.p + 1


def test_classes_hit_bound(F9, rng):
    for _ in range(80):
        p = rand_nonzero_poly(F9, rng, 4)
        if p.degree < 1:
            continue
        report = enumerate_roots(p)
        assert report.classes_hit <= p.degree


def test_enumerate_requires_finite(Qi):
    with pytest.raises(InfiniteFieldError):
        enumerate_roots(SkewPolynomial.t(Qi))


def test_kernel_route_t2_plus_1(F4):
    kern, roots = class_roots_via_kernel(SkewPolynomial(F4, (1, 0, 1)))
    assert kern.dimension == 2
    assert kern.fixed_field_order == 2
    assert kern.projective_count == 3 == len(roots)
    for x in kern.basis:
        assert (x.sigma(2) + x).is_zero()


def test_kernel_route_no_roots(F9):
    # x + sigma(x)*u has trivial kernel when the polynomial misses C(1)
    p = SkewPolynomial(F9, (1, 1))  # T + 1
    kern, roots = class_roots_via_kernel(p)
    expected = {r for r in enumerate_roots(p).roots if are_conjugate(r, F9.one)}
    assert set(roots) == expected
    assert kern.projective_count == len(expected)


def test_kernel_route_matches_brute_force(F9, rng):
    one_class = {a for a in F9.elements() if are_conjugate(a, F9.one)}
    for _ in range(200):
        p = rand_nonzero_poly(F9, rng, 4)
        if p.degree < 1:
            continue
        brute = {r for r in enumerate_roots(p).roots if r in one_class}
        kern, roots = class_roots_via_kernel(p)
        assert set(roots) == brute
        assert kern.projective_count == len(brute)


def test_frobenius_reduce_exponents(F2):
    f = frobenius_reduce(SkewPolynomial(F2, (1, 1, 1)))
    assert [c.value for c in f.coeffs] == [(1,), (1,), (), (1,)]  # x^3 + x + 1
    assert f.degree == 3


def test_frobenius_reduce_constant(F9):
    c = F9.generator
    f = frobenius_reduce(SkewPolynomial(F9, (c,)))
    assert f.degree == 0 and f.coeffs[0] == c


def test_frobenius_reduce_wrong_field(Qi):
    with pytest.raises(WrongFieldKindError):
        frobenius_reduce(SkewPolynomial.t(Qi))


def test_frobenius_reduce_agrees_on_extension(F2, rng):
    big, emb = extension_field(F2, 6)
    for _ in range(50):
        p = rand_nonzero_poly(F2, rng, 3)
        f = frobenius_reduce(p)
        pb = SkewPolynomial(big, tuple(emb(c) for c in p.coeffs))
        fb = OrdinaryPolynomial(big, [emb(c) for c in f.coeffs])
        for a in big.elements():
            assert pb.eval_right(a) == fb.eval(a)


def test_frobenius_reduce_agrees_with_eval(rng):
    for field in (FiniteField(3, 2), FiniteField(2, 4, frob=2)):
        for _ in range(40):
            p = rand_nonzero_poly(field, rng, 3)
            f = frobenius_reduce(p)
            for a in field.elements():
                assert p.eval_right(a) == f.eval(a)


def test_closure_count_values(F2, F3):
    assert closure_root_count(SkewPolynomial(F2, (1, 1, 1))) == 3
    assert closure_root_count(SkewPolynomial(F3, (1, 0, 1))) == 4
    assert closure_root_count(SkewPolynomial(F3, (2, 1))) == 1


def test_closure_count_law_random(rng):
    for p_, n in ((2, 1), (3, 1), (2, 2), (3, 2)):
        field = FiniteField(p_, 2 * n, frob=n)
        for _ in range(20):
            poly = rand_nonzero_poly(field, rng, 3)
            if poly.degree < 1 or poly.constant_term().is_zero():
                continue
            m = poly.degree
            assert closure_root_count(poly) == (p_ ** (n * m) - 1) // (p_**n - 1)


def test_closure_count_rejects_zero_constant(F3):
    with pytest.raises(ZeroConstantTermError):
        closure_root_count(SkewPolynomial(F3, (0, 1, 1)))


def test_separability_of_reduction(F9, rng):
    for _ in range(60):
        p = rand_nonzero_poly(F9, rng, 3)
        if p.degree < 1 or p.constant_term().is_zero():
            continue
        f = frobenius_reduce(p)
        assert poly_gcd(f, f.derivative()).degree == 0


def test_degree2_sweep_trivial_sigma(F3):
    report = check_degree2_closedness(F3, 2)
    assert report.swept == 2 * 3 * 2  # units x all x units
    assert report.min_count == 0
    # the classical double root: T^2 - 2T + 1 has exactly one root
    squared = SkewPolynomial(F3, (1, -2, 1))
    assert len(enumerate_roots(squared).roots) == 1
    assert 1 in report.histogram


def test_degree2_sweep_f4(F4):
    report = check_degree2_closedness(F4, 3)
    assert report.swept == 36
    assert report.max_count == 3  # consistent with the class-of-1 count law
    assert not report.attains_target
    # cross-check: every count agrees with brute force per polynomial
    units = list(F4.nonzero_elements())
    redo = {}
    for a2 in units:
        for a1 in F4.elements():
            for a0 in units:
                p = SkewPolynomial(F4, (a0, a1, a2))
                cnt = len(enumerate_roots(p).roots)
                redo[cnt] = redo.get(cnt, 0) + 1
    assert redo == report.histogram


def test_vanishing_polynomial_of_finite_field(F9):
    # finite sigma-fields do admit nonzero polynomials vanishing everywhere
    result = minimal_polynomial(list(F9.elements()))
    p = result.minimal_poly
    assert not p.is_zero()
    assert all(p.eval_right(a).is_zero() for a in F9.elements())
    # ... and then p + 1 has no roots at all
    q = p + SkewPolynomial.one(F9)
    assert not enumerate_roots(q).roots


def test_roots_in_tower(F9):
    p = SkewPolynomial(F9, (1, 0, 1))  # T^2 + 1 has roots already in F9
    roots, fieldk, emb = roots_in_tower(p)
    assert fieldk == F9 and len(roots) == 4
    # a polynomial with no roots downstairs picks them up upstairs
    vanish = minimal_polynomial(list(F9.elements())).minimal_poly
    rootless = vanish + SkewPolynomial.one(F9)
    roots, fieldk, emb = roots_in_tower(rootless, max_extension=2)
    if fieldk is not None:
        assert fieldk.k == 4
        for r in roots:
            lifted = SkewPolynomial(fieldk, tuple(emb(c) for c in rootless.coeffs))
            assert lifted.eval_right(r).is_zero()
