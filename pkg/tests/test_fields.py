"""Field arithmetic, sigma, norms, and conjugacy."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewpoly import (
    FiniteField,
    PrimeField,
    are_conjugate,
    conjugacy_classes,
    conjugate,
    embedding,
    extension_field,
    parse_descriptor,
    sigma_norm,
    standard_fields,
)
from skewpoly.errors import (
    FieldMismatchError,
    InfiniteFieldError,
    ZeroConjugatorError,
)


def test_sigma_on_rational_functions(Qx):
    x = Qx.x
    assert str((x + 1).sigma()) == "(x+1)/x"
    assert (x + 1).sigma() == (x + 1) / x
    assert x.sigma() == x.inverse()


def test_sigma_on_gaussians(Qi):
    assert Qi.from_parts(2, 3).sigma() == Qi.from_parts(2, -3)
    assert Qi.i.sigma() == -Qi.i
    assert Qi.i.sigma(-1) == -Qi.i  # involution


def test_sigma_inverse_on_rationals(Q):
    a = Q.element(7)
    assert a.sigma() == a and a.sigma(-1) == a


def test_frobenius_on_f4(F4):
    u = F4.generator
    assert u.sigma() == u * u == u + 1
    assert (u + 1).sigma(-1) == u
    assert u.sigma().sigma() == u  # order two


def test_norm_base_cases(Q, F9):
    assert sigma_norm(0, Q.element(5)) == Q.one
    assert sigma_norm(0, F9.zero) == F9.one
    a = F9.generator
    assert sigma_norm(1, a) == a
    assert sigma_norm(2, a) == a.sigma() * a


def test_norm_frobenius_exponent_law(F4, F9):
    for field in (F4, F9):
        p, n = field.p, field.frob_power
        for a in field.nonzero_elements():
            for i in range(6):
                e = (p ** (i * n) - 1) // (p**n - 1)
                assert sigma_norm(i, a) == a**e


def test_norm_of_x_plus_one_law(Qx):
    # N_i(x+1) = (x+1)^i / x^floor(i/2), an exact rational-function identity
    x = Qx.x
    for i in range(11):
        assert sigma_norm(i, x + 1) == (x + 1) ** i / x ** (i // 2)


@given(
    a_num=st.integers(-9, 9),
    a_den=st.integers(1, 9),
    b_num=st.integers(-9, 9),
    b_den=st.integers(1, 9),
    i=st.integers(0, 5),
    j=st.integers(0, 5),
)
@settings(max_examples=200, deadline=None)
def test_norm_identities_gaussian(a_num, a_den, b_num, b_den, i, j):
    Qi = parse_descriptor("qi")
    a = Qi.from_parts(Fraction(a_num, a_den), Fraction(b_num, b_den))
    b = Qi.from_parts(Fraction(b_num, b_den), Fraction(a_num, a_den))
    assert sigma_norm(i + j, a) == sigma_norm(j, a).sigma(i) * sigma_norm(i, a)
    assert sigma_norm(i, a * b) == sigma_norm(i, a) * sigma_norm(i, b)
    if not a.is_zero():
        assert sigma_norm(i, conjugate(b, a)) == a.sigma(i) * sigma_norm(i, b) * a.inverse()


def test_norm_identities_all_fields(rng):
    for field in standard_fields():
        for _ in range(200):
            a = field.random_element(rng)
            b = field.random_element(rng)
            i, j = rng.randint(0, 4), rng.randint(0, 4)
            assert sigma_norm(i + j, a) == sigma_norm(j, a).sigma(i) * sigma_norm(i, a)
            assert sigma_norm(i, a * b) == sigma_norm(i, a) * sigma_norm(i, b)
            if not a.is_zero():
                lhs = sigma_norm(i, conjugate(b, a))
                assert lhs == a.sigma(i) * sigma_norm(i, b) * a.inverse()


def test_fixed_elements_power_norm(F9):
    # sigma(c) = c implies N_i(c) = c^i
    for c in F9.fixed_elements():
        for i in range(5):
            assert sigma_norm(i, c) == c**i


def test_sigma_roundtrip_sweep(rng):
    for field in standard_fields():
        for _ in range(1000):
            a = field.random_element(rng)
            assert a.sigma().sigma(-1) == a
            assert a.sigma(-1).sigma() == a


def test_conjugate_basics(F9):
    b = F9.generator
    assert conjugate(b, F9.one) == b
    assert conjugate(F9.zero, b).is_zero()
    assert conjugate(F9.one, b) == b**2  # sigma(x) x^(-1) = x^(p-1)
    with pytest.raises(ZeroConjugatorError):
        conjugate(b, F9.zero)


def test_conjugation_composes(rng):
    # conjugating by x then y is conjugating by y*x
    for field in standard_fields():
        for _ in range(200):
            b = field.random_element(rng)
            x = field.random_nonzero(rng)
            y = field.random_nonzero(rng)
            assert conjugate(conjugate(b, x), y) == conjugate(b, y * x)


def test_conjugacy_classes_f4(F4):
    classes = conjugacy_classes(F4)
    assert [len(c) for c in classes] == [1, 3]
    assert classes[0] == (F4.zero,)


def test_conjugacy_classes_f9(F9):
    classes = conjugacy_classes(F9)
    assert sorted(len(c) for c in classes) == [1, 4, 4]


def test_conjugacy_classes_trivial_sigma(F5):
    # identity twist: every class is a singleton
    classes = conjugacy_classes(F5)
    assert len(classes) == 5 and all(len(c) == 1 for c in classes)


def test_conjugacy_classes_infinite_field_raises(Qi):
    with pytest.raises(InfiniteFieldError):
        conjugacy_classes(Qi)


def test_are_conjugate_matches_classes(F9, rng):
    classes = conjugacy_classes(F9)
    lookup = {}
    for idx, cls in enumerate(classes):
        for e in cls:
            lookup[e] = idx
    for _ in range(200):
        a = F9.random_element(rng)
        b = F9.random_element(rng)
        assert are_conjugate(a, b) == (lookup[a] == lookup[b])


def test_are_conjugate_gaussian_norm_certificate(Qi):
    # sigma(a)a is a complete invariant on Q(i)*
    a = Qi.from_parts(3, 4)
    b = Qi.from_parts(5, 0)  # both have norm 25
    assert are_conjugate(a, b)
    assert not are_conjugate(a, Qi.from_parts(1, 1))
    assert are_conjugate(Qi.zero, Qi.zero)
    assert not are_conjugate(Qi.zero, a)


def test_are_conjugate_trivial_sigma(Q):
    assert are_conjugate(Q.element(3), Q.element(3))
    assert not are_conjugate(Q.element(3), Q.element(-3))


def test_field_descriptor_roundtrip():
    for field in standard_fields():
        assert parse_descriptor(field.descriptor()) == field


def test_prime_field_is_k1_finite_field():
    F7 = PrimeField(7)
    assert F7.k == 1 and F7.order() == 7
    assert F7.sigma_is_identity
    assert F7.element(10) == F7.element(3)


def test_finite_field_modulus_checked():
    with pytest.raises(ValueError):
        FiniteField(2, 2, modulus=(0, 0, 1))  # x^2 is reducible
    with pytest.raises(ValueError):
        FiniteField(4)  # not prime


def test_field_mismatch(Q, Qi):
    with pytest.raises(FieldMismatchError):
        Q.element(1) + Qi.element(1)


def test_fixed_field_order(F4, F9):
    assert F4.fixed_field_order() == 2 == len(F4.fixed_elements())
    assert F9.fixed_field_order() == 3 == len(F9.fixed_elements())
    F16_frob2 = FiniteField(2, 4, frob=2)
    assert F16_frob2.fixed_field_order() == 4 == len(F16_frob2.fixed_elements())


def test_embedding_is_sigma_homomorphism(F9, rng):
    big, emb = extension_field(F9, 2)
    assert big.order() == 81
    for _ in range(50):
        a, b = F9.random_element(rng), F9.random_element(rng)
        assert emb(a + b) == emb(a) + emb(b)
        assert emb(a * b) == emb(a) * emb(b)
        assert emb(a.sigma()) == emb(a).sigma()
    assert emb(F9.one) == big.one


def test_rationals_embed(Q, Qi, Qx):
    for target in (Qi, Qx):
        emb = embedding(Q, target)
        half = Q.element(Fraction(1, 2))
        assert emb(half) + emb(half) == target.one


def test_element_formatting(Qi, Qx, F9):
    assert str(Qi.from_parts(2, -3)) == "2-3i"
    assert str(Qi.from_parts(0, 1)) == "i"
    assert str(Qi.from_parts(Fraction(1, 2), Fraction(3, 4))) == "1/2+(3/4)i"
    assert str((Qx.x + 1) / Qx.x) == "(x+1)/x"
    assert str(F9.from_coeffs((1, 2))) == "2u+1"
    assert str(F9.zero) == "0"
