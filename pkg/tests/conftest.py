import random

import pytest

from skewpoly import (
    FiniteField,
    GaussianRationals,
    RationalFunctionField,
    Rationals,
)
from skewpoly.poly import SkewPolynomial


@pytest.fixture
def rng():
    return random.Random(20240811)


@pytest.fixture(scope="session")
def Q():
    return Rationals()


@pytest.fixture(scope="session")
def Qi():
    return GaussianRationals()


@pytest.fixture(scope="session")
def Qx():
    return RationalFunctionField()


@pytest.fixture(scope="session")
def F2():
    return FiniteField(2)


@pytest.fixture(scope="session")
def F3():
    return FiniteField(3)


@pytest.fixture(scope="session")
def F4():
    return FiniteField(2, 2)


@pytest.fixture(scope="session")
def F5():
    return FiniteField(5)


@pytest.fixture(scope="session")
def F9():
    return FiniteField(3, 2)


def rand_poly(field, rng, maxdeg=4, monic=False, nonzero=False):
    d = rng.randint(0, maxdeg)
    cs = [field.random_element(rng) for _ in range(d + 1)]
    if monic:
        cs[-1] = field.one
    elif cs[-1].is_zero():
        if nonzero or rng.random() < 0.8:
            cs[-1] = field.one
    p = SkewPolynomial(field, cs)
    if nonzero and p.is_zero():
        return SkewPolynomial.one(field)
    return p


def rand_nonzero_poly(field, rng, maxdeg=4):
    return rand_poly(field, rng, maxdeg, nonzero=True)
