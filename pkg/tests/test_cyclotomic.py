import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orbihodge.cyclotomic import (
    Cyclotomic,
    CyclotomicError,
    cyc_make,
    cyclotomic_polynomial,
    root_of_unity_exponent,
    zeta,
)


def numeric(x: Cyclotomic) -> complex:
    """Independent floating-point embedding zeta_M -> exp(2 pi i / M)."""
    w = cmath.exp(2j * cmath.pi / x.order)
    return sum(float(c) * w**j for j, c in enumerate(x.coeffs))


orders = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 20, 24])
small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cyclotomics(draw, order=None):
    m = order if order is not None else draw(orders)
    return Cyclotomic.from_rationals(m, draw(st.lists(small, min_size=m, max_size=m)))


@st.composite
def triples(draw):
    m = draw(orders)
    return tuple(draw(cyclotomics(order=m)) for _ in range(3))


# -- examples ---------------------------------------------------------------

def test_basis_element():
    i = cyc_make(4, [0, 1, 0, 0])
    assert i == zeta(4)
    assert str(i) == "z4"


def test_zeta2_is_minus_one_across_orders():
    assert cyc_make(2, [0, 1]) == cyc_make(1, [-1])
    assert hash(cyc_make(2, [0, 1])) == hash(cyc_make(1, [-1]))


def test_minimal_polynomial_relation():
    assert cyc_make(3, [-1, -1, -1]).is_zero()
    assert cyc_make(3, [-1, -1, -1]) == Cyclotomic.rational(0)


def test_i_squared():
    assert zeta(4) * zeta(4) == -1


def test_inverse_of_zeta3():
    assert zeta(3).inverse() == zeta(3, 2)


def test_additive_inverse():
    assert (zeta(6) + (-zeta(6))).is_zero()


def test_rendering():
    assert str(cyc_make(4, [Fraction(1, 2), Fraction(-1, 2), 0, 0])) == "1/2 + (-1/2)*z4"
    assert str(Cyclotomic.rational(0, 7)) == "0"


def test_bad_order():
    with pytest.raises(ValueError):
        cyc_make(0, [])
    with pytest.raises(ValueError):
        cyc_make(-3, [1, 2, 3])
    with pytest.raises(ValueError):
        cyc_make(3, [1, 2])


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.rational(0, 5).inverse()


def test_order_limit():
    with pytest.raises(CyclotomicError):
        zeta(359) * zeta(7)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # degree is Euler's phi
    for m, phi in [(7, 6), (9, 6), (15, 8), (20, 8), (24, 8), (30, 8)]:
        assert len(cyclotomic_polynomial(m)) - 1 == phi


def test_root_of_unity_exponent():
    assert root_of_unity_exponent(-zeta(3)) == (6, 5)
    assert root_of_unity_exponent(Cyclotomic.rational(1)) == (1, 0)
    with pytest.raises(ValueError):
        root_of_unity_exponent(Cyclotomic.rational(2))


# -- properties -------------------------------------------------------------

@given(triples())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(cyclotomics())
@settings(max_examples=60, deadline=None)
def test_inverse_property(a):
    if a.is_zero():
        return
    assert a * a.inverse() == 1


@given(cyclotomics(), cyclotomics())
@settings(max_examples=60, deadline=None)
def test_matches_numeric_embedding(a, b):
    assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-8
    assert abs(numeric(a + b) - (numeric(a) + numeric(b))) < 1e-8


@given(cyclotomics())
@settings(max_examples=60, deadline=None)
def test_conjugation(a):
    assert a.conjugate().conjugate() == a
    assert abs(numeric(a.conjugate()) - numeric(a).conjugate()) < 1e-8
    n = a * a.conjugate()
    # real: fixed by the symmetry zeta -> zeta^-1
    assert n.conjugate() == n


@given(cyclotomics(), st.sampled_from([2, 3, 5]))
@settings(max_examples=60, deadline=None)
def test_lift_roundtrip(a, k):
    lifted = a.lift(k * a.order)
    assert lifted == a
    assert hash(lifted) == hash(a)
    assert lifted * a.inverse() == 1 if a else lifted.is_zero()
