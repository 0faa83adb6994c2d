import pytest
from hypothesis import given, settings, strategies as st

from orbihodge.epoly import (
    EPoly,
    affine_quotient_e,
    euler_number,
    geometric_sum,
    is_pure_uv,
    uv_degree_range,
)

UV = EPoly.uv_power(1)

epolys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-20, 20), max_size=6
).map(EPoly)


def test_product_example():
    assert UV * (1 + UV) == UV + UV**2


def test_zero_is_additive_identity():
    e = EPoly({(1, 2): 3, (0, 0): -1})
    assert e + EPoly() == e
    assert e + 0 == e


def test_geometric_sum_examples():
    assert geometric_sum(1) == EPoly.constant(1)
    assert geometric_sum(2) == 1 + UV
    assert geometric_sum(3) == 1 + UV + UV**2
    assert geometric_sum(4) == 1 + UV + UV**2 + UV**3
    with pytest.raises(ValueError):
        geometric_sum(0)


def test_affine_quotient_e():
    assert affine_quotient_e(0) == 1
    assert affine_quotient_e(1) == UV
    assert affine_quotient_e(3) == UV**3
    with pytest.raises(ValueError):
        affine_quotient_e(-1)


def test_euler_examples():
    assert euler_number(1 + UV) == 2
    assert euler_number(UV + UV**2) == 2
    for k in range(1, 8):
        assert euler_number(geometric_sum(k)) == k


def test_purity_and_range():
    assert is_pure_uv(UV + UV**2) and uv_degree_range(UV + UV**2) == (1, 2)
    assert not is_pure_uv(EPoly({(1, 2): 1}))
    assert is_pure_uv(EPoly.constant(1)) and uv_degree_range(EPoly.constant(1)) == (0, 0)
    with pytest.raises(ValueError):
        uv_degree_range(EPoly())


def test_no_stored_zeros():
    e = EPoly({(1, 1): 2}) - EPoly({(1, 1): 2})
    assert e.is_zero() and e.terms == {}


def test_rendering():
    assert str(UV + UV**2) == "uv + (uv)^2"
    assert str(UV.scale(8) + UV**2) == "8*uv + (uv)^2"
    assert str(EPoly({(0, 0): 1, (1, 0): -2, (0, 1): -2, (1, 1): 1})) == "1 - 2*v - 2*u + u*v"
    assert str(EPoly()) == "0"


@given(epolys)
def test_json_roundtrip(e):
    assert EPoly.from_json(e.to_json()) == e


@given(epolys, epolys, epolys)
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(epolys, epolys)
def test_euler_is_homomorphism(a, b):
    assert euler_number(a * b) == euler_number(a) * euler_number(b)
    assert euler_number(a + b) == euler_number(a) + euler_number(b)


@given(st.integers(1, 30))
def test_geometric_identity(k):
    assert geometric_sum(k) * (UV - 1) == UV**k - 1
