import pytest

from orbihodge.epoly import EPoly
from orbihodge.hilbcurve import (
    check_goettsche_vs_strata,
    goettsche_series,
    hilb_e_polynomial,
    hilb_poincare_strata,
    hilb_strata_e,
    macdonald_series,
    poincare_from_e,
    poincare_sym_nu,
    symmetric_power_e,
)
from orbihodge.mckay import hodge_cotangent_general
from orbihodge.series import Partition, TPoly, partitions
from test_series import pentagonal_p

UV = EPoly.uv_power(1)


def curve_poincare(g):
    return TPoly([1, 2 * g, 1])


@pytest.mark.parametrize("g", range(6))
def test_macdonald_low_terms(g):
    s = macdonald_series(g, 3)
    assert s[0] == TPoly([1])
    # hard gate: q^1 is P_t of the curve itself
    assert s[1] == curve_poincare(g)


@pytest.mark.parametrize("m", range(6))
def test_macdonald_genus0_is_projective_space(m):
    assert macdonald_series(0, 5)[m] == TPoly([1, 0] * m + [1])


@pytest.mark.parametrize("g", range(4))
def test_macdonald_symmetric_powers_are_palindromic(g):
    # S^m Sigma is smooth projective of dimension m
    s = macdonald_series(g, 5)
    for m in range(6):
        assert s[m].reverse(2 * m) == s[m]


def test_poincare_sym_nu_examples():
    assert poincare_sym_nu(Partition(1, (1,)), 1) == TPoly([1, 2, 1])
    assert poincare_sym_nu(Partition(0, ()), 3) == TPoly([1])
    assert poincare_sym_nu(Partition(2, (2, 0)), 0) == TPoly([1, 0, 1, 0, 1])


def test_strata_examples():
    assert hilb_poincare_strata(0, 2) == TPoly([1])
    for g in range(4):
        assert hilb_poincare_strata(1, g) == curve_poincare(g)
    assert hilb_poincare_strata(2, 0) == TPoly([1, 0, 2, 0, 2])


def test_goettsche_examples():
    for g in range(4):
        s = goettsche_series(g, 3)
        assert s[0] == TPoly([1])
        assert s[1] == curve_poincare(g)
    assert goettsche_series(0, 2)[2] == TPoly([1, 0, 2, 0, 2])


@pytest.mark.parametrize("g,order", [(0, 5), (3, 5), (0, 0)])
def test_check_examples(g, order):
    assert check_goettsche_vs_strata(g, order).passed


@pytest.mark.parametrize("g", range(5))
def test_check_up_to_order_8(g):
    assert check_goettsche_vs_strata(g, 8)


@pytest.mark.parametrize("g", range(4))
@pytest.mark.parametrize("n", range(1, 7))
def test_degree_and_leading_coefficient(n, g):
    p = hilb_poincare_strata(n, g)
    assert p.degree == 2 * n
    assert p.leading_coefficient() == pentagonal_p(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_genus1_euler_vanishes(n):
    assert hilb_poincare_strata(n, 1)(-1) == 0


def test_mckay_route_n2_genus0():
    e = hodge_cotangent_general(2, [(0, 1 + UV + UV**2), (1, 1 + UV)])
    assert e == UV**2 * (2 + UV.scale(2) + UV**2)
    # compactly supported classes flipped by Poincare duality in real dimension 8
    assert poincare_from_e(e, 4) == hilb_poincare_strata(2, 0)


def test_symmetric_power_e():
    assert symmetric_power_e(0, 2) == 1 + UV + UV**2
    curve = EPoly({(0, 0): 1, (1, 0): -2, (0, 1): -2, (1, 1): 1})
    assert symmetric_power_e(2, 1) == curve
    assert symmetric_power_e(3, 0) == 1


def test_strata_e_genus0():
    assert sorted(hilb_strata_e(2, 0), key=lambda s: s[0]) == [(0, 1 + UV + UV**2), (1, 1 + UV)]


@pytest.mark.parametrize("g", range(3))
@pytest.mark.parametrize("n", range(5))
def test_all_three_routes_agree(n, g):
    via_e = poincare_from_e(hilb_e_polynomial(n, g), 2 * n)
    assert via_e == hilb_poincare_strata(n, g) == goettsche_series(g, n)[n]
    assert len(hilb_strata_e(n, g)) == len(partitions(n))
