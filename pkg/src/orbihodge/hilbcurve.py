"""Poincare polynomials of Hilbert schemes of points on T*Sigma, Sigma a curve.

Three routes to the same numbers:

* a sum over partitions nu of n of t^(2n - 2 len(nu)) P_t(S^nu Sigma), where
  S^nu Sigma is the product of symmetric powers S^(a_j) Sigma and their
  Poincare polynomials come from Macdonald's generating function
  (1 + t q)^(2g) / ((1 - q)(1 - t^2 q));
* Goettsche's infinite product specialised to T*Sigma;
* the E-polynomial assembly of the mckay module over the strata of S_n on
  Sigma^n, converted to ordinary Betti numbers by Poincare duality.

Hilb^n(T*Sigma) is not compact, so P_t here means ordinary cohomology; the
E-polynomial route computes compactly supported classes and is flipped by
t -> 1/t with the real dimension 4n.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .epoly import EPoly
from .mckay import hodge_cotangent_general
from .series import Partition, QSeries, TPoly, partitions, qseries_inv_factor

__all__ = [
    "SeriesCheck",
    "curve_betti",
    "macdonald_series",
    "poincare_sym_nu",
    "hilb_poincare_strata",
    "goettsche_series",
    "check_goettsche_vs_strata",
    "symmetric_power_e",
    "hilb_strata_e",
    "hilb_e_polynomial",
    "poincare_from_e",
]


def _check_genus(genus: int) -> None:
    if genus < 0:
        raise ValueError(f"genus must be nonnegative, got {genus}")


def curve_betti(genus: int) -> tuple[int, int, int]:
    _check_genus(genus)
    return 1, 2 * genus, 1


def macdonald_series(genus: int, order: int) -> QSeries:
    """sum_m P_t(S^m Sigma) q^m through q^order."""
    _check_genus(genus)
    if order < 0:
        raise ValueError("order must be nonnegative")
    numer = (QSeries.one(order) + QSeries.monomial(order, TPoly([0, 1]), 1)) ** (2 * genus)
    return numer * qseries_inv_factor(TPoly([1]), 1, order) * qseries_inv_factor(TPoly([0, 0, 1]), 1, order)


@lru_cache(maxsize=None)
def _sym_poincare(genus: int, m: int) -> TPoly:
    return macdonald_series(genus, m)[m]


def poincare_sym_nu(nu: Partition, genus: int) -> TPoly:
    """P_t of S^nu Sigma = prod_j S^(a_j) Sigma."""
    out = TPoly([1])
    for a in nu.multiplicities:
        if a:
            out = out * _sym_poincare(genus, a)
    return out


def hilb_poincare_strata(n: int, genus: int) -> TPoly:
    """P_t(Hilb^n(T*Sigma)) as a sum over the conjugacy classes of S_n."""
    _check_genus(genus)
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = TPoly()
    for nu in partitions(n):
        total = total + TPoly.monomial(2 * n - 2 * nu.length) * poincare_sym_nu(nu, genus)
    return total


def goettsche_series(genus: int, order: int) -> QSeries:
    """prod_d (1 + t^(2d-1) q^d)^b1 / ((1 - t^(2d-2) q^d)^b0 (1 - t^(2d) q^d)^b2), through q^order."""
    b0, b1, b2 = curve_betti(genus)
    if order < 0:
        raise ValueError("order must be nonnegative")
    out = QSeries.one(order)
    for d in range(1, order + 1):
        odd = QSeries.one(order) + QSeries.monomial(order, TPoly.monomial(2 * d - 1), d)
        out = out * odd**b1
        out = out * qseries_inv_factor(TPoly.monomial(2 * d - 2), d, order) ** b0
        out = out * qseries_inv_factor(TPoly.monomial(2 * d), d, order) ** b2
    return out


@dataclass(frozen=True)
class SeriesCheck:
    passed: bool
    genus: int
    order: int
    mismatch: Optional[int] = None
    product: Optional[TPoly] = None
    strata: Optional[TPoly] = None

    def __bool__(self):
        return self.passed


def check_goettsche_vs_strata(genus: int, order: int) -> SeriesCheck:
    """Compare the product formula with the partition sum coefficient by coefficient."""
    prod = goettsche_series(genus, order)
    for n in range(order + 1):
        s = hilb_poincare_strata(n, genus)
        if prod[n] != s:
            return SeriesCheck(False, genus, order, n, prod[n], s)
    return SeriesCheck(True, genus, order)


def symmetric_power_e(genus: int, m: int) -> EPoly:
    """E(S^m Sigma) from sum_m E(S^m Sigma) q^m = (1-uq)^g (1-vq)^g / ((1-q)(1-uvq))."""
    _check_genus(genus)
    if m < 0:
        raise ValueError("m must be nonnegative")
    # coefficients of q^0..q^m as EPoly lists
    def mul(a, b):
        out = [EPoly() for _ in range(m + 1)]
        for i, x in enumerate(a):
            for j in range(m + 1 - i):
                out[i + j] = out[i + j] + x * b[j]
        return out

    def geometric(base: EPoly):
        out, p = [], EPoly.constant(1)
        for _ in range(m + 1):
            out.append(p)
            p = p * base
        return out

    def linear(c: EPoly):
        return [EPoly.constant(1), c] + [EPoly()] * (m - 1) if m >= 1 else [EPoly.constant(1)]

    series = mul(geometric(EPoly.constant(1)), geometric(EPoly.uv_power(1)))
    for _ in range(genus):
        series = mul(series, linear(-EPoly({(1, 0): 1})))
        series = mul(series, linear(-EPoly({(0, 1): 1})))
    return series[m]


def hilb_strata_e(n: int, genus: int) -> list[tuple[int, EPoly]]:
    """(codim of Fix(nu) in Sigma^n, E(S^nu Sigma)) for each partition nu of n."""
    out = []
    for nu in partitions(n):
        e = EPoly.constant(1)
        for a in nu.multiplicities:
            if a:
                e = e * symmetric_power_e(genus, a)
        out.append((n - nu.length, e))
    return out


def hilb_e_polynomial(n: int, genus: int) -> EPoly:
    """E(Hilb^n(T*Sigma)) via the orbifold formula for S_n acting on T*(Sigma^n)."""
    return hodge_cotangent_general(n, hilb_strata_e(n, genus))


def poincare_from_e(e: EPoly, complex_dim: int) -> TPoly:
    """Ordinary Poincare polynomial of a smooth variety with pure compactly supported cohomology.

    h^{p,q} = (-1)^(p+q) e^{p,q} gives compact Betti numbers; Poincare duality
    sends degree k to 2*complex_dim - k.
    """
    top = 2 * complex_dim
    b = [0] * (top + 1)
    for (p, q), c in e.terms.items():
        k = p + q
        if k > top:
            raise ValueError(f"term u^{p} v^{q} exceeds real dimension {top}")
        b[top - k] += (-1) ** k * c
    return TPoly(b)
