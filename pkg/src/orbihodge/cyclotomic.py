"""Exact arithmetic in cyclotomic fields Q(zeta_M).

An element is stored as the remainder of a rational polynomial in ``zeta_M``
modulo the cyclotomic polynomial ``Phi_M``, so equal values have equal
coefficient tuples.  Coefficients are kept fraction-free (integer numerators
over one common positive denominator) because matrix-group work multiplies
a lot of these and ``Fraction`` is slow.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

__all__ = [
    "Cyclotomic",
    "CyclotomicError",
    "DEFAULT_ORDER_LIMIT",
    "cyclotomic_polynomial",
    "cyc_make",
    "zeta",
    "root_of_unity_exponent",
]

DEFAULT_ORDER_LIMIT = 360

Rational = Union[int, Fraction]


class CyclotomicError(ArithmeticError):
    pass


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    """Exact division of integer polynomials (low degree first, ``den`` monic)."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[:dn]):
        raise CyclotomicError("inexact polynomial division")
    return out


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first.

    Uses (x^m - 1) / prod_{d | m, d < m} Phi_d(x).
    """
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


@lru_cache(maxsize=None)
def _mobius(m: int) -> int:
    result, p, k = 1, 2, m
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            result = -result
        p += 1
    if k > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def _reduced_powers(m: int) -> tuple[tuple[int, ...], ...]:
    """Row j holds zeta_m^j reduced mod Phi_m, for j in [0, 2*phi(m) - 1)."""
    phi = cyclotomic_polynomial(m)
    n = len(phi) - 1
    rows: list[tuple[int, ...]] = []
    cur = [0] * n
    cur[0] = 1
    for _ in range(max(2 * n - 1, m)):
        rows.append(tuple(cur))
        # multiply by x, then fold x^n back using Phi_m monic
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(n):
                cur[i] -= top * phi[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _normalized_trace_weights(m: int) -> tuple[Fraction, ...]:
    # Tr(zeta_m^j) / phi(m) = mu(m/g) / phi(m/g) with g = gcd(j, m); invariant under lifting.
    out = []
    for j in range(_euler_phi(m)):
        r = m // math.gcd(j, m)
        out.append(Fraction(_mobius(r), _euler_phi(r)))
    return tuple(out)


def _reduce(m: int, coeffs: Sequence[int]) -> list[int]:
    """Reduce an integer coefficient list of any length modulo Phi_m."""
    n = _euler_phi(m)
    if len(coeffs) <= n:
        return list(coeffs) + [0] * (n - len(coeffs))
    # fold x^j -> x^(j mod m) first so the power table stays small
    folded = [0] * m
    for j, c in enumerate(coeffs):
        folded[j % m] += c
    powers = _reduced_powers(m)
    out = folded[:n] + [0] * max(0, n - m)
    for j in range(n, m):
        c = folded[j]
        if c:
            row = powers[j]
            for i in range(n):
                out[i] += c * row[i]
    return out


class Cyclotomic:
    """Immutable element of Q(zeta_M).

    Values of different orders compare and combine by lifting both to the
    lcm of the orders.  ``order_limit`` caps that ambient order.
    """

    __slots__ = ("_order", "_num", "_den", "_hash")

    order_limit = DEFAULT_ORDER_LIMIT

    def __init__(self, order: int, num: Sequence[int], den: int = 1, *, _canonical: bool = False):
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        if not _canonical:
            num = _reduce(order, num)
            if den < 0:
                num, den = [-c for c in num], -den
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            g = math.gcd(den, *num)
            if g > 1:
                num, den = [c // g for c in num], den // g
        self._order = order
        self._num = tuple(num)
        self._den = den
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rationals(cls, order: int, coeffs: Iterable[Rational]) -> "Cyclotomic":
        fr = [Fraction(c) for c in coeffs]
        den = math.lcm(1, *(c.denominator for c in fr))
        return cls(order, [int(c * den) for c in fr], den)

    @classmethod
    def rational(cls, value: Rational, order: int = 1) -> "Cyclotomic":
        value = Fraction(value)
        return cls(order, [value.numerator], value.denominator)

    @classmethod
    def root_of_unity(cls, order: int, power: int = 1) -> "Cyclotomic":
        power %= order
        return cls(order, [0] * power + [1])

    # -- accessors ----------------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Canonical coefficients on 1, z, ..., z^(phi(M)-1)."""
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def key(self) -> tuple:
        """Hashable exact key, valid for comparisons at a fixed order."""
        return (self._order, self._den) + self._num

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    # -- lifting ------------------------------------------------------------

    def lift(self, order: int) -> "Cyclotomic":
        """Embed into Q(zeta_order); ``order`` must be a multiple of ``self.order``."""
        if order == self._order:
            return self
        if order % self._order:
            raise ValueError(f"cannot lift order {self._order} to {order}")
        k = order // self._order
        spread = [0] * (k * (len(self._num) - 1) + 1)
        for j, c in enumerate(self._num):
            spread[j * k] = c
        return Cyclotomic(order, spread, self._den)

    def _join(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if self._order == other._order:
            return self, other
        m = math.lcm(self._order, other._order)
        if m > self.order_limit:
            raise CyclotomicError(f"ambient order {m} exceeds limit {self.order_limit}")
        return self.lift(m), other.lift(m)

    @staticmethod
    def _coerce(x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.rational(x)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._join(other)
        d = a._den * b._den // math.gcd(a._den, b._den)
        fa, fb = d // a._den, d // b._den
        return Cyclotomic(a._order, [x * fa + y * fb for x, y in zip(a._num, b._num)], d)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self._order, [-c for c in self._num], self._den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._join(other)
        if len(a._num) == 1:
            return Cyclotomic(a._order, [a._num[0] * c for c in b._num], a._den * b._den)
        return Cyclotomic(a._order, _poly_mul(a._num, b._num), a._den * b._den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse by extended Euclid against Phi_M over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        m = self._order
        a = _trim([Fraction(c, self._den) for c in self._num])
        b = [Fraction(c) for c in cyclotomic_polynomial(m)]
        # invariant: s * self == r0 (mod Phi)
        r0, r1 = a, b
        s0, s1 = [Fraction(1)], [Fraction(0)]
        while len(r1) > 1 or r1[0] != 0:
            q, r = _fpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _trim(_fpoly_sub(s0, _fpoly_mul(q, s1)))
        # r0 is a nonzero constant since Phi_m is irreducible
        c = r0[0]
        return Cyclotomic.from_rationals(m, [x / c for x in s0])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic(self._order, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, zeta_M -> zeta_M^(-1)."""
        m = self._order
        out = [0] * m
        for j, c in enumerate(self._num):
            out[(-j) % m] += c
        return Cyclotomic(m, out, self._den)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self._order == other._order:
            return self._den == other._den and self._num == other._num
        a, b = self._join(other)
        return a._den == b._den and a._num == b._num

    def __hash__(self):
        # hash of the normalized trace: equal across orders, unlike the coefficients
        if self._hash is None:
            w = _normalized_trace_weights(self._order)
            t = sum((c * wi for c, wi in zip(self._num, w)), Fraction(0)) / self._den
            self._hash = hash(t)
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclotomic({self._order}, {str(self)!r})"

    def __str__(self):
        """Render as e.g. ``1/2 + (-1/2)*z4 + z4^2``."""
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
                continue
            z = f"z{self._order}" if j == 1 else f"z{self._order}^{j}"
            if c == 1:
                terms.append(z)
            elif c.denominator == 1 and c > 0:
                terms.append(f"{c}*{z}")
            else:
                terms.append(f"({c})*{z}")
        return " + ".join(terms) if terms else "0"


def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [Fraction(0)]


def _fpoly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _fpoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _fpoly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [Fraction(0)], _trim(a)
    q = [Fraction(0)] * (len(a) - db)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + db] / lead
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return _trim(q), _trim(a[:db] if db else [Fraction(0)])


def cyc_make(order: int, coeffs: Sequence[Rational]) -> Cyclotomic:
    """Canonical form of sum_j coeffs[j] * zeta_order^j."""
    if order < 1:
        raise ValueError(f"cyclotomic order must be positive, got {order}")
    if len(coeffs) != order:
        raise ValueError(f"expected {order} coefficients, got {len(coeffs)}")
    return Cyclotomic.from_rationals(order, coeffs)


def zeta(order: int, power: int = 1) -> Cyclotomic:
    return Cyclotomic.root_of_unity(order, power)


def root_of_unity_exponent(x: Cyclotomic, bound: int = DEFAULT_ORDER_LIMIT) -> tuple[int, int]:
    """Return ``(m, k)`` with x == zeta_m^k, m minimal and 0 <= k < m.

    Raises ValueError when x is not a root of unity of order at most ``bound``.
    """
    one = Cyclotomic.rational(1, x.order)
    p, m = x, 1
    while m <= bound:
        if p == one:
            break
        p = p * x
        m += 1
    else:
        raise ValueError(f"{x} is not a root of unity of order <= {bound}")
    # find k with zeta_m^k == x
    for k in range(m):
        if math.gcd(k, m) == 1 or m == 1:
            if zeta(m, k) == x:
                return m, k
    raise CyclotomicError(f"could not locate {x} among primitive {m}-th roots")
