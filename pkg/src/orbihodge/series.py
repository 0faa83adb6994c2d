"""Integer polynomials in t, truncated power series in q over them, and partitions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "TPoly",
    "QSeries",
    "Partition",
    "partitions",
    "qseries_inv_factor",
]


class TPoly:
    """Polynomial in t with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "TPoly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        other = _tcoerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return TPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _tcoerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _tcoerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TPoly":
        if k < 0:
            raise ValueError("negative power of a TPoly")
        out = TPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = _tcoerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def reverse(self, degree: int) -> "TPoly":
        """t^degree * P(1/t)."""
        if self.degree > degree:
            raise ValueError(f"degree {self.degree} exceeds {degree}")
        return TPoly(self[degree - k] for k in range(degree + 1))

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = ""
        first = True
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            if first:
                out = ("-" if c < 0 else "") + body
                first = False
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self):
        return f"TPoly({list(self.coeffs)})"


def _tcoerce(x):
    if isinstance(x, TPoly):
        return x
    if isinstance(x, int):
        return TPoly([x])
    return NotImplemented


class QSeries:
    """c_0 + c_1 q + ... + c_N q^N + O(q^(N+1)) with TPoly coefficients.

    Binary operations between series of different orders truncate to the
    smaller order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[Union[TPoly, int]] = ()):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        c = [x if isinstance(x, TPoly) else TPoly([x]) for x in list(coeffs)[: order + 1]]
        c += [TPoly()] * (order + 1 - len(c))
        self.order = order
        self.coeffs = tuple(c)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls(order, [TPoly([1])])

    @classmethod
    def monomial(cls, order: int, base: TPoly, d: int) -> "QSeries":
        """base * q^d."""
        c = [TPoly()] * (order + 1)
        if d <= order:
            c[d] = base
        return cls(order, c)

    def __getitem__(self, k: int) -> TPoly:
        return self.coeffs[k]

    def __add__(self, other: "QSeries") -> "QSeries":
        n = min(self.order, other.order)
        return QSeries(n, [self[i] + other[i] for i in range(n + 1)])

    def __neg__(self):
        return QSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, TPoly)):
            return QSeries(self.order, [c * other for c in self.coeffs])
        n = min(self.order, other.order)
        out = [TPoly()] * (n + 1)
        for i in range(n + 1):
            a = self[i]
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return QSeries(n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return self.inverse() ** (-k)
        out = QSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "QSeries":
        """Inverse of a series with constant term 1."""
        if self[0] != TPoly([1]):
            raise ValueError(f"cannot invert a series with constant term {self[0]}")
        inv = [TPoly([1])]
        for k in range(1, self.order + 1):
            acc = TPoly()
            for j in range(1, k + 1):
                acc = acc + self[j] * inv[k - j]
            inv.append(-acc)
        return QSeries(self.order, inv)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __hash__(self):
        # equality ignores the tail beyond the smaller order
        return hash(self.coeffs[0])

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            q = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not q:
                parts.append(f"({c})" if len(c.coeffs) > 1 or k else str(c))
            else:
                parts.append(f"({c})*{q}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(q^{self.order + 1})"

    def __repr__(self):
        return f"QSeries({self.order}, {[list(c.coeffs) for c in self.coeffs]})"


def qseries_inv_factor(base: TPoly, d: int, order: int) -> QSeries:
    """(1 - base * q^d)^-1 = sum_k base^k q^(dk), truncated at q^order."""
    if d < 1:
        raise ValueError(f"factor degree must be >= 1, got {d}")
    c = [TPoly()] * (order + 1)
    p = TPoly([1])
    for k in range(0, order // d + 1):
        c[k * d] = p
        p = p * base
    return QSeries(order, c)


@dataclass(frozen=True)
class Partition:
    """Partition of n as multiplicities: a[j-1] parts of size j."""

    n: int
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if sum((j + 1) * a for j, a in enumerate(self.multiplicities)) != self.n:
            raise ValueError(f"multiplicities {self.multiplicities} do not sum to {self.n}")
        if any(a < 0 for a in self.multiplicities):
            raise ValueError("negative multiplicity")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        parts = list(parts)
        n = sum(parts)
        a = [0] * n
        for p in parts:
            if p < 1:
                raise ValueError("parts must be positive")
            a[p - 1] += 1
        return cls(n, tuple(a))

    @property
    def length(self) -> int:
        """Number of parts, sum_j a_j."""
        return sum(self.multiplicities)

    def parts(self) -> list[int]:
        out = []
        for j in range(len(self.multiplicities), 0, -1):
            out += [j] * self.multiplicities[j - 1]
        return out

    def __str__(self):
        terms = [f"{j + 1}^{a}" for j, a in enumerate(self.multiplicities) if a]
        return "(" + " ".join(terms) + ")"


def _parts_desc(n: int, largest: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for p in range(min(n, largest), 0, -1):
        for rest in _parts_desc(n - p, p):
            yield [p] + rest


def partitions(n: int) -> list[Partition]:
    """All partitions of n, in reverse lexicographic order of their parts."""
    if n < 0:
        raise ValueError(f"cannot partition a negative number: {n}")
    out = []
    for parts in _parts_desc(n, n):
        a = [0] * n
        for p in parts:
            a[p - 1] += 1
        out.append(Partition(n, tuple(a)))
    return out

