"""Integer polynomials in two formal variables u, v (E-polynomials)."""
from __future__ import annotations

from typing import Iterable, Mapping, Union

__all__ = [
    "EPoly",
    "geometric_sum",
    "affine_quotient_e",
    "euler_number",
    "is_pure_uv",
    "uv_degree_range",
]


class EPoly:
    """Finite sum of c * u^p * v^q with integer c.

    Disjoint unions add and fibrations multiply, so the ring operations are
    all the E-polynomial calculus needed here.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[tuple[int, int], int], None] = None):
        clean = {}
        for (p, q), c in (terms or {}).items():
            p, q, c = _index(p), _index(q), int(c)
            if p < 0 or q < 0:
                raise ValueError(f"negative exponent ({p}, {q})")
            if c:
                clean[(p, q)] = clean.get((p, q), 0) + c
                if not clean[(p, q)]:
                    del clean[(p, q)]
        self._terms = clean

    @classmethod
    def constant(cls, c: int) -> "EPoly":
        return cls({(0, 0): c})

    @classmethod
    def uv_power(cls, k: int, coeff: int = 1) -> "EPoly":
        return cls({(k, k): coeff})

    @classmethod
    def from_uv_coefficients(cls, coeffs: Iterable[int]) -> "EPoly":
        """sum_k coeffs[k] * (uv)^k."""
        return cls({(k, k): c for k, c in enumerate(coeffs)})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def coefficient(self, p: int, q: int) -> int:
        return self._terms.get((p, q), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return EPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return EPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (p1, q1), a in self._terms.items():
            for (p2, q2), b in other._terms.items():
                k = (p1 + p2, q1 + q2)
                out[k] = out.get(k, 0) + a * b
        return EPoly(out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "EPoly":
        return EPoly({k: c * v for k, v in self._terms.items()})

    def __pow__(self, k: int) -> "EPoly":
        if k < 0:
            raise ValueError("negative power of an EPoly")
        out = EPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def evaluate(self, u, v):
        return sum(c * u**p * v**q for (p, q), c in self._terms.items())

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """(p, q, coeff) ordered by total degree, then p."""
        return [(p, q, c) for (p, q), c in sorted(self._terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0]))]

    def uv_coefficients(self) -> list[int]:
        """Coefficients of (uv)^k for a polynomial in uv only."""
        if not is_pure_uv(self):
            raise ValueError(f"{self} is not a polynomial in uv")
        if self.is_zero():
            return []
        top = max(p for p, _ in self._terms)
        return [self._terms.get((k, k), 0) for k in range(top + 1)]

    def to_json(self) -> list[dict]:
        return [{"p": p, "q": q, "coeff": str(c)} for p, q, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "EPoly":
        return cls({(int(t["p"]), int(t["q"])): int(t["coeff"]) for t in data})

    def __str__(self):
        if not self._terms:
            return "0"
        pure = is_pure_uv(self)
        out = ""
        for i, (p, q, c) in enumerate(self.sorted_terms()):
            mono = _uv_monomial(p) if pure else _monomial(p, q)
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if i == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self):
        return f"EPoly({str(self)!r})"


def _index(x) -> int:
    if isinstance(x, bool) or int(x) != x:
        raise TypeError(f"exponent must be an integer, got {x!r}")
    return int(x)


def _coerce(x):
    if isinstance(x, EPoly):
        return x
    if isinstance(x, int):
        return EPoly.constant(x)
    return NotImplemented


def _uv_monomial(k: int) -> str:
    return "" if k == 0 else ("uv" if k == 1 else f"(uv)^{k}")


def _monomial(p: int, q: int) -> str:
    parts = []
    if p:
        parts.append("u" if p == 1 else f"u^{p}")
    if q:
        parts.append("v" if q == 1 else f"v^{q}")
    return "*".join(parts)


def geometric_sum(k: int) -> EPoly:
    """1 + uv + ... + (uv)^(k-1), i.e. ((uv)^k - 1)/(uv - 1)."""
    if k <= 0:
        raise ValueError(f"geometric_sum needs k >= 1, got {k}")
    return EPoly.from_uv_coefficients([1] * k)


def affine_quotient_e(d: int) -> EPoly:
    """E-polynomial (uv)^d of C^d, and of C^d/H for finite linear H."""
    if d < 0:
        raise ValueError(f"dimension must be nonnegative, got {d}")
    return EPoly.uv_power(d)


def euler_number(e: EPoly) -> int:
    return e.evaluate(-1, -1)


def is_pure_uv(e: EPoly) -> bool:
    return all(p == q for p, q in e.terms)


def uv_degree_range(e: EPoly) -> tuple[int, int]:
    if e.is_zero():
        raise ValueError("degree range of the zero polynomial is undefined")
    ps = [p for p, _ in e.terms]
    return min(ps), max(ps)
