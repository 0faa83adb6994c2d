"""Built-in named groups.

SL(2) groups are written as unit quaternions a + b*i + c*j + d*k acting by
the matrix [[a + b*i, c + d*i], [-c + d*i, a - b*i]].  Generators:

* binary-dihedral:k (order 4k): diag(zeta_2k, zeta_2k^-1) and j.
* binary-tetrahedral (24): i, j and (1 + i + j + k)/2, over Q(zeta_4).
* binary-octahedral (48): the tetrahedral generators and (1 + i)/sqrt(2),
  which is diag(zeta_8, zeta_8^-1), over Q(zeta_8).
* binary-icosahedral (120): (1 + i + j + k)/2 and (phi + phi^-1 i + j)/2
  with phi^-1 = zeta_5 + zeta_5^4, over Q(zeta_20).

These are the standard quaternion presentations (Coxeter, "Regular Complex
Polytopes", ch. 6; Du Val, "Homographies, Quaternions and Rotations").
Orders are certified by the closure, not assumed.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .cyclotomic import Cyclotomic, zeta
from .matgroup import DEFAULT_CAP, CycMatrix, MatrixGroup, closure, special_linear_twist

__all__ = ["CATALOG_NAMES", "catalog_group", "UnknownGroupError"]

CATALOG_NAMES = (
    "trivial-sl2",
    "minus-one-sl2",
    "minus-one-sp4",
    "cyclic-sl2:k",
    "binary-dihedral:k",
    "binary-tetrahedral",
    "binary-octahedral",
    "binary-icosahedral",
    "symmetric:n",
    "symmetric-sl:n",
)


class UnknownGroupError(KeyError):
    pass


def _quaternion(a, b, c, d) -> CycMatrix:
    i = zeta(4)
    return CycMatrix([[a + b * i, c + d * i], [-c + d * i, a - b * i]])


def _q(x) -> Cyclotomic:
    return Cyclotomic.rational(x) if not isinstance(x, Cyclotomic) else x


QI = _quaternion(_q(0), _q(1), _q(0), _q(0))
QJ = _quaternion(_q(0), _q(0), _q(1), _q(0))
_HALF = Fraction(1, 2)
QS = _quaternion(*(_q(_HALF),) * 4)


def _permutation_matrix(perm: list[int]) -> CycMatrix:
    n = len(perm)
    return CycMatrix([[1 if perm[j] == i else 0 for j in range(n)] for i in range(n)])


def symmetric_generators(n: int) -> list[CycMatrix]:
    """Permutation matrices of (1 2) and (1 2 ... n)."""
    if n < 1:
        raise ValueError("symmetric group needs n >= 1")
    if n == 1:
        return []
    swap = list(range(n))
    swap[0], swap[1] = 1, 0
    cycle = [(i + 1) % n for i in range(n)]
    gens = [_permutation_matrix(swap)]
    if n > 2:
        gens.append(_permutation_matrix(cycle))
    return gens


def cyclic_sl2(k: int) -> list[CycMatrix]:
    if k < 1:
        raise ValueError("cyclic order must be positive")
    return [CycMatrix.diagonal([zeta(k), zeta(k, -1)])] if k > 1 else []


def binary_dihedral(k: int) -> list[CycMatrix]:
    if k < 2:
        raise ValueError("binary dihedral group needs k >= 2")
    return [CycMatrix.diagonal([zeta(2 * k), zeta(2 * k, -1)]), QJ]


def binary_tetrahedral() -> list[CycMatrix]:
    return [QI, QJ, QS]


def binary_octahedral() -> list[CycMatrix]:
    return [QI, QJ, QS, CycMatrix.diagonal([zeta(8), zeta(8, -1)])]


def binary_icosahedral() -> list[CycMatrix]:
    inv_phi = zeta(5) + zeta(5, 4)
    phi = inv_phi + 1
    t = _quaternion(phi * _HALF, inv_phi * _HALF, _q(_HALF), _q(0))
    return [QS, t]


def _parse(name: str) -> tuple[str, int | None]:
    if ":" in name:
        base, arg = name.split(":", 1)
        try:
            return base, int(arg)
        except ValueError:
            raise UnknownGroupError(f"bad parameter in catalog name {name!r}") from None
    return name, None


def catalog_group(name: str, cap: int = DEFAULT_CAP) -> MatrixGroup:
    """Build a catalog group by name, e.g. ``"cyclic-sl2:3"`` or ``"binary-icosahedral"``."""
    base, arg = _parse(name)
    fixed: dict[str, Callable[[], MatrixGroup]] = {
        "trivial-sl2": lambda: closure([], cap, size=2),
        "minus-one-sl2": lambda: closure([CycMatrix.scalar(2, -1)], cap),
        "minus-one-sp4": lambda: closure([CycMatrix.scalar(4, -1)], cap),
        "binary-tetrahedral": lambda: closure(binary_tetrahedral(), cap),
        "binary-octahedral": lambda: closure(binary_octahedral(), cap),
        "binary-icosahedral": lambda: closure(binary_icosahedral(), cap),
    }
    if base in fixed:
        if arg is not None:
            raise UnknownGroupError(f"catalog group {base!r} takes no parameter")
        return fixed[base]()
    if arg is None:
        raise UnknownGroupError(f"unknown catalog group {name!r}; known: {', '.join(CATALOG_NAMES)}")
    try:
        if base == "cyclic-sl2":
            return closure(cyclic_sl2(arg), cap, size=2)
        if base == "binary-dihedral":
            return closure(binary_dihedral(arg), cap)
        if base == "symmetric":
            return closure(symmetric_generators(arg), cap, size=arg)
        if base == "symmetric-sl":
            return special_linear_twist(closure(symmetric_generators(arg), cap, size=arg), cap)
    except ValueError as exc:
        if isinstance(exc, UnknownGroupError):
            raise
        raise UnknownGroupError(f"{name!r}: {exc}") from None
    raise UnknownGroupError(f"unknown catalog group {name!r}; known: {', '.join(CATALOG_NAMES)}")
