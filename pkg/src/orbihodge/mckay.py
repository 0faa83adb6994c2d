"""Orbifold E-functions and Hodge numbers of symplectic resolutions.

Two concrete geometries are handled from group data alone:

* linear symplectic quotients C^2n/G, where every fixed locus is a linear
  subspace and contributes (uv)^(age + dim Fix);
* T*P^n/G for G in SL(n+1), where the fixed components of g on P^n are the
  projectivized eigenspaces of a lift, contributing (uv)^n times
  ((uv)^k - 1)/(uv - 1) per eigenspace of dimension k.

For a general projective X the caller supplies the strata W/C(g, W).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .epoly import EPoly, affine_quotient_e, euler_number, geometric_sum
from .errors import ConsistencyError, PreconditionError
from .matgroup import MatrixGroup, determinant, is_symplectic

__all__ = [
    "Stratum",
    "TpnClass",
    "orbifold_assemble",
    "stringy_strata",
    "stringy_e_linear_symplectic",
    "tpn_classes",
    "hodge_tpn",
    "euler_tpn",
    "hodge_cotangent_general",
    "euler_check",
]


@dataclass(frozen=True)
class Stratum:
    """One (g, W) summand: (uv)^weight * E(W / C(g, W))."""

    weight: int
    quotient_e: EPoly
    label: str = ""

    def __post_init__(self):
        if self.weight < 0:
            raise PreconditionError(f"stratum weight must be nonnegative, got {self.weight}")


def orbifold_assemble(strata: Iterable[Stratum]) -> EPoly:
    total = EPoly()
    for s in strata:
        total = total + EPoly.uv_power(s.weight) * s.quotient_e
    return total


def _require_symplectic(G: MatrixGroup) -> None:
    if G.size % 2:
        raise PreconditionError(f"group of odd size {G.size} cannot be symplectic")
    for i, g in enumerate(G.generators):
        if not is_symplectic(g):
            raise PreconditionError(f"generator {i} does not preserve the standard symplectic form")


def stringy_strata(G: MatrixGroup) -> list[Stratum]:
    """One stratum per conjugacy class of a linear symplectic group.

    Fix(g) is a single linear subspace, so E(Fix(g)/C(g)) = (uv)^dim Fix(g).
    """
    _require_symplectic(G)
    strata = []
    for cl in G.conjugacy_classes:
        rep = cl[0]
        ed = G.eigen_data(rep)
        wt = ed.weight()
        if wt.denominator != 1:
            raise ConsistencyError(f"symplectic element {rep} has non-integral weight {wt}")
        strata.append(Stratum(int(wt), affine_quotient_e(ed.fixed_dimension), label=f"class of element {rep} (size {len(cl)})"))
    return strata


def stringy_e_linear_symplectic(G: MatrixGroup) -> EPoly:
    """Stringy E-function of C^2n/G for a finite G in Sp(2n)."""
    return orbifold_assemble(stringy_strata(G))


@dataclass(frozen=True)
class TpnClass:
    """A conjugacy class of G in PGL(n+1) with the eigenspace dimensions of its lift."""

    representative: int
    size: int
    multiplicities: tuple[int, ...]


def _require_special_linear(G: MatrixGroup) -> None:
    for i, g in enumerate(G.generators):
        if determinant(g) != 1:
            raise PreconditionError(f"generator {i} does not have determinant 1")


def tpn_classes(G: MatrixGroup) -> list[TpnClass]:
    """Projective classes with the multiset k_i(g) read from the least-index lift.

    Every ordinary class inside a projective class is checked to give the
    same multiset; a disagreement raises ConsistencyError.
    """
    _require_special_linear(G)
    out = []
    for pcl in G.projective_classes:
        rep = pcl[0]
        ks = G.eigen_data(rep).distinct_multiplicities()
        seen = {G.class_of(rep)}
        for i in pcl:
            c = G.class_of(i)
            if c in seen:
                continue
            seen.add(c)
            other = G.eigen_data(i).distinct_multiplicities()
            if other != ks:
                raise ConsistencyError(
                    f"lifts {rep} and {i} of one projective class have eigenspace dimensions {ks} vs {other}"
                )
        out.append(TpnClass(rep, len(pcl) // len(G.scalar_subgroup), ks))
    return out


def hodge_tpn(G: MatrixGroup) -> EPoly:
    """Signed Hodge polynomial of a symplectic resolution of T*P^n/G, G in SL(n+1)."""
    n = G.size - 1
    if n < 0:
        raise PreconditionError("group must act on a space of dimension >= 1")
    total = EPoly()
    for cl in tpn_classes(G):
        for k in cl.multiplicities:
            total = total + geometric_sum(k)
    return EPoly.uv_power(n) * total


def euler_tpn(G: MatrixGroup) -> int:
    """(n + 1) times the number of conjugacy classes of G in PGL(n+1)."""
    _require_special_linear(G)
    return G.size * len(G.projective_classes)


def hodge_cotangent_general(n: int, strata: Sequence[tuple[int, EPoly]]) -> EPoly:
    """(uv)^n * sum of E(W/C(g,W)) over user-supplied strata of a projective X.

    Each stratum is ``(codim of W in X, E(W/C(g,W)))``; the codimension is the
    weight of g along T*W and cancels against the fibre dimension, so it is
    only range-checked.
    """
    if n < 0:
        raise PreconditionError("dimension must be nonnegative")
    total = EPoly()
    for codim, e in strata:
        if not 0 <= codim <= n:
            raise PreconditionError(f"codimension {codim} out of range for dimension {n}")
        total = total + e
    return EPoly.uv_power(n) * total


def euler_check(G: MatrixGroup) -> tuple[int, int]:
    """Both routes to the Euler number of the T*P^n resolution."""
    return euler_tpn(G), euler_number(hodge_tpn(G))
