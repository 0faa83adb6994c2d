"""Necessary conditions for symplectic resolutions, and the smooth-quotient test.

None of these certify that a resolution exists; a failing verdict rules one out.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import PreconditionError
from .matgroup import MatrixGroup, closure, fixed_subspace, is_symplectic, subspace_contains

__all__ = [
    "FixedSpace",
    "Verdict",
    "fixed_spaces",
    "maximal_fixed_spaces",
    "maximal_fixed_codims",
    "passes_pure_codim2",
    "symplectic_reflections",
    "generated_by_symplectic_reflections",
    "pseudo_reflections",
    "generated_by_pseudo_reflections",
]


@dataclass(frozen=True)
class FixedSpace:
    element: int
    dimension: int
    codimension: int
    basis: tuple = field(repr=False)


@dataclass(frozen=True)
class Verdict:
    passed: bool
    witness: Optional[int] = None
    detail: str = ""

    def __bool__(self):
        return self.passed


def fixed_spaces(G: MatrixGroup) -> list[FixedSpace]:
    """Fix(g) for every non-identity element, in element order."""
    out = []
    for i, g in enumerate(G.elements):
        if i == G.identity_index:
            continue
        dim, basis = fixed_subspace(g)
        out.append(FixedSpace(i, dim, G.size - dim, tuple(basis)))
    return out


def maximal_fixed_spaces(G: MatrixGroup) -> list[FixedSpace]:
    """Distinct fixed subspaces that are maximal under inclusion.

    One witness (the least element index) is kept per distinct subspace.
    """
    spaces = sorted(fixed_spaces(G), key=lambda s: (-s.dimension, s.element))
    kept: list[FixedSpace] = []
    for s in spaces:
        if any(subspace_contains(k.basis, s.basis) for k in kept):
            continue
        kept.append(s)
    return sorted(kept, key=lambda s: s.element)


def maximal_fixed_codims(G: MatrixGroup) -> list[int]:
    """Sorted codimensions of the maximal fixed subspaces; empty for the trivial group."""
    return sorted(s.codimension for s in maximal_fixed_spaces(G))


def _require_symplectic(G: MatrixGroup) -> None:
    if G.size % 2 or not all(is_symplectic(g) for g in G.generators):
        raise PreconditionError("group is not a subgroup of Sp(2n) for the standard form")


def passes_pure_codim2(G: MatrixGroup) -> Verdict:
    """The union of the nontrivial fixed loci must be empty or of pure codimension 2.

    A failure rules out a symplectic resolution of C^2n/G.
    """
    _require_symplectic(G)
    for s in maximal_fixed_spaces(G):
        if s.codimension != 2:
            return Verdict(False, s.element, f"maximal fixed subspace of codimension {s.codimension}")
    return Verdict(True)


def symplectic_reflections(G: MatrixGroup) -> list[int]:
    _require_symplectic(G)
    return [s.element for s in fixed_spaces(G) if s.codimension == 2]


def generated_by_symplectic_reflections(G: MatrixGroup) -> Verdict:
    refl = symplectic_reflections(G)
    sub = closure([G.elements[i] for i in refl], cap=len(G), size=G.size)
    if len(sub) == len(G):
        return Verdict(True, detail=f"{len(refl)} symplectic reflections generate the group")
    return Verdict(False, detail=f"{len(refl)} symplectic reflections generate a subgroup of order {len(sub)} < {len(G)}")


def pseudo_reflections(G: MatrixGroup) -> list[int]:
    return [s.element for s in fixed_spaces(G) if s.codimension == 1]


def generated_by_pseudo_reflections(G: MatrixGroup) -> Verdict:
    """Chevalley-Shephard-Todd: C^n/G is smooth iff this passes."""
    refl = pseudo_reflections(G)
    sub = closure([G.elements[i] for i in refl], cap=len(G), size=G.size)
    if len(sub) == len(G):
        return Verdict(True, detail=f"{len(refl)} pseudo-reflections generate the group")
    return Verdict(False, detail=f"{len(refl)} pseudo-reflections generate a subgroup of order {len(sub)} < {len(G)}")
