"""Finite groups of cyclotomic matrices.

Everything is exact: closure, conjugacy classes (ordinary and modulo the
scalar subgroup), fixed subspaces, eigenvalue multiplicities and weights
(ages).  Groups are small enough that brute-force orbit computations are the
simplest correct thing.
"""
from __future__ import annotations

import math
import threading
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .cyclotomic import Cyclotomic, zeta
from .errors import ConsistencyError, PreconditionError

__all__ = [
    "CycMatrix",
    "EigenData",
    "GroupError",
    "MatrixGroup",
    "closure",
    "conjugacy_classes",
    "projective_classes",
    "fixed_subspace",
    "element_order",
    "eigen_data",
    "weight",
    "cotangent_lift",
    "is_symplectic",
    "determinant",
    "rank",
    "subspace_contains",
    "special_linear_twist",
]

DEFAULT_CAP = 10000


class GroupError(PreconditionError):
    """Bad group input: singular generator, size mismatch, cap exceeded."""


class CycMatrix:
    """Immutable square matrix with entries in a common field Q(zeta_M)."""

    __slots__ = ("size", "order", "rows", "_key")

    def __init__(self, rows: Sequence[Sequence], order: Optional[int] = None):
        rows = [[Cyclotomic._coerce(x) if not isinstance(x, Cyclotomic) else x for x in r] for r in rows]
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise GroupError("matrix must be square")
        m = order or 1
        for r in rows:
            for x in r:
                m = math.lcm(m, x.order)
        self.size = d
        self.order = m
        self.rows = tuple(tuple(x.lift(m) for x in r) for r in rows)
        self._key = None

    @classmethod
    def identity(cls, d: int, order: int = 1) -> "CycMatrix":
        one, zero = Cyclotomic.rational(1, order), Cyclotomic.rational(0, order)
        return cls([[one if i == j else zero for j in range(d)] for i in range(d)], order)

    @classmethod
    def diagonal(cls, entries: Sequence, order: Optional[int] = None) -> "CycMatrix":
        entries = [Cyclotomic._coerce(x) if not isinstance(x, Cyclotomic) else x for x in entries]
        d = len(entries)
        zero = Cyclotomic.rational(0)
        return cls([[entries[i] if i == j else zero for j in range(d)] for i in range(d)], order)

    @classmethod
    def scalar(cls, d: int, value) -> "CycMatrix":
        return cls.diagonal([value] * d)

    @property
    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(x.key for r in self.rows for x in r)
        return self._key

    def lift(self, order: int) -> "CycMatrix":
        return self if order == self.order else CycMatrix(self.rows, order)

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        if self.size != other.size:
            return False
        if self.order == other.order:
            return self.key == other.key
        m = math.lcm(self.order, other.order)
        return self.lift(m).key == other.lift(m).key

    def __hash__(self):
        return hash(tuple(hash(x) for r in self.rows for x in r))

    def __mul__(self, other):
        if isinstance(other, CycMatrix):
            if other.size != self.size:
                raise GroupError("size mismatch in matrix product")
            cols = list(zip(*other.rows))
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = None
                    for x, y in zip(r, c):
                        if x.is_zero() or y.is_zero():
                            continue
                        t = x * y
                        acc = t if acc is None else acc + t
                    row.append(acc if acc is not None else Cyclotomic.rational(0, self.order))
                out.append(row)
            return CycMatrix(out, math.lcm(self.order, other.order))
        s = Cyclotomic._coerce(other)
        if s is NotImplemented:
            return s
        return CycMatrix([[s * x for x in r] for r in self.rows], self.order)

    __rmul__ = __mul__

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __pow__(self, k: int) -> "CycMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycMatrix.identity(self.size, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def transpose(self) -> "CycMatrix":
        return CycMatrix(list(zip(*self.rows)), self.order)

    def trace(self) -> Cyclotomic:
        t = Cyclotomic.rational(0, self.order)
        for i in range(self.size):
            t = t + self.rows[i][i]
        return t

    def is_identity(self) -> bool:
        return self == CycMatrix.identity(self.size, self.order)

    def scalar_value(self) -> Optional[Cyclotomic]:
        """The value c if this matrix equals c*I, else None."""
        c = self.rows[0][0] if self.size else Cyclotomic.rational(1)
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if i == j:
                    if x != c:
                        return None
                elif not x.is_zero():
                    return None
        return c

    def inverse(self) -> "CycMatrix":
        d = self.size
        aug = [list(r) + [Cyclotomic.rational(1 if i == j else 0, self.order) for j in range(d)]
               for i, r in enumerate(self.rows)]
        pivots = _row_reduce(aug, d)
        if len(pivots) < d:
            raise GroupError("matrix is singular")
        return CycMatrix([r[d:] for r in aug], self.order)

    def __repr__(self):
        return "CycMatrix([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"


def _row_reduce(a: list[list[Cyclotomic]], ncols: int) -> list[int]:
    """In-place reduced row echelon form on the first ``ncols`` columns; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(a)
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if not a[i][c].is_zero()), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def determinant(g: CycMatrix) -> Cyclotomic:
    a = [list(r) for r in g.rows]
    d = g.size
    det = Cyclotomic.rational(1, g.order)
    for c in range(d):
        p = next((i for i in range(c, d) if not a[i][c].is_zero()), None)
        if p is None:
            return Cyclotomic.rational(0, g.order)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det = det * a[c][c]
        inv = a[c][c].inverse()
        for i in range(c + 1, d):
            if not a[i][c].is_zero():
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def rank(vectors: Sequence[Sequence[Cyclotomic]]) -> int:
    if not vectors:
        return 0
    a = [list(v) for v in vectors]
    return len(_row_reduce(a, len(a[0])))


def fixed_subspace(g: CycMatrix) -> tuple[int, list[tuple[Cyclotomic, ...]]]:
    """Dimension and a basis of ker(g - I), by exact elimination."""
    d = g.size
    a = [list(r) for r in (g - CycMatrix.identity(d, g.order)).rows]
    pivots = _row_reduce(a, d)
    free = [c for c in range(d) if c not in pivots]
    zero, one = Cyclotomic.rational(0, g.order), Cyclotomic.rational(1, g.order)
    basis = []
    for f in free:
        v = [zero] * d
        v[f] = one
        for row, pc in enumerate(pivots):
            v[pc] = -a[row][f]
        basis.append(tuple(v))
    return len(free), basis


def subspace_contains(big: Sequence[Sequence[Cyclotomic]], small: Sequence[Sequence[Cyclotomic]]) -> bool:
    """True iff span(small) is contained in span(big)."""
    if not small:
        return True
    return rank(list(big) + list(small)) == rank(big)


def element_order(g: CycMatrix, bound: int = DEFAULT_CAP) -> int:
    ident = CycMatrix.identity(g.size, g.order)
    p, m = g, 1
    while p != ident:
        p = p * g
        m += 1
        if m > bound:
            raise GroupError(f"element order exceeds {bound}; input is not of finite order")
    return m


@dataclass(frozen=True)
class EigenData:
    """Eigenvalue multiplicities of a finite-order matrix.

    ``multiplicities[k]`` counts the eigenvalue exp(2*pi*i*k/modulus); only
    nonzero entries are stored.
    """

    modulus: int
    multiplicities: dict = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities.values())

    @property
    def fixed_dimension(self) -> int:
        return self.multiplicities.get(0, 0)

    def distinct_multiplicities(self) -> tuple[int, ...]:
        """Sorted multiset of multiplicities of distinct eigenvalues."""
        return tuple(sorted(self.multiplicities.values()))

    def weight(self) -> Fraction:
        return sum((Fraction(k * c, self.modulus) for k, c in self.multiplicities.items()), Fraction(0))


def eigen_data(g: CycMatrix, m: Optional[int] = None) -> EigenData:
    """Multiplicities by the trace Fourier transform over the m-th roots of unity."""
    if m is None:
        m = element_order(g)
    big = math.lcm(g.order, m)
    traces = []
    p = CycMatrix.identity(g.size, g.order)
    for _ in range(m):
        traces.append(p.trace().lift(big))
        p = p * g
    mults = {}
    for k in range(m):
        acc = Cyclotomic.rational(0, big)
        for j, t in enumerate(traces):
            acc = acc + t * zeta(big, (-j * k * (big // m)) % big)
        if not acc.is_rational():
            raise ConsistencyError(f"non-rational eigenvalue multiplicity at k={k}")
        val = acc.to_fraction() / m
        if val.denominator != 1 or val < 0:
            raise ConsistencyError(f"invalid eigenvalue multiplicity {val} at k={k}")
        if val:
            mults[k] = int(val)
    if sum(mults.values()) != g.size:
        raise ConsistencyError("eigenvalue multiplicities do not sum to the dimension")
    return EigenData(m, mults)


def weight(g: CycMatrix) -> Fraction:
    """Sum of the a_i in [0, 1) with eigenvalues exp(2*pi*i*a_i); the age of g."""
    return eigen_data(g).weight()


def standard_symplectic_form(n: int) -> CycMatrix:
    one, zero = Cyclotomic.rational(1), Cyclotomic.rational(0)
    rows = []
    for i in range(2 * n):
        row = [zero] * (2 * n)
        if i < n:
            row[n + i] = one
        else:
            row[i - n] = -one
        rows.append(row)
    return CycMatrix(rows)


def is_symplectic(g: CycMatrix, n: Optional[int] = None) -> bool:
    """True iff g^T J g == J for J = [[0, I], [-I, 0]]."""
    if g.size % 2:
        raise GroupError(f"symplectic test needs even size, got {g.size}")
    if n is not None and 2 * n != g.size:
        raise GroupError(f"matrix of size {g.size} is not 2*{n}")
    j = standard_symplectic_form(g.size // 2)
    return g.transpose() * j * g == j


class MatrixGroup:
    """A finite group of invertible cyclotomic matrices, closed and deduplicated.

    ``elements[0]`` is the identity.  Conjugacy data is computed on first use
    and cached; the computation is guarded so concurrent first access does
    the work once.
    """

    def __init__(self, elements: list[CycMatrix], generators: list[CycMatrix], size: int, order: int):
        self.elements = elements
        self.generators = generators
        self.size = size
        self.order = order
        self.identity_index = 0
        self._index = {g.key: i for i, g in enumerate(elements)}
        self._lock = threading.RLock()
        self._classes = None
        self._class_of = None
        self._scalars = None
        self._proj = None
        self._eigen = {}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: CycMatrix) -> bool:
        return g.lift(self.order).key in self._index

    def index(self, g: CycMatrix) -> int:
        try:
            return self._index[g.lift(self.order).key]
        except KeyError:
            raise GroupError("matrix is not an element of the group") from None

    def mul(self, i: int, j: int) -> int:
        return self.index(self.elements[i] * self.elements[j])

    def inverse_index(self, i: int) -> int:
        return self.index(self.elements[i].inverse())

    @property
    def conjugacy_classes(self) -> list[list[int]]:
        with self._lock:
            if self._classes is None:
                self._classes = _orbit_classes(self)
                self._class_of = {i: c for c, cl in enumerate(self._classes) for i in cl}
        return self._classes

    def class_of(self, i: int) -> int:
        self.conjugacy_classes
        return self._class_of[i]

    @property
    def scalar_subgroup(self) -> list[int]:
        with self._lock:
            if self._scalars is None:
                self._scalars = [i for i, g in enumerate(self.elements) if g.scalar_value() is not None]
        return self._scalars

    @property
    def projective_classes(self) -> list[list[int]]:
        with self._lock:
            if self._proj is None:
                self._proj = _projective_classes(self)
        return self._proj

    def eigen_data(self, i: int) -> EigenData:
        with self._lock:
            ed = self._eigen.get(i)
        if ed is None:
            ed = eigen_data(self.elements[i], self.element_order(i))
            with self._lock:
                self._eigen[i] = ed
        return ed

    def element_order(self, i: int) -> int:
        return element_order(self.elements[i], len(self.elements))

    def is_volume_preserving(self) -> bool:
        return all(determinant(g) == 1 for g in self.generators)


def closure(generators: Sequence[CycMatrix], cap: int = DEFAULT_CAP, size: Optional[int] = None) -> MatrixGroup:
    """Breadth-first closure of ``generators`` under multiplication.

    Elements appear in discovery order, identity first.  ``size`` is required
    when ``generators`` is empty.
    """
    generators = list(generators)
    if not generators:
        if size is None:
            raise GroupError("size must be given for an empty generator list")
        d = size
    else:
        d = generators[0].size
        if size is not None and size != d:
            raise GroupError(f"generator 0 has size {d}, expected {size}")
    m = 1
    for i, g in enumerate(generators):
        if g.size != d:
            raise GroupError(f"generator {i} has size {g.size}, expected {d}")
        m = math.lcm(m, g.order)
    generators = [g.lift(m) for g in generators]
    for i, g in enumerate(generators):
        if determinant(g).is_zero():
            raise GroupError(f"generator {i} is not invertible")
    ident = CycMatrix.identity(d, m)
    elements = [ident]
    seen = {ident.key}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = x * g
            if y.key not in seen:
                if len(elements) >= cap:
                    raise GroupError(f"closure exceeds cap {cap}; group not certified finite at this cap")
                seen.add(y.key)
                elements.append(y)
                queue.append(y)
    return MatrixGroup(elements, generators, d, m)


def _orbit_classes(G: MatrixGroup) -> list[list[int]]:
    # conjugating by the generators generates the whole conjugation action
    gens = [(g, g.inverse()) for g in G.generators]
    assigned = [False] * len(G)
    classes = []
    for start in range(len(G)):
        if assigned[start]:
            continue
        orbit = [start]
        assigned[start] = True
        k = 0
        while k < len(orbit):
            x = G.elements[orbit[k]]
            for g, ginv in gens:
                j = G.index(ginv * x * g)
                if not assigned[j]:
                    assigned[j] = True
                    orbit.append(j)
            k += 1
        classes.append(sorted(orbit))
    return classes


def _projective_classes(G: MatrixGroup) -> list[list[int]]:
    classes = G.conjugacy_classes
    parent = list(range(len(classes)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for s in G.scalar_subgroup:
        for c, cl in enumerate(classes):
            other = G.class_of(G.mul(s, cl[0]))
            ra, rb = find(c), find(other)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    merged: dict[int, list[int]] = {}
    for c, cl in enumerate(classes):
        merged.setdefault(find(c), []).extend(cl)
    out = [sorted(v) for v in merged.values()]
    out.sort(key=lambda cl: cl[0])
    return out


def conjugacy_classes(G: MatrixGroup) -> list[list[int]]:
    """Conjugacy classes as sorted index lists, ordered by least index (the representative)."""
    return G.conjugacy_classes


def projective_classes(G: MatrixGroup) -> tuple[list[int], list[list[int]]]:
    """Scalar subgroup indices and the classes of G modulo scalars.

    g ~ h iff x g x^-1 == s h for some x in G and scalar s in G.
    """
    return G.scalar_subgroup, G.projective_classes


def cotangent_lift(G: MatrixGroup, cap: int = DEFAULT_CAP) -> MatrixGroup:
    """Image of G under g -> diag(g, (g^T)^-1), a subgroup of Sp(2n)."""
    n = G.size

    def lift(g: CycMatrix) -> CycMatrix:
        dual = g.transpose().inverse()
        zero = Cyclotomic.rational(0, g.order)
        rows = [list(r) + [zero] * n for r in g.rows]
        rows += [[zero] * n + list(r) for r in dual.rows]
        return CycMatrix(rows, g.order)

    if not G.generators:
        return closure([], cap, size=2 * n)
    return closure([lift(g) for g in G.generators], cap)


def special_linear_twist(G: MatrixGroup, cap: int = DEFAULT_CAP) -> MatrixGroup:
    """Rescale each generator by a root of unity so it has determinant 1.

    The result has the same image in PGL(n) as G.  A generator with
    det = zeta_m^k is multiplied by zeta_(m*n)^(-k).
    """
    from .cyclotomic import root_of_unity_exponent

    n = G.size
    gens = []
    for g in G.generators:
        m, k = root_of_unity_exponent(determinant(g))
        gens.append(g * zeta(m * n, -k))
    if not gens:
        return closure([], cap, size=n)
    return closure(gens, cap)
