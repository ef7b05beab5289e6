"""Finite-dimensional Lie superalgebras given by graded structure constants.

Basis convention: every even basis vector precedes every odd one in the
global ordering.  Only brackets ``[b_i, b_j]`` with ``i <= j`` are stored;
the other orientation comes from graded skew-symmetry
``[x, y] = -(-1)^{|x||y|} [y, x]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .exactlin import (
    ZERO,
    RationalMatrix,
    as_rational,
    nullspace_basis,
    row_space_basis,
    solve_in_span,
)


class AlgebraFormatError(ValueError):
    """Malformed algebra data: bad vector length, unknown or duplicate name."""


class SkewSymmetryError(AlgebraFormatError):
    """Structure constants that cannot satisfy graded skew-symmetry."""


class NotAnIdealError(ValueError):
    def __init__(self, message: str, witness: tuple[str, str]):
        super().__init__(message)
        self.witness = witness


class NotNilpotentError(ValueError):
    pass


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    def __str__(self):
        return self.name.lower()


@dataclass(frozen=True, order=True)
class GradedDim:
    even: int = 0
    odd: int = 0

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError("graded dimensions are nonnegative")

    @property
    def total(self) -> int:
        return self.even + self.odd

    def __add__(self, other: "GradedDim") -> "GradedDim":
        return GradedDim(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "GradedDim") -> "GradedDim":
        return GradedDim(self.even - other.even, self.odd - other.odd)

    def __getitem__(self, parity: int) -> int:
        return self.odd if parity else self.even

    def __str__(self):
        return f"({self.even} | {self.odd})"


@dataclass(frozen=True)
class BasisVector:
    name: str
    parity: Parity
    index: int  # position within its parity block


Vector = tuple  # tuple[Fraction, ...] indexed by global basis position


def _sign(p: int) -> int:
    return -1 if p & 1 else 1


class LieSuperAlgebra:
    """Immutable Lie superalgebra over Q.

    ``brackets`` maps a pair of basis names to the value of their bracket,
    either as ``{name: coeff}`` or as a full coefficient sequence.  Pairs may
    be given in either orientation; giving both is allowed only when they
    agree under graded skew-symmetry.
    """

    def __init__(self, even: Sequence[str], odd: Sequence[str],
                 brackets: Mapping | None = None, name: str = ""):
        even, odd = list(even), list(odd)
        names = even + odd
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise AlgebraFormatError(f"duplicate basis names: {', '.join(dupes)}")
        for n in names:
            if not isinstance(n, str) or not n:
                raise AlgebraFormatError(f"invalid basis name {n!r}")
        self.name = name
        self.dims = GradedDim(len(even), len(odd))
        self.basis = tuple(
            [BasisVector(n, Parity.EVEN, k) for k, n in enumerate(even)]
            + [BasisVector(n, Parity.ODD, k) for k, n in enumerate(odd)]
        )
        self._index = {b.name: i for i, b in enumerate(self.basis)}
        structure: dict[tuple[int, int], Vector] = {}
        for (left, right), value in (brackets or {}).items():
            i, j = self.index(left), self.index(right)
            vec = self.vector(value)
            if i > j:
                i, j = j, i
                s = -_sign(self.parity(i) * self.parity(j))
                vec = tuple(s * c for c in vec)
            if (i, j) in structure and structure[(i, j)] != vec:
                raise SkewSymmetryError(
                    f"brackets [{left},{right}] and [{right},{left}] are inconsistent with skew-symmetry"
                )
            structure[(i, j)] = vec
        self._init_structure(structure)

    @classmethod
    def from_structure(cls, even: Sequence[str], odd: Sequence[str],
                       structure: Mapping[tuple[int, int], Sequence], name: str = "") -> "LieSuperAlgebra":
        """Build from index-keyed structure constants (``i <= j`` only)."""
        alg = cls(even, odd, name=name)
        n = alg.dim
        clean = {}
        for (i, j), vec in structure.items():
            if not (0 <= i <= j < n):
                raise AlgebraFormatError(f"structure key {(i, j)} out of range or mis-oriented")
            clean[(i, j)] = alg.vector(vec)
        alg._init_structure(clean)
        return alg

    def _init_structure(self, structure: dict) -> None:
        for (i, j), vec in structure.items():
            if i == j and self.parity(i) == Parity.EVEN and any(vec):
                raise SkewSymmetryError(
                    f"[{self.basis[i].name},{self.basis[i].name}] must vanish for an even basis vector"
                )
        self._structure = {k: v for k, v in sorted(structure.items()) if any(v)}
        n = self.dim
        table: list[list[Vector | None]] = [[None] * n for _ in range(n)]
        for (i, j), vec in self._structure.items():
            table[i][j] = vec
            if i != j:
                s = -_sign(self.parity(i) * self.parity(j))
                table[j][i] = tuple(s * c for c in vec)
        self._table = table

    # -- basic accessors -------------------------------------------------

    @property
    def dim(self) -> int:
        return self.dims.total

    @property
    def structure(self) -> dict[tuple[int, int], Vector]:
        return dict(self._structure)

    @property
    def names(self) -> list[str]:
        return [b.name for b in self.basis]

    @property
    def even_names(self) -> list[str]:
        return [b.name for b in self.basis if b.parity == Parity.EVEN]

    @property
    def odd_names(self) -> list[str]:
        return [b.name for b in self.basis if b.parity == Parity.ODD]

    def parity(self, i: int) -> Parity:
        return self.basis[i].parity

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlgebraFormatError(f"unknown basis name {name!r}") from None

    def indices(self, parity: int) -> range:
        return range(0, self.dims.even) if parity == Parity.EVEN else range(self.dims.even, self.dim)

    def zero(self) -> Vector:
        return (ZERO,) * self.dim

    def basis_vector(self, i: int | str) -> Vector:
        if isinstance(i, str):
            i = self.index(i)
        v = [ZERO] * self.dim
        v[i] = Fraction(1)
        return tuple(v)

    def vector(self, value) -> Vector:
        """Coefficient vector from a name, ``{name: coeff}`` or a full sequence."""
        if isinstance(value, str):
            return self.basis_vector(value)
        if isinstance(value, Mapping):
            v = [ZERO] * self.dim
            for name, c in value.items():
                v[self.index(name)] += as_rational(c)
            return tuple(v)
        vals = [as_rational(c) for c in value]
        if len(vals) != self.dim:
            raise AlgebraFormatError(f"coefficient vector has length {len(vals)}, expected {self.dim}")
        return tuple(vals)

    def vector_parity(self, v: Sequence) -> Parity | None:
        """Parity of a nonzero homogeneous vector; None for zero or mixed."""
        has_even = any(v[i] for i in self.indices(Parity.EVEN))
        has_odd = any(v[i] for i in self.indices(Parity.ODD))
        if has_even and not has_odd:
            return Parity.EVEN
        if has_odd and not has_even:
            return Parity.ODD
        return None

    def basis_bracket(self, i: int, j: int) -> Vector:
        return self._table[i][j] or self.zero()

    def format_vector(self, v: Sequence) -> str:
        terms = []
        for c, b in zip(v, self.basis):
            if not c:
                continue
            if c == 1:
                terms.append(b.name)
            elif c == -1:
                terms.append(f"-{b.name}")
            else:
                terms.append(f"{c}*{b.name}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __repr__(self):
        label = self.name or "LieSuperAlgebra"
        return f"<{label} dims={self.dims} brackets={len(self._structure)}>"

    def describe(self) -> str:
        lines = [f"{self.name or 'L'}: even={self.even_names} odd={self.odd_names}"]
        for (i, j), v in self._structure.items():
            lines.append(f"  [{self.basis[i].name}, {self.basis[j].name}] = {self.format_vector(v)}")
        return "\n".join(lines)


def bracket(L: LieSuperAlgebra, u: Sequence, v: Sequence) -> Vector:
    """Bilinear extension of the structure constants to arbitrary vectors."""
    if len(u) != L.dim or len(v) != L.dim:
        raise ValueError(f"vectors must have length {L.dim}")
    out = [ZERO] * L.dim
    for i, a in enumerate(u):
        if not a:
            continue
        row = L._table[i]
        for j, b in enumerate(v):
            if not b or row[j] is None:
                continue
            ab = a * b
            for k, c in enumerate(row[j]):
                if c:
                    out[k] += ab * c
    return tuple(out)


# -- validation -------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str  # "grading" | "skew" | "jacobi" | "format"
    witness: tuple[str, ...]
    residual: Vector

    def __str__(self):
        return f"{self.kind} violation at ({', '.join(self.witness)}): residual {list(map(str, self.residual))}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def jacobi_residual(L: LieSuperAlgebra, i: int, j: int, k: int) -> Vector:
    """(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]."""
    x, y, z = (L.basis_vector(t) for t in (i, j, k))
    px, py, pz = L.parity(i), L.parity(j), L.parity(k)
    terms = (
        (_sign(px * pz), bracket(L, x, L.basis_bracket(j, k))),
        (_sign(py * px), bracket(L, y, L.basis_bracket(k, i))),
        (_sign(pz * py), bracket(L, z, L.basis_bracket(i, j))),
    )
    return tuple(sum((s * t[n] for s, t in terms), ZERO) for n in range(L.dim))


def validate(L: LieSuperAlgebra) -> ValidationReport:
    violations = []
    names = L.names
    for (i, j), vec in L._structure.items():
        target = L.parity(i) + L.parity(j)
        stray = tuple(c if L.parity(k) != target else ZERO for k, c in enumerate(vec))
        if any(stray):
            violations.append(Violation("grading", (names[i], names[j]), stray))
        if i == j and L.parity(i) == Parity.EVEN and any(vec):
            violations.append(Violation("skew", (names[i], names[i]), vec))
    n = L.dim
    for i, j, k in product(range(n), repeat=3):
        res = jacobi_residual(L, i, j, k)
        if any(res):
            violations.append(Violation("jacobi", (names[i], names[j], names[k]), res))
    return ValidationReport(tuple(violations))


# -- subspaces --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Subspace:
    """Graded subspace with an rref-canonical homogeneous basis
    (even vectors first, then odd)."""

    ambient: LieSuperAlgebra = field(repr=False)
    basis: tuple[Vector, ...]
    dims: GradedDim
    pivots: tuple[int, ...] = field(repr=False, default=())

    @classmethod
    def span(cls, L: LieSuperAlgebra, vectors: Iterable[Sequence]) -> "Subspace":
        blocks: tuple[list, list] = ([], [])
        for v in vectors:
            v = L.vector(v)
            if not any(v):
                continue
            p = L.vector_parity(v)
            if p is None:
                raise ValueError(f"non-homogeneous vector {L.format_vector(v)}")
            blocks[p].append(v)
        basis, pivots, counts = [], [], []
        for block in blocks:
            rows, piv = row_space_basis(block, L.dim) if block else ([], [])
            basis.extend(tuple(r) for r in rows)
            pivots.extend(piv)
            counts.append(len(rows))
        return cls(L, tuple(basis), GradedDim(*counts), tuple(pivots))

    @classmethod
    def whole(cls, L: LieSuperAlgebra) -> "Subspace":
        return cls.span(L, (L.basis_vector(i) for i in range(L.dim)))

    @classmethod
    def zero(cls, L: LieSuperAlgebra) -> "Subspace":
        return cls(L, (), GradedDim(0, 0), ())

    @property
    def dim(self) -> int:
        return self.dims.total

    def __len__(self):
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        return solve_in_span(self.basis, self.pivots, list(v)) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def residual(self, v: Sequence) -> list[Fraction]:
        """Reduce ``v`` modulo this subspace (zero at every pivot column)."""
        out = list(v)
        for p, row in zip(self.pivots, self.basis):
            c = out[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        out[j] -= c * x
        return out

    def complement_indices(self) -> list[int]:
        taken = set(self.pivots)
        return [i for i in range(self.ambient.dim) if i not in taken]

    def same_as(self, other: "Subspace") -> bool:
        return self.basis == other.basis

    def __str__(self):
        L = self.ambient
        inner = ", ".join(L.format_vector(v) for v in self.basis)
        return f"{self.dims} span{{{inner}}}"


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    return Subspace.span(U.ambient, list(U.basis) + list(V.basis))


def intersection(U: Subspace, V: Subspace) -> Subspace:
    L = U.ambient
    vectors = []
    for p in (Parity.EVEN, Parity.ODD):
        us = [u for u in U.basis if L.vector_parity(u) == p]
        vs = [v for v in V.basis if L.vector_parity(v) == p]
        if not us or not vs:
            continue
        cols = us + [tuple(-c for c in v) for v in vs]
        m = RationalMatrix.from_columns(cols, L.dim)
        for coeffs in nullspace_basis(m):
            w = [ZERO] * L.dim
            for a, u in zip(coeffs[: len(us)], us):
                if a:
                    for k, c in enumerate(u):
                        w[k] += a * c
            vectors.append(tuple(w))
    return Subspace.span(L, vectors)


def bracket_subspaces(U: Subspace, V: Subspace) -> Subspace:
    """[U, V]: span of brackets of basis vectors (homogeneous inputs give
    homogeneous outputs)."""
    L = U.ambient
    return Subspace.span(L, (bracket(L, u, v) for u in U.basis for v in V.basis))


def derived_subalgebra(L: LieSuperAlgebra) -> Subspace:
    return Subspace.span(L, L._structure.values())


def _preimage_of_centralizing(L: LieSuperAlgebra, modulo: Subspace) -> Subspace:
    """{x : [x, b] lies in ``modulo`` for every basis vector b}."""
    keep = modulo.complement_indices()
    vectors = []
    for p in (Parity.EVEN, Parity.ODD):
        unknowns = list(L.indices(p))
        if not unknowns:
            continue
        rows = []
        for k in range(L.dim):
            images = [modulo.residual(L.basis_bracket(i, k)) for i in unknowns]
            for c in keep:
                rows.append([img[c] for img in images])
        m = RationalMatrix.from_rows(rows, cols=len(unknowns))
        for sol in nullspace_basis(m):
            w = [ZERO] * L.dim
            for i, c in zip(unknowns, sol):
                w[i] = c
            vectors.append(tuple(w))
    return Subspace.span(L, vectors)


def center(L: LieSuperAlgebra) -> Subspace:
    return _preimage_of_centralizing(L, Subspace.zero(L))


def lower_central_series(L: LieSuperAlgebra) -> list[Subspace]:
    """C^0 = L, C^{k+1} = [C^k, L], stopping at the first repeat."""
    whole = Subspace.whole(L)
    series = [whole]
    while True:
        nxt = bracket_subspaces(series[-1], whole)
        if nxt.dims == series[-1].dims:
            return series
        series.append(nxt)
        if nxt.dim == 0:
            return series


def upper_central_series(L: LieSuperAlgebra) -> list[Subspace]:
    """Z_0 = 0, Z_i / Z_{i-1} = Z(L / Z_{i-1}), stopping at the first repeat."""
    series = [Subspace.zero(L)]
    while True:
        nxt = _preimage_of_centralizing(L, series[-1])
        if nxt.dims == series[-1].dims:
            return series
        series.append(nxt)
        if nxt.dim == L.dim:
            return series


def is_nilpotent(L: LieSuperAlgebra) -> bool:
    return lower_central_series(L)[-1].dim == 0


def nilpotency_class(L: LieSuperAlgebra) -> int:
    series = lower_central_series(L)
    if series[-1].dim:
        raise NotNilpotentError(f"{L.name or 'algebra'} is not nilpotent")
    return len(series) - 1


def is_abelian(L: LieSuperAlgebra) -> bool:
    return not L._structure


def is_ideal(I: Subspace) -> tuple[bool, tuple[str, str] | None]:
    L = I.ambient
    for v in I.basis:
        for k in range(L.dim):
            if not I.contains(bracket(L, v, L.basis_vector(k))):
                return False, (L.format_vector(v), L.basis[k].name)
    return True, None


def quotient(L: LieSuperAlgebra, I: Subspace, name: str | None = None) -> LieSuperAlgebra:
    """L / I on the complement spanned by the non-pivot basis vectors of I.

    Basis names of the surviving vectors are kept.
    """
    if I.ambient is not L:
        raise ValueError("subspace belongs to a different algebra")
    ok, witness = is_ideal(I)
    if not ok:
        raise NotAnIdealError(f"[{witness[0]}, {witness[1]}] leaves the subspace", witness)
    keep = I.complement_indices()
    pos = {g: n for n, g in enumerate(keep)}
    structure = {}
    for a, i in enumerate(keep):
        for j in keep[a:]:
            vec = I.residual(L.basis_bracket(i, j))
            if any(vec):
                structure[(pos[i], pos[j])] = [vec[g] for g in keep]
    even = [L.basis[i].name for i in keep if L.parity(i) == Parity.EVEN]
    odd = [L.basis[i].name for i in keep if L.parity(i) == Parity.ODD]
    label = name if name is not None else f"{L.name}/I" if L.name else ""
    return LieSuperAlgebra.from_structure(even, odd, structure, name=label)


def _fresh_names(taken: set[str], names: Sequence[str]) -> list[str]:
    out = []
    for n in names:
        cand = n
        while cand in taken:
            cand += "'"
        taken.add(cand)
        out.append(cand)
    return out


def direct_sum(A: LieSuperAlgebra, B: LieSuperAlgebra, name: str | None = None) -> LieSuperAlgebra:
    """Block sum; B's basis names get primes appended on collision.

    Global order: A even, B even, A odd, B odd.
    """
    taken = set(A.names)
    b_even = _fresh_names(taken, B.even_names)
    b_odd = _fresh_names(taken, B.odd_names)
    ae, be = A.dims.even, B.dims.even
    amap = [i if i < ae else i + be for i in range(A.dim)]
    bmap = [ae + i if i < be else ae + be + A.dims.odd + (i - be) for i in range(B.dim)]
    n = A.dim + B.dim
    structure = {}
    for alg, emb in ((A, amap), (B, bmap)):
        for (i, j), vec in alg._structure.items():
            v = [ZERO] * n
            for k, c in enumerate(vec):
                v[emb[k]] = c
            structure[(emb[i], emb[j])] = v
    label = name if name is not None else f"{A.name} (+) {B.name}"
    return LieSuperAlgebra.from_structure(A.even_names + b_even, A.odd_names + b_odd, structure, name=label)


def structure_equal(A: LieSuperAlgebra, B: LieSuperAlgebra) -> bool:
    """Same graded dims and identical structure constants in the given orders
    (basis names are ignored; this is not an isomorphism test)."""
    return A.dims == B.dims and A._structure == B._structure


def relabel(L: LieSuperAlgebra, order: Sequence[str], name: str | None = None) -> LieSuperAlgebra:
    """Re-express L in a permuted basis; ``order`` lists every name once,
    evens before odds."""
    if sorted(order) != sorted(L.names):
        raise AlgebraFormatError("relabel order must be a permutation of the basis names")
    even = [n for n in order if L.parity(L.index(n)) == Parity.EVEN]
    if list(order[: len(even)]) != even:
        raise AlgebraFormatError("even basis vectors must precede odd ones")
    odd = list(order[len(even):])
    brackets = {}
    for (i, j), vec in L._structure.items():
        brackets[(L.basis[i].name, L.basis[j].name)] = {L.basis[k].name: c for k, c in enumerate(vec) if c}
    return LieSuperAlgebra(even, odd, brackets, name=L.name if name is None else name)
