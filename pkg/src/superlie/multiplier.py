"""Schur multiplier of a Lie superalgebra as degree-2 Chevalley-Eilenberg
homology with trivial coefficients, plus the derived invariants and an
explicit stem cover.

Chains live in the super exterior powers: ``x ^ y = -(-1)^{|x||y|} y ^ x``,
so even-even pairs alternate, odd-odd pairs commute and an odd vector may
repeat.  Canonical basis elements list global basis indices in
nondecreasing order, with even indices strictly increasing.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .exactlin import ZERO, RationalMatrix, rank, row_space_basis, rref_with_pivots
from .superalg import GradedDim, LieSuperAlgebra, Parity, Subspace, _sign


@dataclass(frozen=True)
class PairBasisElement:
    kind: str  # "ee" (i<j), "eo", "oo" (a<=b)
    i: int
    j: int

    @property
    def parity(self) -> Parity:
        return Parity.ODD if self.kind == "eo" else Parity.EVEN


@dataclass(frozen=True)
class TripleBasisElement:
    kind: str  # "eee", "eeo", "eoo", "ooo"
    i: int
    j: int
    k: int

    @property
    def parity(self) -> Parity:
        return Parity(self.kind.count("o") % 2)


@lru_cache(maxsize=None)
def _c2(m: int, n: int) -> tuple[PairBasisElement, ...]:
    ev, od = range(m), range(m, m + n)
    out = [PairBasisElement("ee", i, j) for i, j in combinations(ev, 2)]
    out += [PairBasisElement("eo", i, a) for i in ev for a in od]
    out += [PairBasisElement("oo", a, b) for a, b in combinations_with_replacement(od, 2)]
    return tuple(out)


@lru_cache(maxsize=None)
def _c3(m: int, n: int) -> tuple[TripleBasisElement, ...]:
    ev, od = range(m), range(m, m + n)
    out = [TripleBasisElement("eee", i, j, k) for i, j, k in combinations(ev, 3)]
    out += [TripleBasisElement("eeo", i, j, a) for i, j in combinations(ev, 2) for a in od]
    out += [TripleBasisElement("eoo", i, a, b) for i in ev for a, b in combinations_with_replacement(od, 2)]
    out += [TripleBasisElement("ooo", a, b, c) for a, b, c in combinations_with_replacement(od, 3)]
    return tuple(out)


def c2_basis(dims: GradedDim) -> list[PairBasisElement]:
    """Basis of the super exterior square; length (1/2)[(m+n)^2 + (n-m)]."""
    return list(_c2(dims.even, dims.odd))


def c3_basis(dims: GradedDim) -> list[TripleBasisElement]:
    return list(_c3(dims.even, dims.odd))


def exterior_square_dim(dims: GradedDim) -> int:
    m, n = dims.even, dims.odd
    return ((m + n) ** 2 + (n - m)) // 2


class _Chains:
    """Index bookkeeping for C2 and C3 of one algebra."""

    def __init__(self, L: LieSuperAlgebra):
        self.L = L
        self.c2 = _c2(L.dims.even, L.dims.odd)
        self.c3 = _c3(L.dims.even, L.dims.odd)
        self.col2 = {(e.i, e.j): n for n, e in enumerate(self.c2)}
        self.par = [int(L.parity(i)) for i in range(L.dim)]

    def wedge(self, a: int, b: int) -> tuple[int, int] | None:
        """Canonical (column, sign) for the pair a ^ b, or None when it is zero."""
        if a == b:
            return None if self.par[a] == 0 else (self.col2[(a, a)], 1)
        if a < b:
            return self.col2[(a, b)], 1
        # b ^ a with b earlier: a ^ b = -(-1)^{|a||b|} b ^ a
        return self.col2[(b, a)], -_sign(self.par[a] * self.par[b])

    def d3_column(self, t: TripleBasisElement) -> dict[int, int | object]:
        """d(x^y^z) = -[x,y]^z + (-1)^{|y||z|}[x,z]^y - (-1)^{|x|(|y|+|z|)}[y,z]^x."""
        x, y, z = t.i, t.j, t.k
        px, py, pz = self.par[x], self.par[y], self.par[z]
        col: dict[int, object] = {}
        for s, (a, b), c in (
            (-1, (x, y), z),
            (_sign(py * pz), (x, z), y),
            (-_sign(px * (py + pz)), (y, z), x),
        ):
            vec = self.L._table[a][b]
            if vec is None:
                continue
            for k, coef in enumerate(vec):
                if not coef:
                    continue
                w = self.wedge(k, c)
                if w is None:
                    continue
                row, sw = w
                col[row] = col.get(row, ZERO) + s * sw * coef
        return {r: v for r, v in col.items() if v}


def d2_matrix(L: LieSuperAlgebra) -> RationalMatrix:
    """C2 -> L, x ^ y |-> [x, y]; rows are basis vectors of L."""
    ch = _Chains(L)
    cols = [L.basis_bracket(e.i, e.j) for e in ch.c2]
    return RationalMatrix.from_columns(cols, L.dim)


def d3_matrix(L: LieSuperAlgebra) -> RationalMatrix:
    """C3 -> C2 in the canonical bases."""
    ch = _Chains(L)
    m = RationalMatrix(len(ch.c2), len(ch.c3))
    for j, t in enumerate(ch.c3):
        for r, v in ch.d3_column(t).items():
            m[r, j] = v
    return m


def _blocks(L: LieSuperAlgebra):
    """Per parity: (L row indices, C2 column indices, C3 column indices)."""
    ch = _Chains(L)
    out = {}
    for p in (Parity.EVEN, Parity.ODD):
        rows = list(L.indices(p))
        c2 = [n for n, e in enumerate(ch.c2) if e.parity == p]
        c3 = [n for n, t in enumerate(ch.c3) if t.parity == p]
        out[p] = (rows, c2, c3)
    return ch, out


def _submatrix(m: RationalMatrix, rows: Sequence[int], cols: Sequence[int]) -> RationalMatrix:
    return RationalMatrix.from_rows([[m[r, c] for c in cols] for r in rows], cols=len(cols))


@dataclass(frozen=True)
class MultiplierResult:
    graded: GradedDim
    kernel_rank: GradedDim  # dim ker d2 per parity
    image_rank: GradedDim  # rank d3 per parity

    @property
    def total(self) -> int:
        return self.graded.total


def multiplier_dim(L: LieSuperAlgebra) -> MultiplierResult:
    """dim H_2(L) computed independently on the even and odd chain blocks."""
    d2, d3 = d2_matrix(L), d3_matrix(L)
    _, blocks = _blocks(L)
    ker, img = [], []
    for p in (Parity.EVEN, Parity.ODD):
        rows, c2, c3 = blocks[p]
        ker.append(len(c2) - rank(_submatrix(d2, rows, c2)))
        img.append(rank(_submatrix(d3, c2, c3)))
    return MultiplierResult(
        GradedDim(ker[0] - img[0], ker[1] - img[1]), GradedDim(*ker), GradedDim(*img)
    )


def multiplier_total_unblocked(L: LieSuperAlgebra) -> int:
    """Same homology from the full (unblocked) matrices; a cross-check."""
    d2, d3 = d2_matrix(L), d3_matrix(L)
    return d2.cols - rank(d2) - rank(d3)


def t_invariant(L: LieSuperAlgebra, mult: int | None = None) -> int:
    if mult is None:
        mult = multiplier_dim(L).total
    return exterior_square_dim(L.dims) - mult


def s_bound(dims: GradedDim) -> int:
    """(1/2)(m+n-2)(m+n-1) + n + 1."""
    k = dims.total
    return (k - 2) * (k - 1) // 2 + dims.odd + 1


def s_invariant(L: LieSuperAlgebra, mult: int | None = None) -> int:
    if mult is None:
        mult = multiplier_dim(L).total
    return s_bound(L.dims) - mult


# -- stem cover -------------------------------------------------------------


@dataclass(frozen=True)
class StemCover:
    cover: LieSuperAlgebra
    kernel: Subspace
    projection: tuple[int | None, ...]  # cover index -> base index (None on the kernel)


def _homology_projection(d2: RationalMatrix, d3: RationalMatrix):
    """For one parity block return (W dimension, pi) where pi maps a C2
    column index to its coordinates in W = ker d2 / im d3.

    C2 is split as span(pivot columns of rref d2) + ker d2, and ker d2 as
    im d3 + span(kernel vectors at non-pivot positions of im d3).
    """
    _, pivots = rref_with_pivots(d2)
    # the canonical kernel vectors carry the identity on the free columns
    free = [c for c in range(d2.cols) if c not in set(pivots)]
    position = {f: t for t, f in enumerate(free)}
    image = [[d3[r, c] for r in free] for c in range(d3.cols)]
    image = [v for v in image if any(v)]
    im_rows, im_pivots = row_space_basis(image, len(free)) if image else ([], [])
    complement = [t for t in range(len(free)) if t not in set(im_pivots)]

    def pi(col: int) -> list:
        u = [ZERO] * len(free)
        if col not in position:
            return [ZERO] * len(complement)
        u[position[col]] = 1
        for p, row in zip(im_pivots, im_rows):
            c = u[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        u[j] -= c * x
        return [u[q] for q in complement]

    return len(complement), pi


def stem_cover(L: LieSuperAlgebra, kernel_prefix: str = "m") -> StemCover:
    """Central extension K = L + W with W = H_2(L) inside Z(K) and K'.

    ``[x, y]_K = [x, y]_L + pi(x ^ y)`` where pi projects C2 onto a fixed
    complement of im d3 in ker d2 along a complement of ker d2.
    """
    ch, blocks = _blocks(L)
    d2, d3 = d2_matrix(L), d3_matrix(L)
    proj = {}
    wdim = []
    for p in (Parity.EVEN, Parity.ODD):
        rows, c2, c3 = blocks[p]
        size, pi = _homology_projection(_submatrix(d2, rows, c2), _submatrix(d3, c2, c3))
        wdim.append(size)
        local = {g: t for t, g in enumerate(c2)}
        proj[p] = (local, pi)

    taken = set(L.names)

    def fresh(tag, count):
        names, k = [], 1
        while len(names) < count:
            cand = f"{kernel_prefix}{tag}{k}"
            if cand not in taken:
                names.append(cand)
                taken.add(cand)
            k += 1
        return names

    w_even, w_odd = fresh("e", wdim[0]), fresh("o", wdim[1])
    me, mo = L.dims.even, L.dims.odd
    # cover order: L even, W even, L odd, W odd
    emb = [i if i < me else i + wdim[0] for i in range(L.dim)]
    w_start = {Parity.EVEN: me, Parity.ODD: me + wdim[0] + mo}
    n = L.dim + wdim[0] + wdim[1]
    structure = {}
    for i in range(L.dim):
        for j in range(i, L.dim):
            v = [ZERO] * n
            for k, c in enumerate(L.basis_bracket(i, j)):
                if c:
                    v[emb[k]] = c
            w = ch.wedge(i, j)
            if w is not None:
                col, sign = w
                p = ch.c2[col].parity
                local, pi = proj[p]
                for t, c in enumerate(pi(local[col])):
                    if c:
                        v[w_start[p] + t] += sign * c
            if any(v):
                structure[(emb[i], emb[j])] = v
    K = LieSuperAlgebra.from_structure(
        L.even_names + w_even, L.odd_names + w_odd, structure,
        name=f"cover({L.name})" if L.name else "cover",
    )
    kernel = Subspace.span(K, [K.basis_vector(nm) for nm in w_even + w_odd])
    projection = [None] * n
    for i, g in enumerate(emb):
        projection[g] = i
    return StemCover(K, kernel, tuple(projection))
