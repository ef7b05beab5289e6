"""Dense exact linear algebra over the rationals.

Entries are :class:`fractions.Fraction`; integers are accepted on input and
promoted.  Elimination skips zero entries, which keeps the (very sparse)
chain-complex matrices cheap without changing the dense storage model.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value) -> Fraction:
    """Coerce int, Fraction or a ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class RationalMatrix:
    """Row-major dense matrix of Fractions with an explicit shape.

    The shape is kept separately so that 0 x n and n x 0 matrices are
    representable.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Iterable | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix shape")
        self.rows = rows
        self.cols = cols
        if entries is None:
            self._data = [[ZERO] * cols for _ in range(rows)]
            return
        flat = [as_rational(e) for e in entries]
        if len(flat) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(flat)}"
            )
        self._data = [flat[r * cols:(r + 1) * cols] for r in range(rows)]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count required for a matrix without rows")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RationalMatrix":
        m = cls(rows, len(columns))
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise ValueError("column length does not match row count")
            for i, v in enumerate(col):
                if v:
                    m._data[i][j] = as_rational(v)
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        m = cls(n, n)
        for i in range(n):
            m._data[i][i] = ONE
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> list[Fraction]:
        return [e for r in self._data for e in r]

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self._data[i][j]

    def __setitem__(self, idx: tuple[int, int], value) -> None:
        i, j = idx
        self._data[i][j] = as_rational(value)

    def row(self, i: int) -> list[Fraction]:
        return list(self._data[i])

    def column(self, j: int) -> list[Fraction]:
        return [r[j] for r in self._data]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def copy(self) -> "RationalMatrix":
        m = RationalMatrix(self.rows, self.cols)
        m._data = [list(r) for r in self._data]
        return m

    def transpose(self) -> "RationalMatrix":
        m = RationalMatrix(self.cols, self.rows)
        for i, r in enumerate(self._data):
            for j, v in enumerate(r):
                if v:
                    m._data[j][i] = v
        return m

    def is_zero(self) -> bool:
        return not any(v for r in self._data for v in r)

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            out = RationalMatrix(self.rows, other.cols)
            for i, r in enumerate(self._data):
                acc = out._data[i]
                for k, a in enumerate(r):
                    if not a:
                        continue
                    for j, b in enumerate(other._data[k]):
                        if b:
                            acc[j] += a * b
            return out
        vec = list(other)
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum((a * b for a, b in zip(r, vec) if a and b), ZERO) for r in self._data]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(map(tuple, self._data))))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self._data)
        return f"RationalMatrix({self.rows}x{self.cols}, [{body}])"


def _rref_rows(data: list[list[Fraction]], cols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan on a list of rows; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    nrows = len(data)
    for c in range(cols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if data[i][c]), None)
        if p is None:
            continue
        data[r], data[p] = data[p], data[r]
        prow = data[r]
        inv = 1 / prow[c]
        if inv != 1:
            for j in range(c, cols):
                if prow[j]:
                    prow[j] *= inv
        support = [j for j in range(c, cols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = data[i]
            f = row[c]
            if not f:
                continue
            for j in support:
                row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return data, pivots


def rref_with_pivots(m: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    out = m.copy()
    _, pivots = _rref_rows(out._data, out.cols)
    return out, pivots


def rref(m: RationalMatrix) -> RationalMatrix:
    """Reduced row echelon form (unique; pivots are 1, pivot columns otherwise 0)."""
    return rref_with_pivots(m)[0]


def rank(m: RationalMatrix) -> int:
    # eliminate along the shorter side
    work = m if m.rows <= m.cols else m.transpose()
    data = [list(r) for r in work._data]
    return len(_rref_rows(data, work.cols)[1])


def nullspace_basis(m: RationalMatrix) -> list[list[Fraction]]:
    """Canonical kernel basis: one vector per free column, in increasing
    column order, with that free variable set to 1 and the others to 0."""
    red, pivots = rref_with_pivots(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, pc in enumerate(pivots):
            coeff = red._data[r][f]
            if coeff:
                v[pc] = -coeff
        basis.append(v)
    return basis


def row_space_basis(vectors: Sequence[Sequence], length: int) -> tuple[list[list[Fraction]], list[int]]:
    """rref-canonical basis of span(vectors) together with its pivot columns."""
    data = [[as_rational(x) for x in v] for v in vectors]
    if any(len(v) != length for v in data):
        raise ValueError("vector length mismatch")
    data, pivots = _rref_rows(data, length)
    return data[: len(pivots)], pivots


def solve_in_span(basis_rref: Sequence[Sequence[Fraction]], pivots: Sequence[int],
                  vector: Sequence[Fraction]) -> list[Fraction] | None:
    """Coordinates of ``vector`` in an rref basis, or None if it is not in the span."""
    coords = [vector[p] for p in pivots]
    residual = list(vector)
    for c, row in zip(coords, basis_rref):
        if c:
            for j, x in enumerate(row):
                if x:
                    residual[j] -= c * x
    if any(residual):
        return None
    return coords
