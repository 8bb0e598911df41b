"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` values, which are kept in lowest
terms with a positive denominator after every operation.  Matrices are
immutable row-major grids of fractions.  Everything here is pure; values can
be shared freely between threads and processes.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, InputError

Vector = tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^-?[0-9]+(/[0-9]+)?$")

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str | int) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (sign on ``p`` only) into a fraction."""
    if isinstance(text, bool):
        raise InputError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise InputError(f"not a rational: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise InputError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths differ: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths differ: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u: Sequence[Fraction]) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in u)


def is_zero_vector(u: Sequence[Fraction]) -> bool:
    return not any(u)


class Matrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], rows: int | None = None, cols: int | None = None):
        grid = tuple(tuple(Fraction(x) for x in row) for row in data)
        if rows is None:
            rows = len(grid)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise DimensionError(f"ragged or mis-sized grid for a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self._data = grid

    # construction -------------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(((ZERO,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls((unit_vector(n, i) for i in range(n)), n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> Matrix:
        cols = len(columns)
        return cls(((columns[j][i] for j in range(cols)) for i in range(rows)), rows, cols)

    @classmethod
    def block(cls, blocks: Sequence[Sequence[Matrix]]) -> Matrix:
        """Assemble a block matrix from a grid of compatible blocks."""
        out = []
        cols = sum(b.cols for b in blocks[0]) if blocks else 0
        for brow in blocks:
            height = brow[0].rows
            if any(b.rows != height for b in brow) or sum(b.cols for b in brow) != cols:
                raise DimensionError("incompatible block shapes")
            for i in range(height):
                out.append(tuple(x for b in brow for x in b._data[i]))
        return cls(out, len(out), cols)

    # access ---------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def to_rows(self) -> tuple[Vector, ...]:
        return self._data

    def flatten(self) -> Vector:
        return tuple(x for r in self._data for x in r)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._data)

    # algebra --------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(
            (tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.rows,
            self.cols,
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(
            (tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.rows,
            self.cols,
        )

    def __neg__(self) -> Matrix:
        return Matrix((tuple(-a for a in r) for r in self._data), self.rows, self.cols)

    def scale(self, c) -> Matrix:
        c = Fraction(c)
        return Matrix((tuple(c * a for a in r) for r in self._data), self.rows, self.cols)

    def __rmul__(self, c) -> Matrix:
        return self.scale(c)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols_b = [other.column(j) for j in range(other.cols)]
        return Matrix(
            (tuple(sum((a * b for a, b in zip(r, c) if a and b), ZERO) for c in cols_b) for r in self._data),
            self.rows,
            other.cols,
        )

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"cannot apply a {self.shape} matrix to a length-{len(v)} vector")
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), ZERO) for r in self._data)

    def transpose(self) -> Matrix:
        return Matrix.from_columns(self._data, self.cols) if self.rows else Matrix.zeros(self.cols, 0)

    def commutator(self, other: Matrix) -> Matrix:
        return self @ other - other @ self

    def _same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """Row-reduce ``rows`` in place; return the pivot columns."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] *= inv
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j in nz:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the strictly increasing pivot columns.

    Pivots are taken as the first nonzero entry in column order, so the
    output is the unique RREF of ``m``.
    """
    rows = [list(r) for r in m.to_rows()]
    pivots = _rref_rows(rows, m.cols)
    return Matrix(rows, m.rows, m.cols), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


class Subspace:
    """A subspace of Q^n held by its canonical (RREF) basis.

    Two subspaces are equal exactly when their canonical bases coincide.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Iterable[Sequence] = ()):
        rows = [list(vector(v)) for v in basis]
        for v in rows:
            if len(v) != ambient_dim:
                raise DimensionError(f"basis vector of length {len(v)} in Q^{ambient_dim}")
        pivots = _rref_rows(rows, ambient_dim)
        self.ambient_dim = ambient_dim
        self.basis: tuple[Vector, ...] = tuple(tuple(rows[i]) for i in range(len(pivots)))

    @classmethod
    def whole(cls, n: int) -> Subspace:
        return cls(n, (unit_vector(n, i) for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        v = vector(v)
        if len(v) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(v)} tested against Q^{self.ambient_dim}")
        if not any(v):
            return True
        return Subspace(self.ambient_dim, self.basis + (v,)).dim == self.dim

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim})"


def nullspace(m: Matrix) -> Subspace:
    """Right kernel ``{v : m v = 0}`` in canonical form."""
    r, pivots = rref(m)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        basis.append(v)
    return Subspace(m.cols, basis)


def solve_affine(m: Matrix, b: Sequence) -> tuple[Vector, Subspace] | None:
    """Solve ``m x = b`` exactly.

    Returns ``None`` when the system is inconsistent, otherwise a particular
    solution (free variables set to zero) together with the kernel of ``m``.
    """
    b = vector(b)
    if len(b) != m.rows:
        raise DimensionError(f"right-hand side has length {len(b)}, matrix has {m.rows} rows")
    rows = [list(r) + [bi] for r, bi in zip(m.to_rows(), b)]
    pivots = _rref_rows(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for i, p in enumerate(pivots):
        x[p] = rows[i][m.cols]
    return tuple(x), nullspace(m)


def span_dim(vectors: Iterable[Sequence], n: int) -> int:
    return Subspace(n, vectors).dim


def inverse(m: Matrix) -> Matrix:
    """Exact inverse of a square matrix; raises ``ValueError`` if singular."""
    if m.rows != m.cols:
        raise DimensionError(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    rows = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(m.to_rows())]
    pivots = _rref_rows(rows, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError("matrix is singular")
    return Matrix((r[n:] for r in rows), n, n)
