"""Deterministic exact linear algebra over the rationals.

Matrices are immutable row-major grids of exact rationals.  Subspaces
are stored in reduced column echelon form with strictly increasing
pivot rows, so two equal subspaces always carry identical basis
matrices and compare equal as plain values.

Every elimination pivots on the first nonzero candidate in row-major
order; there is no scoring or heuristics, which keeps all derived data
(kernels, solved coordinates, canonical bases) reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import SymplieError
from .rationals import ONE, ZERO, as_q

Vec = tuple


class NoSolutionError(SymplieError):
    """The right-hand side is not in the column span of the matrix."""


class SingularMatrixError(SymplieError):
    """Inversion was requested for a matrix without full rank."""


# ---------------------------------------------------------------------------
# vectors

def vector(values: Iterable) -> Vec:
    return tuple(as_q(v) for v in values)


def zero_vector(n: int) -> Vec:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vec:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def vscale(c, a: Vec) -> Vec:
    c = as_q(c)
    if not c:
        return zero_vector(len(a))
    return tuple(c * x for x in a)


def vdot(a: Vec, b: Vec):
    acc = ZERO
    for x, y in zip(a, b, strict=True):
        if x and y:
            acc += x * y
    return acc


def is_zero_vector(a: Vec) -> bool:
    return not any(a)


# ---------------------------------------------------------------------------
# matrices

@dataclass(frozen=True)
class Matrix:
    """Immutable rows x cols grid of exact rationals."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("column count mismatch")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        data = tuple(tuple(as_q(x) for x in row) for row in rows)
        ncols = len(data[0]) if data else 0
        return cls(len(data), ncols, data)

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence]) -> "Matrix":
        cols = [tuple(as_q(x) for x in c) for c in cols]
        nrows = len(cols[0]) if cols else 0
        for c in cols:
            if len(c) != nrows:
                raise ValueError("ragged columns")
        data = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls(nrows, len(cols), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(unit_vector(n, i) for i in range(n)))

    # -- access ------------------------------------------------------------

    def entry(self, i: int, j: int):
        return self.entries[i][j]

    def row(self, i: int) -> Vec:
        return self.entries[i]

    def col(self, j: int) -> Vec:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list:
        return [self.col(j) for j in range(self.cols)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    # -- arithmetic ----------------------------------------------------------

    def _same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      tuple(tuple(a + b for a, b in zip(r1, r2))
                            for r1, r2 in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      tuple(tuple(a - b for a, b in zip(r1, r2))
                            for r1, r2 in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols,
                      tuple(tuple(-a for a in row) for row in self.entries))

    def scale(self, c) -> "Matrix":
        c = as_q(c)
        return Matrix(self.rows, self.cols,
                      tuple(tuple(c * a for a in row) for row in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        ocols = other.entries
        out = []
        for row in self.entries:
            acc = [ZERO] * other.cols
            for k, a in enumerate(row):
                if not a:
                    continue
                orow = ocols[k]
                for j, b in enumerate(orow):
                    if b:
                        acc[j] += a * b
            out.append(tuple(acc))
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence) -> Vec:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(vdot(row, tuple(v)) for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self.col(j) for j in range(self.cols)))

    def trace(self):
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc += self.entries[i][i]
        return acc

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return Matrix(self.rows, self.cols + other.cols,
                      tuple(r1 + r2 for r1, r2 in zip(self.entries, other.entries)))


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return (a @ b) - (b @ a)


# ---------------------------------------------------------------------------
# elimination

def _rref_rows(rows: list, ncols: int) -> list:
    """In-place reduced row echelon form; returns pivot column indices.

    First-nonzero pivoting, zero-entry skipping in the update loop.  The
    skipping matters: block-sparse systems (the brute-force product
    solver assembles one of size dim^3) reduce in near-linear time.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != ONE:
            inv = ONE / pv
            rows[r] = [inv * x for x in rows[r]]
        prow = rows[r]
        support = [k for k in range(c, ncols) if prow[k]]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if not f:
                continue
            target = rows[i]
            for k in support:
                target[k] -= f * prow[k]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


@dataclass(frozen=True)
class RrefResult:
    matrix: Matrix
    pivot_cols: tuple
    rank: int


def rref(m: Matrix) -> RrefResult:
    rows = [list(row) for row in m.entries]
    pivots = _rref_rows(rows, m.cols)
    reduced = Matrix(m.rows, m.cols, tuple(tuple(r) for r in rows))
    return RrefResult(reduced, tuple(pivots), len(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def solve(m: Matrix, b: Sequence) -> Vec:
    """One exact solution of m x = b; free coordinates are set to zero.

    Raises :class:`NoSolutionError` when b is outside the column span.
    """
    b = vector(b)
    if len(b) != m.rows:
        raise ValueError("right-hand side length mismatch")
    rows = [list(row) + [bi] for row, bi in zip(m.entries, b)]
    pivots = _rref_rows(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        raise NoSolutionError("right-hand side not in the image")
    x = [ZERO] * m.cols
    for r, c in enumerate(pivots):
        x[c] = rows[r][m.cols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if not m.is_square:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    rows = [list(row) + list(unit_vector(n, i)) for i, row in enumerate(m.entries)]
    pivots = _rref_rows(rows, 2 * n)
    if len(pivots) < n or any(p >= n for p in pivots):
        raise SingularMatrixError("matrix is singular")
    return Matrix(n, n, tuple(tuple(row[n:]) for row in rows))


def kernel(m: Matrix) -> "Subspace":
    """Null space of m as a canonical subspace of Q^cols."""
    res = rref(m)
    pivot_set = set(res.pivot_cols)
    free = [c for c in range(m.cols) if c not in pivot_set]
    gens = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, c in enumerate(res.pivot_cols):
            v[c] = -res.matrix.entry(r, f)
        gens.append(tuple(v))
    return Subspace.span(m.cols, gens)


# ---------------------------------------------------------------------------
# subspaces

@dataclass(frozen=True)
class Subspace:
    """Canonical subspace of Q^n.

    basis columns are in reduced column echelon form: unit pivots on
    strictly increasing rows, zeros elsewhere in each pivot row.  Value
    equality therefore decides subspace equality.
    """

    ambient_dim: int
    basis: Matrix

    def __post_init__(self):
        if self.basis.rows != self.ambient_dim:
            raise ValueError("basis rows must equal the ambient dimension")
        last = -1
        for j in range(self.basis.cols):
            col = self.basis.col(j)
            pivot = next((i for i, x in enumerate(col) if x), None)
            if pivot is None or pivot <= last or col[pivot] != ONE:
                raise ValueError("basis is not in reduced column echelon form")
            for k in range(self.basis.cols):
                if k != j and self.basis.entry(pivot, k):
                    raise ValueError("basis is not fully reduced")
            last = pivot

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [list(vector(v)) for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError("spanning vector has wrong length")
        _rref_rows(rows, ambient_dim)
        cols = [tuple(r) for r in rows if any(r)]
        return cls(ambient_dim, Matrix.from_cols(cols) if cols
                   else Matrix.zeros(ambient_dim, 0))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(ambient_dim, 0))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.cols

    def columns(self) -> list:
        return self.basis.columns()

    def pivot_rows(self) -> list:
        out = []
        for j in range(self.basis.cols):
            col = self.basis.col(j)
            out.append(next(i for i, x in enumerate(col) if x))
        return out

    def contains(self, v: Sequence) -> bool:
        v = list(vector(v))
        if len(v) != self.ambient_dim:
            raise ValueError("vector length mismatch")
        for j, pivot in enumerate(self.pivot_rows()):
            c = v[pivot]
            if c:
                col = self.basis.col(j)
                for i in range(self.ambient_dim):
                    if col[i]:
                        v[i] -= c * col[i]
        return not any(v)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(c) for c in self.columns())


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return Subspace.span(a.ambient_dim, a.columns() + b.columns())


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked system [A | -B]."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(n)
    stacked = a.basis.hstack(-b.basis)
    gens = []
    for k in kernel(stacked).columns():
        coeffs = k[:a.dim]
        vec = [ZERO] * n
        for j, c in enumerate(coeffs):
            if not c:
                continue
            col = a.basis.col(j)
            for i in range(n):
                if col[i]:
                    vec[i] += c * col[i]
        gens.append(tuple(vec))
    return Subspace.span(n, gens)
