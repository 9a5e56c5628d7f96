"""Lie algebras by structure constants over the exact rationals.

A :class:`LieAlgebra` stores the full antisymmetric bracket table
``table[i][j] = [e_i, e_j]`` as coordinate tuples.  Constructors accept
only the ``i < j`` half and fill in the rest, so antisymmetry holds by
construction; the Jacobi identity is the only axiom left to check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple, Optional, Sequence

from .errors import SymplieError
from .linalg import (Matrix, Subspace, Vec, is_zero_vector, kernel,
                     unit_vector, vadd, vector, vscale, zero_vector)
from .rationals import ZERO, as_q


class InvalidLieAlgebraError(SymplieError):
    """The bracket table violates the Jacobi identity."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        first = self.violations[0]
        super().__init__(
            f"Jacobi identity fails at basis triple {first.triple}"
            f" (residual {first.residual}); {len(self.violations)} triple(s) total")


class JacobiViolation(NamedTuple):
    triple: tuple
    residual: Vec


@dataclass(frozen=True)
class LieAlgebra:
    basis_names: tuple
    table: tuple  # table[i][j] = coordinates of [e_i, e_j]

    def __post_init__(self):
        n = len(self.basis_names)
        if len(set(self.basis_names)) != n:
            raise ValueError("basis names must be unique")
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise ValueError("bracket table shape mismatch")

    @classmethod
    def from_sparse(cls, names: Sequence[str],
                    brackets: Mapping[tuple, Mapping[int, object]]) -> "LieAlgebra":
        """Build from ``{(i, j): {k: coeff}}`` with ``i < j`` (0-based)."""
        names = tuple(names)
        n = len(names)
        rows = [[zero_vector(n) for _ in range(n)] for _ in range(n)]
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < j < n):
                raise ValueError(f"bracket key ({i}, {j}) must satisfy 0 <= i < j < dim")
            vec = [ZERO] * n
            for k, c in coeffs.items():
                if not 0 <= k < n:
                    raise ValueError(f"bracket value index {k} out of range")
                vec[k] = as_q(c)
            rows[i][j] = tuple(vec)
            rows[j][i] = tuple(-x for x in vec)
        return cls(names, tuple(tuple(r) for r in rows))

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    # -- brackets ------------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> Vec:
        return self.table[i][j]

    def bracket(self, u: Sequence, v: Sequence) -> Vec:
        u, v = vector(u), vector(v)
        n = self.dim
        acc = [ZERO] * n
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.table[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                w = row[j]
                c = ui * vj
                for k, wk in enumerate(w):
                    if wk:
                        acc[k] += c * wk
        return tuple(acc)

    def ad(self, u: Sequence) -> Matrix:
        """Matrix of x -> [u, x]."""
        u = vector(u)
        n = self.dim
        cols = []
        for j in range(n):
            col = [ZERO] * n
            for i, ui in enumerate(u):
                if not ui:
                    continue
                w = self.table[i][j]
                for k, wk in enumerate(w):
                    if wk:
                        col[k] += ui * wk
            cols.append(tuple(col))
        return Matrix.from_cols(cols) if cols else Matrix.zeros(n, 0)

    # -- axioms ---------------------------------------------------------------

    def validate(self) -> tuple:
        """All Jacobi violations on basis triples i < j < k (empty = valid)."""
        n = self.dim
        out = []
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    res = vadd(vadd(self._bv(self.table[i][j], k),
                                    self._bv(self.table[j][k], i)),
                               self._bv(self.table[k][i], j))
                    if not is_zero_vector(res):
                        out.append(JacobiViolation((i, j, k), res))
        return tuple(out)

    def require_valid(self) -> "LieAlgebra":
        violations = self.validate()
        if violations:
            raise InvalidLieAlgebraError(violations)
        return self

    def _bv(self, v: Vec, k: int) -> Vec:
        """[v, e_k] for a coordinate vector v."""
        n = self.dim
        acc = [ZERO] * n
        for i, vi in enumerate(v):
            if not vi:
                continue
            w = self.table[i][k]
            for m, wm in enumerate(w):
                if wm:
                    acc[m] += vi * wm
        return tuple(acc)

    # -- classical invariants ---------------------------------------------------

    def center(self) -> Subspace:
        """{u : [u, x] = 0 for all x}, the intersection of ad kernels."""
        n = self.dim
        if n == 0:
            return Subspace.zero(0)
        rows = []
        for j in range(n):
            # map u -> [u, e_j]; its matrix has column i equal to table[i][j]
            for r in range(n):
                rows.append(tuple(self.table[i][j][r] for i in range(n)))
        return kernel(Matrix.from_rows(rows))

    def derived_subspace(self) -> Subspace:
        gens = [self.table[i][j] for i in range(self.dim)
                for j in range(i + 1, self.dim)]
        return Subspace.span(self.dim, gens)

    def bracket_span(self, a: Subspace, b: Subspace) -> Subspace:
        gens = [self.bracket(u, v) for u in a.columns() for v in b.columns()]
        return Subspace.span(self.dim, gens)

    def lower_central_series(self) -> "LowerCentralSeries":
        """C^1 = g, C^{k+1} = [g, C^k], listed until it stabilizes.

        The nilpotency class is the smallest k with C^{k+1} = 0 (so the
        zero algebra has class 0 and a nonzero abelian algebra class 1),
        or None when the series stabilizes at a nonzero term.
        """
        full = Subspace.full(self.dim)
        terms = [full]
        while True:
            nxt = self.bracket_span(full, terms[-1])
            if nxt == terms[-1]:
                break
            terms.append(nxt)
        nilpotent = terms[-1].dim == 0
        cls: Optional[int] = len(terms) - 1 if nilpotent else None
        return LowerCentralSeries(tuple(terms), cls)

    def derived_series(self) -> "DerivedSeries":
        """D^1 = [g, g], D^{k+1} = [D^k, D^k], until it stabilizes."""
        terms = [self.derived_subspace()]
        while True:
            nxt = self.bracket_span(terms[-1], terms[-1])
            if nxt == terms[-1]:
                break
            terms.append(nxt)
        return DerivedSeries(tuple(terms), terms[-1].dim == 0)

    def is_nilpotent(self) -> bool:
        return self.lower_central_series().nilpotency_class is not None

    def is_solvable(self) -> bool:
        return self.derived_series().solvable

    def trace_character(self) -> Vec:
        """The covector u -> tr(ad_u), evaluated on the basis."""
        return tuple(self.ad(unit_vector(self.dim, i)).trace()
                     for i in range(self.dim))

    def is_unimodular(self) -> bool:
        return is_zero_vector(self.trace_character())

    def is_abelian(self) -> bool:
        return self.derived_subspace().dim == 0

    # -- transport ---------------------------------------------------------------

    def change_of_basis(self, t: Matrix, names: Sequence[str] | None = None) -> "LieAlgebra":
        """Structure constants in the basis given by the columns of t."""
        from .linalg import inverse  # local import keeps module deps one-way

        n = self.dim
        if t.shape != (n, n):
            raise ValueError("change of basis matrix has wrong shape")
        tinv = inverse(t)
        if names is None:
            names = tuple(f"y{k + 1}" for k in range(n))
        sparse = {}
        cols = t.columns()
        for i in range(n):
            for j in range(i + 1, n):
                w = tinv.apply(self.bracket(cols[i], cols[j]))
                entry = {k: c for k, c in enumerate(w) if c}
                if entry:
                    sparse[(i, j)] = entry
        return LieAlgebra.from_sparse(names, sparse)


class LowerCentralSeries(NamedTuple):
    terms: tuple
    nilpotency_class: Optional[int]

    @property
    def dims(self) -> tuple:
        return tuple(t.dim for t in self.terms)


class DerivedSeries(NamedTuple):
    terms: tuple
    solvable: bool

    @property
    def dims(self) -> tuple:
        return tuple(t.dim for t in self.terms)
