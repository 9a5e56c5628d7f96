"""Symplectic Lie algebras and their canonical product.

A symplectic Lie algebra pairs a Lie algebra with a nondegenerate skew
form omega that is closed:

    omega([u,v], w) + omega([v,w], u) + omega([w,u], v) = 0.

Such a pair carries a distinguished torsion-free product, written
``u o v`` below, determined pointwise by

    3 omega(u o v, w) = omega([u,v], w) + omega([u,w], v)

whose left multiplications are omega-skew and satisfy
``u o v - v o u = [u, v]``.  The structure is called flat when the
curvature of this product vanishes, equivalently when the product is
left-symmetric.  A second product, the natural one, is defined by
``omega(nat_u v, w) = omega(v, [w,u])``; it always has zero curvature
but is symplectic only in the abelian case.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional, Sequence

from .errors import SymplieError
from .lie import LieAlgebra
from .linalg import (Matrix, Subspace, Vec, commutator, inverse,
                     is_zero_vector, kernel, rank, subspace_intersect,
                     unit_vector, vdot, vector, zero_vector)
from .rationals import ONE, THIRD, ZERO, Q, as_q


class InvalidSymplecticError(SymplieError):
    """The (algebra, form) pair violates the symplectic axioms."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(self.violations))


class DegenerateFormError(SymplieError):
    """A nondegenerate skew form was required."""


class NotLieAdmissibleError(SymplieError):
    """curvature() needs a product with u o v - v o u = [u, v]."""


class FlatnessInvariantError(SymplieError):
    """Internal: the redundant flatness criteria disagreed."""


# ---------------------------------------------------------------------------
# skew forms

@dataclass(frozen=True)
class SkewForm:
    matrix: Matrix

    def __post_init__(self):
        if not self.matrix.is_square:
            raise ValueError("form matrix must be square")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def pair(self, u: Sequence, v: Sequence):
        return vdot(vector(u), self.matrix.apply(vector(v)))

    def is_skew(self) -> bool:
        m = self.matrix
        return all(m.entry(i, j) == -m.entry(j, i)
                   for i in range(m.rows) for j in range(i, m.cols))

    def is_nondegenerate(self) -> bool:
        return rank(self.matrix) == self.dim

    @cached_property
    def inverse_matrix(self) -> Matrix:
        try:
            return inverse(self.matrix)
        except SymplieError as exc:
            raise DegenerateFormError("form is degenerate") from exc

    @cached_property
    def dual_matrix(self) -> Matrix:
        """Inverse of the transposed Gram matrix; see dual_of_covector."""
        return -self.inverse_matrix

    def dual_of_covector(self, phi: Sequence) -> Vec:
        """The unique x with omega(x, e_k) = phi_k for every k."""
        return self.dual_matrix.apply(vector(phi))

    def adjoint_map(self, f: Matrix) -> Matrix:
        """f* with omega(f(x), y) = omega(x, f*(y));  f* = W^-1 f^T W."""
        if f.shape != (self.dim, self.dim):
            raise ValueError("endomorphism shape mismatch")
        return self.inverse_matrix @ f.transpose() @ self.matrix


class SubspaceClass(enum.Enum):
    NONDEGENERATE = "nondegenerate"
    DEGENERATE = "degenerate"
    TOTALLY_ISOTROPIC = "totally_isotropic"
    LAGRANGIAN = "lagrangian"


# ---------------------------------------------------------------------------
# bilinear product tensors

@dataclass(frozen=True)
class ProductTensor:
    """A bilinear product on Q^dim: table[i][j] = e_i o e_j."""

    dim: int
    table: tuple

    def __post_init__(self):
        if len(self.table) != self.dim or any(len(r) != self.dim for r in self.table):
            raise ValueError("product table shape mismatch")

    @classmethod
    def from_sparse(cls, dim: int, entries) -> "ProductTensor":
        rows = [[zero_vector(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in entries.items():
            vec = [ZERO] * dim
            for k, c in coeffs.items():
                vec[k] = as_q(c)
            rows[i][j] = tuple(vec)
        return cls(dim, tuple(tuple(r) for r in rows))

    def basis_product(self, i: int, j: int) -> Vec:
        return self.table[i][j]

    def apply(self, u: Sequence, v: Sequence) -> Vec:
        u, v = vector(u), vector(v)
        acc = [ZERO] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.table[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                c = ui * vj
                w = row[j]
                for k, wk in enumerate(w):
                    if wk:
                        acc[k] += c * wk
        return tuple(acc)

    def left(self, u: Sequence) -> Matrix:
        """L_u : x -> u o x."""
        u = vector(u)
        cols = []
        for j in range(self.dim):
            col = [ZERO] * self.dim
            for i, ui in enumerate(u):
                if not ui:
                    continue
                w = self.table[i][j]
                for k, wk in enumerate(w):
                    if wk:
                        col[k] += ui * wk
            cols.append(tuple(col))
        return Matrix.from_cols(cols) if cols else Matrix.zeros(self.dim, 0)

    def right(self, u: Sequence) -> Matrix:
        """R_u : x -> x o u."""
        u = vector(u)
        cols = []
        for j in range(self.dim):
            col = [ZERO] * self.dim
            row = self.table[j]
            for i, ui in enumerate(u):
                if not ui:
                    continue
                w = row[i]
                for k, wk in enumerate(w):
                    if wk:
                        col[k] += ui * wk
            cols.append(tuple(col))
        return Matrix.from_cols(cols) if cols else Matrix.zeros(self.dim, 0)

    def associator_basis(self, i: int, j: int, k: int) -> Vec:
        """(e_i o e_j) o e_k - e_i o (e_j o e_k)."""
        n = self.dim
        first = self.apply(self.table[i][j], unit_vector(n, k))
        second = self.apply(unit_vector(n, i), self.table[j][k])
        return tuple(a - b for a, b in zip(first, second))

    def left_symmetry_violations(self) -> tuple:
        """Basis triples (i, j, k), i < j, where ass(i,j,k) != ass(j,i,k)."""
        out = []
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    a = self.associator_basis(i, j, k)
                    b = self.associator_basis(j, i, k)
                    if a != b:
                        out.append((i, j, k))
        return tuple(out)

    def is_associative(self) -> bool:
        n = self.dim
        return all(is_zero_vector(self.associator_basis(i, j, k))
                   for i in range(n) for j in range(n) for k in range(n))

    def is_zero(self) -> bool:
        return all(is_zero_vector(v) for row in self.table for v in row)

    def product_span(self) -> Subspace:
        gens = [v for row in self.table for v in row]
        return Subspace.span(self.dim, gens)


# ---------------------------------------------------------------------------
# validation

def symplectic_violations(algebra: LieAlgebra, form: SkewForm) -> list:
    """Human-readable list of axiom violations (empty means valid)."""
    out = []
    n = algebra.dim
    if form.dim != n:
        return [f"form dimension {form.dim} does not match algebra dimension {n}"]
    if n % 2 != 0:
        out.append(f"dimension {n} is odd")
    for violation in algebra.validate():
        out.append(f"Jacobi identity fails at basis triple {violation.triple}")
    if not form.is_skew():
        out.append("form matrix is not skew-symmetric")
    elif not form.is_nondegenerate():
        out.append("form is degenerate")
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total = (form.pair(algebra.table[i][j], unit_vector(n, k))
                         + form.pair(algebra.table[j][k], unit_vector(n, i))
                         + form.pair(algebra.table[k][i], unit_vector(n, j)))
                if total:
                    out.append(f"form is not closed at basis triple ({i}, {j}, {k})")
    return out


def validate_symplectic(algebra: LieAlgebra, form: SkewForm) -> "SymplecticLieAlgebra":
    violations = symplectic_violations(algebra, form)
    if violations:
        raise InvalidSymplecticError(violations)
    return SymplecticLieAlgebra(algebra, form)


# ---------------------------------------------------------------------------
# the main wrapper

class FlatnessChecks(NamedTuple):
    """Three independent flatness criteria; they must agree."""

    curvature_vanishes: bool
    right_form_vanishes: bool
    left_symmetric: bool
    witness: Optional[tuple]  # a violating pair or triple when not flat

    @property
    def is_flat(self) -> bool:
        return self.curvature_vanishes


@dataclass(frozen=True)
class SymplecticLieAlgebra:
    algebra: LieAlgebra
    form: SkewForm

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def basis_names(self) -> tuple:
        return self.algebra.basis_names

    # -- products ---------------------------------------------------------

    @cached_property
    def canonical_product(self) -> ProductTensor:
        """The torsion-free symplectic product described in the module docstring."""
        n = self.dim
        om = self.form.matrix
        omcols = [om.col(w) for w in range(n)]
        dual = self.form.dual_matrix
        table = self.algebra.table
        rows = []
        for i in range(n):
            cells = []
            for j in range(n):
                bij = table[i][j]
                phi = [THIRD * (vdot(bij, omcols[w]) + vdot(table[i][w], omcols[j]))
                       for w in range(n)]
                cells.append(dual.apply(phi))
            rows.append(tuple(cells))
        return ProductTensor(n, tuple(rows))

    @cached_property
    def natural_product(self) -> ProductTensor:
        """The always-flat product with omega(nat_u v, w) = omega(v, [w,u])."""
        n = self.dim
        om = self.form.matrix
        dual = self.form.dual_matrix
        table = self.algebra.table
        rows = []
        for i in range(n):
            cells = []
            for j in range(n):
                omrow_j = om.row(j)
                phi = [vdot(omrow_j, table[w][i]) for w in range(n)]
                cells.append(dual.apply(phi))
            rows.append(tuple(cells))
        return ProductTensor(n, tuple(rows))

    def left_mult(self, u: Sequence) -> Matrix:
        return self.canonical_product.left(u)

    def right_mult(self, u: Sequence) -> Matrix:
        return self.canonical_product.right(u)

    # -- flatness -----------------------------------------------------------

    @cached_property
    def flatness(self) -> FlatnessChecks:
        p = self.canonical_product
        n = self.dim
        table = self.algebra.table
        for i in range(n):
            for j in range(i + 1, n):
                diff = tuple(a - b for a, b in zip(p.table[i][j], p.table[j][i]))
                if diff != table[i][j]:
                    raise FlatnessInvariantError(
                        f"canonical product is not Lie-admissible at ({i}, {j})")
        lefts = [p.left(unit_vector(n, i)) for i in range(n)]
        rights = [p.right(unit_vector(n, i)) for i in range(n)]

        witness = None
        curvature_ok = True
        for i in range(n):
            for j in range(i + 1, n):
                lb = p.left(table[i][j])
                if lb - commutator(lefts[i], lefts[j]) != Matrix.zeros(n, n):
                    curvature_ok = False
                    witness = (i, j)
                    break
            if not curvature_ok:
                break

        right_ok = True
        for i in range(n):
            for j in range(n):
                lhs = p.right(p.table[i][j]) - (rights[j] @ rights[i])
                if lhs != commutator(lefts[i], rights[j]):
                    right_ok = False
                    if witness is None:
                        witness = (i, j)
                    break
            if not right_ok:
                break

        violations = p.left_symmetry_violations()
        left_sym = not violations
        if witness is None and violations:
            witness = violations[0]

        if not (curvature_ok == right_ok == left_sym):
            raise FlatnessInvariantError(
                f"flatness criteria disagree: curvature={curvature_ok}, "
                f"right-form={right_ok}, left-symmetry={left_sym}")
        return FlatnessChecks(curvature_ok, right_ok, left_sym, witness)

    @property
    def is_flat(self) -> bool:
        return self.flatness.is_flat

    # -- delegated structure -------------------------------------------------

    @cached_property
    def center(self) -> Subspace:
        return self.algebra.center()

    @cached_property
    def derived(self) -> Subspace:
        return self.algebra.derived_subspace()

    def adjoint(self, f: Matrix) -> Matrix:
        return self.form.adjoint_map(f)

    def perp(self, f: Subspace) -> Subspace:
        return perp(self, f)


def curvature_residuals(product: ProductTensor, algebra: LieAlgebra) -> dict:
    """{(i, j): L_[ei,ej] - [L_ei, L_ej]} for i < j; all zero means flat.

    The product must satisfy u o v - v o u = [u, v]; otherwise the
    curvature of the induced connection is not defined and
    :class:`NotLieAdmissibleError` is raised.
    """
    n = algebra.dim
    if product.dim != n:
        raise ValueError("product dimension mismatch")
    for i in range(n):
        for j in range(i + 1, n):
            diff = tuple(a - b for a, b in
                         zip(product.table[i][j], product.table[j][i]))
            if diff != algebra.table[i][j]:
                raise NotLieAdmissibleError(
                    f"product commutator differs from bracket at ({i}, {j})")
    lefts = [product.left(unit_vector(n, i)) for i in range(n)]
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            out[(i, j)] = (product.left(algebra.table[i][j])
                           - commutator(lefts[i], lefts[j]))
    return out


# ---------------------------------------------------------------------------
# subspace geometry

def perp(s: SymplecticLieAlgebra | SkewForm, f: Subspace) -> Subspace:
    form = s.form if isinstance(s, SymplecticLieAlgebra) else s
    n = form.dim
    if f.ambient_dim != n:
        raise ValueError("ambient dimension mismatch")
    if f.dim == 0:
        return Subspace.full(n)
    rows = [form.matrix.apply(c) for c in f.columns()]
    return kernel(Matrix.from_rows(rows))


def classify_subspace(s: SymplecticLieAlgebra | SkewForm, f: Subspace) -> SubspaceClass:
    """Most specific of: lagrangian, totally isotropic, degenerate, nondegenerate."""
    fperp = perp(s, f)
    if f == fperp:
        return SubspaceClass.LAGRANGIAN
    if f.is_subspace_of(fperp):
        return SubspaceClass.TOTALLY_ISOTROPIC
    if subspace_intersect(f, fperp).dim > 0:
        return SubspaceClass.DEGENERATE
    return SubspaceClass.NONDEGENERATE


def is_degenerate_subspace(s, f: Subspace) -> bool:
    return subspace_intersect(f, perp(s, f)).dim > 0


def darboux_basis(form: SkewForm) -> Matrix:
    """Columns b_1..b_2m with omega(b_{2k-1}, b_{2k}) = 1, all other pairings 0.

    Greedy symplectic Gram-Schmidt pivoting on the lowest-index basis
    vector still unprocessed, so the result is deterministic.
    """
    if not form.is_skew():
        raise ValueError("form must be skew-symmetric")
    n = form.dim
    remaining = [unit_vector(n, i) for i in range(n)]
    out = []
    while remaining:
        u = remaining.pop(0)
        partner = None
        for idx, w in enumerate(remaining):
            if form.pair(u, w):
                partner = idx
                break
        if partner is None:
            raise DegenerateFormError("form is degenerate")
        w = remaining.pop(partner)
        c = form.pair(u, w)
        w = tuple(x / c for x in w)
        corrected = []
        for x in remaining:
            a = form.pair(u, x)
            b = form.pair(w, x)
            y = list(x)
            for k in range(n):
                y[k] = y[k] - a * w[k] + b * u[k]
            corrected.append(tuple(y))
        remaining = corrected
        out.extend([u, w])
    return Matrix.from_cols(out) if out else Matrix.zeros(0, 0)


# ---------------------------------------------------------------------------
# derived invariants of the canonical product

def h_vector(s: SymplecticLieAlgebra) -> Vec:
    """The unique H with omega(H, u) = tr(ad_u); zero iff unimodular."""
    return s.form.dual_of_covector(s.algebra.trace_character())


class MultiplicationKernels(NamedTuple):
    left_kernel: Subspace      # {u : L_u = 0}
    right_kernel: Subspace     # {u : R_u = 0}
    product_span: Subspace     # span of all u o v


def multiplication_kernels(s: SymplecticLieAlgebra) -> MultiplicationKernels:
    n = s.dim
    p = s.canonical_product
    if n == 0:
        z = Subspace.zero(0)
        return MultiplicationKernels(z, z, z)
    left_rows = []
    right_rows = []
    for j in range(n):
        for r in range(n):
            left_rows.append(tuple(p.table[i][j][r] for i in range(n)))
            right_rows.append(tuple(p.table[j][i][r] for i in range(n)))
    return MultiplicationKernels(kernel(Matrix.from_rows(left_rows)),
                                 kernel(Matrix.from_rows(right_rows)),
                                 p.product_span())


# ---------------------------------------------------------------------------
# structural report

class Claim(NamedTuple):
    name: str
    applicable: bool
    holds: Optional[bool]
    detail: str = ""

    def line(self) -> str:
        if not self.applicable:
            status = "n/a"
        else:
            status = "pass" if self.holds else "FAIL"
        suffix = f"  ({self.detail})" if self.detail else ""
        return f"{self.name}: {status}{suffix}"


@dataclass(frozen=True)
class StructuralReport:
    claims: tuple
    is_flat: bool
    nilpotency_class: Optional[int]
    center_kind: SubspaceClass
    derived_kind: SubspaceClass
    unimodular: bool
    h: Vec

    def ok(self) -> bool:
        return all(c.holds for c in self.claims if c.applicable)

    def get(self, name: str) -> Claim:
        for c in self.claims:
            if c.name == name:
                return c
        raise KeyError(name)

    def lines(self) -> list:
        return [c.line() for c in self.claims]


def _ideal_perp_rules(s: SymplecticLieAlgebra, ideal: Subspace) -> tuple:
    """(holds, detail) for: Iperp o I <= I, I o Iperp <= I,
    Iperp o Iperp <= Iperp, and Iperp a Lie subalgebra."""
    p = s.canonical_product
    iperp = perp(s, ideal)
    icols = ideal.columns()
    pcols = iperp.columns()
    for u in pcols:
        for v in icols:
            if not ideal.contains(p.apply(u, v)):
                return False, "Iperp o I escapes I"
            if not ideal.contains(p.apply(v, u)):
                return False, "I o Iperp escapes I"
    for u in pcols:
        for v in pcols:
            if not iperp.contains(p.apply(u, v)):
                return False, "Iperp o Iperp escapes Iperp"
            if not iperp.contains(s.algebra.bracket(u, v)):
                return False, "Iperp is not a Lie subalgebra"
    return True, ""


def structural_report(s: SymplecticLieAlgebra) -> StructuralReport:
    """Check every structural theorem that applies to this algebra.

    Unconditional claims hold for every symplectic Lie algebra; the
    flat-only ones are reported as not applicable on non-flat input.
    The two degeneracy claims additionally require a nonzero derived
    ideal: for abelian algebras both the center and the derived ideal
    are trivially nondegenerate, so the claims are vacuous there.
    """
    alg = s.algebra
    n = s.dim
    p = s.canonical_product
    flat = s.is_flat
    center = s.center
    derived = s.derived
    dperp = perp(s, derived)
    zperp = perp(s, center)
    kernels = multiplication_kernels(s)
    nl = kernels.left_kernel
    h = h_vector(s)
    unimodular = alg.is_unimodular()
    lcs = alg.lower_central_series()
    abelian = derived.dim == 0
    ads = [alg.ad(unit_vector(n, i)) for i in range(n)]

    claims = []

    def claim(name, applicable, holds, detail=""):
        claims.append(Claim(name, applicable, holds if applicable else None, detail))

    # --- unconditional -----------------------------------------------------
    if n:
        rows = []
        mats = [ads[i] + s.adjoint(ads[i]) for i in range(n)]
        for r in range(n):
            for c in range(n):
                rows.append(tuple(mats[i].entry(r, c) for i in range(n)))
        skew_ad = kernel(Matrix.from_rows(rows))
    else:
        skew_ad = Subspace.zero(0)
    claim("derived_perp_characterization", True, dperp == skew_ad,
          "[g,g]-perp = {u : ad_u* = -ad_u}")
    claim("center_is_products_perp", True, center == perp(s, kernels.product_span))
    claim("center_is_left_meet_right_kernel", True,
          center == subspace_intersect(nl, kernels.right_kernel))
    claim("center_is_left_kernel_meet_derived_perp", True,
          center == subspace_intersect(nl, dperp))
    holds, detail = _ideal_perp_rules(s, derived)
    claim("derived_ideal_perp_rules", True, holds, detail)
    holds, detail = _ideal_perp_rules(s, center)
    claim("center_ideal_perp_rules", True, holds, detail)
    claim("right_trace_identity", True,
          all(p.right(unit_vector(n, i)).trace() == -ads[i].trace()
              for i in range(n)),
          "tr R_u = -tr ad_u")
    ok = True
    for u in dperp.columns():
        adu = alg.ad(u)
        if p.left(u) != adu.scale(Q(2, 3)) or p.right(u) != adu.scale(Q(-1, 3)):
            ok = False
            break
    claim("derived_perp_operator_identities", True, ok,
          "L_u = (2/3) ad_u and R_u = -(1/3) ad_u on [g,g]-perp")

    lagr_applicable = zperp.is_subspace_of(center)
    lagr_holds = None
    if lagr_applicable:
        lagr_holds = (flat and p.is_associative()
                      and lcs.nilpotency_class is not None
                      and lcs.nilpotency_class <= 2)
    claim("lagrangian_center_criterion", lagr_applicable, lagr_holds,
          "Z-perp inside Z forces flat + associative + class <= 2")

    # --- flat only ----------------------------------------------------------
    claim("flat_nilpotent", flat, lcs.nilpotency_class is not None,
          f"class {lcs.nilpotency_class}" if lcs.nilpotency_class is not None else "")
    claim("flat_center_nonzero", flat and n > 0, center.dim > 0,
          f"dim Z = {center.dim}")
    zmeet = subspace_intersect(center, zperp)
    claim("flat_center_degenerate", flat and not abelian, zmeet.dim > 0,
          f"dim(Z meet Z-perp) = {zmeet.dim}")
    dmeet = subspace_intersect(derived, dperp)
    claim("flat_derived_degenerate", flat and not abelian, dmeet.dim > 0,
          f"dim([g,g] meet [g,g]-perp) = {dmeet.dim}")
    claim("flat_h_vanishes", flat, is_zero_vector(h))
    claim("flat_h_in_derived_meet_perp", flat,
          derived.contains(h) and dperp.contains(h))
    ok = all(is_zero_vector(p.apply(u, v))
             for u in dperp.columns() for v in dperp.columns())
    claim("flat_derived_perp_products_vanish", flat, ok)
    ok = all((alg.ad(u) @ alg.ad(v)).is_zero()
             for u in dperp.columns() for v in dperp.columns())
    claim("flat_derived_perp_ad_compose_zero", flat, ok)
    ok = all(nl.contains(p.apply(unit_vector(n, i), v))
             and nl.contains(p.apply(v, unit_vector(n, i)))
             for i in range(n) for v in nl.columns())
    claim("flat_left_kernel_two_sided_ideal", flat, ok)
    ok = all(nl.contains(alg.bracket(unit_vector(n, i), u))
             for i in range(n) for u in dperp.columns())
    claim("flat_bracket_derived_perp_in_left_kernel", flat, ok)
    complete = all(p.right(unit_vector(n, i)).trace() == ZERO for i in range(n))
    claim("flat_complete_iff_unimodular", flat, complete == unimodular,
          f"complete={complete}, unimodular={unimodular}")
    claim("flat_unimodular_solvable", flat and unimodular, alg.is_solvable())

    return StructuralReport(
        claims=tuple(claims),
        is_flat=flat,
        nilpotency_class=lcs.nilpotency_class,
        center_kind=classify_subspace(s, center),
        derived_kind=classify_subspace(s, derived),
        unimodular=unimodular,
        h=h,
    )


# ---------------------------------------------------------------------------
# transport

def change_of_basis(s: SymplecticLieAlgebra, t: Matrix,
                    names: Sequence[str] | None = None) -> SymplecticLieAlgebra:
    """The same structure written in the basis given by the columns of t."""
    new_alg = s.algebra.change_of_basis(t, names)
    new_form = SkewForm(t.transpose() @ s.form.matrix @ t)
    return validate_symplectic(new_alg, new_form)
