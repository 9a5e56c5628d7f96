"""Double extensions of flat symplectic Lie algebras.

Every flat symplectic Lie algebra of positive dimension arises from a
flat one of dimension two less by adjoining an isotropic pair (e, ebar):
e is central and omega-dual to ebar, both are orthogonal to the old
algebra, and the new structure is determined by an endomorphism xi of
the base together with a base vector b0.  The pair (xi, b0) must satisfy
five compatibility identities, checked by :func:`check_admissible`.
Conversely :func:`inverse_double_extend` splits any flat algebra along a
central isotropic line and recovers a pair that rebuilds it exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import SymplieError
from .lie import LieAlgebra
from .linalg import (Matrix, Subspace, Vec, commutator, solve,
                     subspace_intersect, subspace_sum, unit_vector, vector,
                     zero_vector)
from .rationals import ONE, THIRD, ZERO, Q
from .symplectic import (InvalidSymplecticError, SkewForm, SubspaceClass,
                         SymplecticLieAlgebra, change_of_basis,
                         classify_subspace, perp, validate_symplectic)


class NotFlatError(SymplieError):
    """The operation is only defined for flat symplectic Lie algebras."""


class NotAdmissibleError(SymplieError):
    def __init__(self, report: "AdmissibilityReport", stage: Optional[int] = None):
        self.report = report
        self.stage = stage
        where = f"stage {stage}: " if stage is not None else ""
        super().__init__(
            f"{where}pair is not admissible; failed: "
            + ", ".join(report.failed_names()))


class TrivialCenterError(SymplieError):
    """No central direction to split off."""


class NotAnIdealError(SymplieError):
    """symplectic_reduce needs a Lie ideal."""


class ExtensionInvariantError(SymplieError):
    """Internal: a guaranteed property of the construction failed."""


@dataclass(frozen=True)
class AdmissiblePair:
    """The data (xi, b0) attached to a double extension of a flat base."""

    xi: Matrix
    b0: Vec

    def __post_init__(self):
        if not self.xi.is_square:
            raise ValueError("xi must be square")
        object.__setattr__(self, "b0", vector(self.b0))
        if len(self.b0) != self.xi.rows:
            raise ValueError("b0 length must match xi")

    @property
    def base_dim(self) -> int:
        return self.xi.rows


class EquationCheck(NamedTuple):
    name: str
    holds: bool
    detail: str = ""


@dataclass(frozen=True)
class AdmissibilityReport:
    checks: tuple

    @property
    def admissible(self) -> bool:
        return all(c.holds for c in self.checks)

    def failed_names(self) -> list:
        return [c.name for c in self.checks if not c.holds]

    def lines(self) -> list:
        return [f"{c.name}: {'pass' if c.holds else 'FAIL'}"
                + (f"  ({c.detail})" if c.detail else "")
                for c in self.checks]


def check_admissible(base: SymplecticLieAlgebra, xi: Matrix,
                     b0: Sequence) -> AdmissibilityReport:
    """Evaluate the five identities an extension pair must satisfy.

    With * the omega-adjoint, L/R the canonical multiplications of the
    base and ad the bracket action, the identities are

      1. [xi, xi*] = xi^2 - (1/3) R_b0
      2. (xi* - xi)(b0) = 0
      3. xi* xi = (1/3)(R_b0 + R_b0*)
      4. xi ad_a = L_a xi - R_{xi(a)}            for every a
      5. xi* L_a - L_{xi*(a)} - L_a xi*
           = xi L_a - L_a xi - 2 L_{xi(a)}       for every a
    """
    if not base.is_flat:
        raise NotFlatError("extension pairs are only defined over a flat base")
    n = base.dim
    if xi.shape != (n, n):
        raise ValueError(f"xi must be {n}x{n}")
    b0 = vector(b0)
    if len(b0) != n:
        raise ValueError(f"b0 must have length {n}")

    p = base.canonical_product
    xi_star = base.adjoint(xi)
    r_b0 = p.right(b0)
    r_b0_star = base.adjoint(r_b0)
    checks = []

    checks.append(EquationCheck(
        "commutator_with_adjoint",
        commutator(xi, xi_star) == (xi @ xi) - r_b0.scale(THIRD)))
    checks.append(EquationCheck(
        "skew_part_kills_b0",
        all(not x for x in (xi_star - xi).apply(b0))))
    checks.append(EquationCheck(
        "adjoint_composition",
        (xi_star @ xi) == (r_b0 + r_b0_star).scale(THIRD)))

    ok4, ok5 = True, True
    detail4 = detail5 = ""
    for i in range(n):
        a = unit_vector(n, i)
        ad_a = base.algebra.ad(a)
        l_a = p.left(a)
        if ok4 and (xi @ ad_a) != (l_a @ xi) - p.right(xi.col(i)):
            ok4, detail4 = False, f"fails at basis index {i}"
        lhs = (xi_star @ l_a) - p.left(xi_star.col(i)) - (l_a @ xi_star)
        rhs = (xi @ l_a) - (l_a @ xi) - p.left(xi.col(i)).scale(Q(2))
        if ok5 and lhs != rhs:
            ok5, detail5 = False, f"fails at basis index {i}"
    checks.append(EquationCheck("bracket_compatibility", ok4, detail4))
    checks.append(EquationCheck("left_mult_compatibility", ok5, detail5))
    return AdmissibilityReport(tuple(checks))


# ---------------------------------------------------------------------------
# forward construction

def _embed(v: Sequence, n: int) -> list:
    """Base vector -> extension coordinates [e, base..., ebar]."""
    return [ZERO] + list(v) + [ZERO]


def build_extension_candidate(base: SymplecticLieAlgebra, xi: Matrix,
                              b0: Sequence) -> SymplecticLieAlgebra:
    """Assemble the extension data without any admissibility checking.

    The result is a raw (algebra, form) pair; when (xi, b0) is not
    admissible it will generally fail the Jacobi identity or flatness.
    Kept public so tests can confirm that inadmissible pairs really do
    break the construction.
    """
    n = base.dim
    if xi.shape != (n, n):
        raise ValueError(f"xi must be {n}x{n}")
    b0 = vector(b0)
    if len(b0) != n:
        raise ValueError(f"b0 must have length {n}")
    form_b = base.form
    xi_star = form_b.adjoint_map(xi)
    sym = xi + xi_star
    d = xi_star - xi.scale(Q(2))

    names = tuple(f"e{k + 1}" for k in range(n + 2))
    entries = {}
    # base x base: [a, b] = [a, b]_B + omega_B((xi + xi*)(a), b) e
    for p in range(n):
        for q in range(p + 1, n):
            vec = _embed(base.algebra.table[p][q], n)
            vec[0] += form_b.pair(sym.col(p), unit_vector(n, q))
            coeffs = {k: c for k, c in enumerate(vec) if c}
            if coeffs:
                entries[(1 + p, 1 + q)] = coeffs
    # base x ebar: [a, ebar] = -[ebar, a] = (2 xi - xi*)(a) - omega_B(b0, a) e
    for p in range(n):
        vec = _embed(tuple(-x for x in d.col(p)), n)
        vec[0] -= form_b.pair(b0, unit_vector(n, p))
        coeffs = {k: c for k, c in enumerate(vec) if c}
        if coeffs:
            entries[(1 + p, n + 1)] = coeffs
    algebra = LieAlgebra.from_sparse(names, entries)

    rows = []
    for r in range(n + 2):
        row = [ZERO] * (n + 2)
        if r == 0:
            row[n + 1] = ONE
        elif r == n + 1:
            row[0] = -ONE
        else:
            for c in range(n):
                row[1 + c] = form_b.matrix.entry(r - 1, c)
        rows.append(row)
    return SymplecticLieAlgebra(algebra, SkewForm(Matrix.from_rows(rows)))


def double_extend(base: SymplecticLieAlgebra,
                  pair: AdmissiblePair) -> SymplecticLieAlgebra:
    """Extend a flat base by an admissible pair and verify the outcome.

    Postconditions (violations raise ExtensionInvariantError): the
    result is a flat symplectic Lie algebra, e = e1 multiplies to zero
    on both sides, and the canonical product restricted to the pieces
    matches the closed-form extension formulas.
    """
    report = check_admissible(base, pair.xi, pair.b0)
    if not report.admissible:
        raise NotAdmissibleError(report)
    candidate = build_extension_candidate(base, pair.xi, pair.b0)
    try:
        ext = validate_symplectic(candidate.algebra, candidate.form)
    except InvalidSymplecticError as exc:
        raise ExtensionInvariantError(
            f"admissible pair produced an invalid structure: {exc}") from exc
    if not ext.is_flat:
        raise ExtensionInvariantError("admissible pair produced a non-flat extension")

    n = base.dim
    p_ext = ext.canonical_product
    p_base = base.canonical_product
    form_b = base.form
    xi = pair.xi
    xi_star = form_b.adjoint_map(xi)
    skew = xi_star - xi
    e = unit_vector(n + 2, 0)
    if not (p_ext.left(e).is_zero() and p_ext.right(e).is_zero()):
        raise ExtensionInvariantError("e does not multiply to zero")

    def expect(i, j, want):
        if p_ext.table[i][j] != tuple(want):
            raise ExtensionInvariantError(
                f"product formula violated at ({i}, {j})")

    for p in range(n):
        a = unit_vector(n, p)
        for q in range(n):
            want = _embed(p_base.table[p][q], n)
            want[0] += form_b.pair(xi.col(p), unit_vector(n, q))
            expect(1 + p, 1 + q, want)
        pairing = form_b.pair(pair.b0, a)
        want = _embed(skew.col(p), n)
        want[0] += THIRD * pairing
        expect(n + 1, 1 + p, want)
        want = _embed(xi.col(p), n)
        want[0] -= Q(2, 3) * pairing
        expect(1 + p, n + 1, want)
    expect(n + 1, n + 1, _embed(tuple(THIRD * x for x in pair.b0), n))
    return ext


# ---------------------------------------------------------------------------
# inverse construction

@dataclass(frozen=True)
class ReductionStep:
    """One split of a flat algebra along a central isotropic line.

    transform columns are [e, base-complement..., ebar] in the original
    coordinates; rewriting the input in that basis reproduces
    double_extend(base, pair) entry for entry.
    """

    base: SymplecticLieAlgebra
    pair: AdmissiblePair
    e: Vec
    ebar: Vec
    transform: Matrix


def inverse_double_extend(s: SymplecticLieAlgebra,
                          e: Optional[Sequence] = None) -> ReductionStep:
    """Split a flat algebra of positive dimension as a double extension.

    e may pick the central direction to split along; by default the
    first vector of the canonical center basis is used.  The recovered
    (base, pair) is checked to be admissible and to rebuild the input
    exactly (in the adapted basis), so a successful return certifies
    the decomposition.
    """
    if s.dim == 0:
        raise ValueError("cannot split a zero-dimensional algebra")
    if not s.is_flat:
        raise NotFlatError("only flat algebras split as double extensions")
    center = s.center
    if e is None:
        if center.dim == 0:
            raise TrivialCenterError("center is zero")
        e = center.columns()[0]
    else:
        e = vector(e)
        if all(not x for x in e):
            raise ValueError("e must be nonzero")
        if not center.contains(e):
            raise ValueError("e must be central")

    n2 = s.dim
    n = n2 - 2
    omega = s.form
    # ebar: any solution of omega(e, x) = 1 with free coordinates zero
    row = omega.matrix.transpose().apply(e)
    ebar = solve(Matrix.from_rows([row]), (ONE,))
    line = Subspace.span(n2, [e, ebar])
    base_cols = perp(s, line).columns()
    if len(base_cols) != n:
        raise ExtensionInvariantError("hyperbolic pair has degenerate span")
    t = Matrix.from_cols([e] + base_cols + [ebar])
    names = tuple(f"e{k + 1}" for k in range(n2))
    adapted = change_of_basis(s, t, names)

    # base form is the middle block; the corners are fixed by construction
    fm = adapted.form.matrix
    base_form = SkewForm(Matrix.from_rows(
        [tuple(fm.entry(1 + r, 1 + c) for c in range(n)) for r in range(n)]))
    entries = {}
    for p in range(n):
        for q in range(p + 1, n):
            full = adapted.algebra.table[1 + p][1 + q]
            if full[n + 1]:
                raise ExtensionInvariantError(
                    "base bracket leaks an ebar component")
            coeffs = {k: c for k, c in enumerate(full[1:1 + n]) if c}
            if coeffs:
                entries[(p, q)] = coeffs
    base_names = tuple(f"b{k + 1}" for k in range(n))
    try:
        base = validate_symplectic(
            LieAlgebra.from_sparse(base_names, entries), base_form)
    except InvalidSymplecticError as exc:
        raise ExtensionInvariantError(
            f"split produced an invalid base: {exc}") from exc
    if not base.is_flat:
        raise ExtensionInvariantError("split produced a non-flat base")

    # omega_B(xi(a), b) is the e-coefficient of a o b
    p_ad = adapted.canonical_product
    xi_cols = []
    for p in range(n):
        phi = [p_ad.table[1 + p][1 + q][0] for q in range(n)]
        xi_cols.append(base_form.dual_of_covector(phi))
    xi = Matrix.from_cols(xi_cols) if xi_cols else Matrix.zeros(0, 0)
    last = p_ad.table[n + 1][n + 1]
    if last[0] or last[n + 1]:
        raise ExtensionInvariantError("ebar o ebar leaks outside the base")
    b0 = tuple(Q(3) * x for x in last[1:1 + n])
    pair = AdmissiblePair(xi, b0)

    report = check_admissible(base, xi, b0)
    if not report.admissible:
        raise ExtensionInvariantError(
            "recovered pair is not admissible; failed: "
            + ", ".join(report.failed_names()))
    rebuilt = double_extend(base, pair)
    if (rebuilt.algebra.table != adapted.algebra.table
            or rebuilt.form.matrix != adapted.form.matrix):
        raise ExtensionInvariantError("rebuilt extension differs from input")
    return ReductionStep(base=base, pair=pair, e=vector(e), ebar=ebar, transform=t)


# ---------------------------------------------------------------------------
# reduction by an ideal

def symplectic_reduce(s: SymplecticLieAlgebra,
                      ideal: Subspace) -> SymplecticLieAlgebra:
    """Quotient I-perp by its omega-radical, for a Lie ideal I.

    I-perp is a subalgebra, J = I meet I-perp is an ideal of it, and
    omega descends to a nondegenerate closed form on I-perp / J.  When
    the input is flat the quotient is flat again; that is asserted.
    """
    n = s.dim
    if ideal.ambient_dim != n:
        raise ValueError("ideal has wrong ambient dimension")
    for i in range(n):
        u = unit_vector(n, i)
        for v in ideal.columns():
            if not ideal.contains(s.algebra.bracket(u, v)):
                raise NotAnIdealError(
                    f"subspace is not closed under bracketing with basis index {i}")
    iperp = perp(s, ideal)
    j = subspace_intersect(ideal, iperp)
    reps = []
    cur = j
    for c in iperp.columns():
        if not cur.contains(c):
            reps.append(c)
            cur = subspace_sum(cur, Subspace.span(n, [c]))
    m = len(reps)
    basis = Matrix.from_cols(reps + j.columns()) if (reps or j.dim) \
        else Matrix.zeros(n, 0)

    entries = {}
    for a in range(m):
        for b in range(a + 1, m):
            w = s.algebra.bracket(reps[a], reps[b])
            coords = solve(basis, w)
            coeffs = {k: c for k, c in enumerate(coords[:m]) if c}
            if coeffs:
                entries[(a, b)] = coeffs
    names = tuple(f"q{k + 1}" for k in range(m))
    form_rows = [[s.form.pair(reps[a], reps[b]) for b in range(m)]
                 for a in range(m)]
    reduced = validate_symplectic(LieAlgebra.from_sparse(names, entries),
                                  SkewForm(Matrix.from_rows(form_rows)
                                           if m else Matrix.zeros(0, 0)))
    if s.is_flat and not reduced.is_flat:
        raise ExtensionInvariantError("reduction of a flat algebra came out non-flat")
    return reduced


# ---------------------------------------------------------------------------
# towers

def zero_symplectic() -> SymplecticLieAlgebra:
    return validate_symplectic(LieAlgebra.from_sparse((), {}),
                               SkewForm(Matrix.zeros(0, 0)))


def extension_tower(pairs: Sequence[AdmissiblePair],
                    base: Optional[SymplecticLieAlgebra] = None) -> list:
    """Iterated double extensions, innermost pair first.

    Returns every stage, starting from the base (the zero algebra by
    default); the last entry is the full tower.
    """
    stages = [base if base is not None else zero_symplectic()]
    for k, pair in enumerate(pairs):
        try:
            stages.append(double_extend(stages[-1], pair))
        except NotAdmissibleError as exc:
            raise NotAdmissibleError(exc.report, stage=k) from None
    return stages


def reduction_tower(s: SymplecticLieAlgebra) -> list:
    """Split repeatedly until nothing is left; outermost step first."""
    steps = []
    cur = s
    while cur.dim > 0:
        step = inverse_double_extend(cur)
        steps.append(step)
        cur = step.base
    return steps


def _extension_block(w: Matrix) -> Matrix:
    """diag(1, w, 1) in the [e, base..., ebar] coordinate layout."""
    n = w.rows
    rows = []
    for r in range(n + 2):
        row = [ZERO] * (n + 2)
        if r == 0:
            row[0] = ONE
        elif r == n + 1:
            row[n + 1] = ONE
        else:
            for c in range(n):
                row[1 + c] = w.entry(r - 1, c)
        rows.append(row)
    return Matrix.from_rows(rows)


def _compose_tower(steps: Sequence[ReductionStep]) -> tuple:
    """Rewrite tower pairs into composable coordinates.

    Each step's pair lives over that step's base, but rebuilding from
    the zero algebra reproduces the adapted copy of every base, so the
    pairs must be conjugated by the accumulated change of basis.  The
    returned transform t satisfies, with pairs listed innermost first,

        change_of_basis(s, t) == extension_tower(pairs)[-1]

    entry for entry.
    """
    from .linalg import inverse

    pairs = []
    w = Matrix.identity(0)
    for step in reversed(steps):
        if w.rows:
            w_inv = inverse(w)
            xi = w_inv @ step.pair.xi @ w
            b0 = w_inv.apply(step.pair.b0)
        else:
            xi, b0 = step.pair.xi, step.pair.b0
        pairs.append(AdmissiblePair(xi, b0))
        w = step.transform @ _extension_block(w)
    return pairs, w


def tower_pairs(steps: Sequence[ReductionStep]) -> list:
    """Pairs of a reduction tower, innermost first, ready to re-extend.

    extension_tower over these pairs rebuilds the original algebra up
    to the basis change returned by :func:`tower_transform`.
    """
    return _compose_tower(steps)[0]


def tower_transform(steps: Sequence[ReductionStep]) -> Matrix:
    """Columns express the rebuilt tower's basis in original coordinates."""
    return _compose_tower(steps)[1]


# ---------------------------------------------------------------------------
# nilpotency bookkeeping

@dataclass(frozen=True)
class NilpotencyTraceReport:
    """Trace identities and nilpotency facts for an admissible pair.

    For every k >= 1 and basis vector a of the base,
    tr(xi^k R_a) = tr(R_{xi^k(a)}) and tr(xi^{k+1}) = (1/3) tr(R_b0 xi^{k-1}).
    Over a nilpotent base, xi and xi* - 2 xi are nilpotent.  Over an
    abelian base of dimension four, xi^2 = 0 and the image of xi is
    totally isotropic.
    """

    power_right_traces_ok: bool
    xi_power_traces_ok: bool
    base_nilpotent: bool
    xi_nilpotent: Optional[bool]
    d_nilpotent: Optional[bool]
    xi_square_zero: Optional[bool]
    image_xi_isotropic: Optional[bool]

    def ok(self) -> bool:
        facts = [self.power_right_traces_ok, self.xi_power_traces_ok,
                 self.xi_nilpotent, self.d_nilpotent,
                 self.xi_square_zero, self.image_xi_isotropic]
        return all(f for f in facts if f is not None)


def nilpotency_trace_report(base: SymplecticLieAlgebra,
                            pair: AdmissiblePair) -> NilpotencyTraceReport:
    report = check_admissible(base, pair.xi, pair.b0)
    if not report.admissible:
        raise NotAdmissibleError(report)
    n = base.dim
    p = base.canonical_product
    xi = pair.xi
    xi_star = base.adjoint(xi)
    r_b0 = p.right(pair.b0)

    power = Matrix.identity(n)
    powers = [power]  # powers[k] = xi^k
    for _ in range(n + 1):
        power = power @ xi
        powers.append(power)

    traces_ok = True
    for k in range(1, n + 1):
        for i in range(n):
            lhs = (powers[k] @ p.right(unit_vector(n, i))).trace()
            rhs = p.right(powers[k].col(i)).trace()
            if lhs != rhs:
                traces_ok = False
    xi_traces_ok = all(
        powers[k + 1].trace() == THIRD * (r_b0 @ powers[k - 1]).trace()
        for k in range(1, n + 1))

    base_nilpotent = base.algebra.is_nilpotent()
    xi_nil = d_nil = None
    if base_nilpotent:
        d = xi_star - xi.scale(Q(2))
        xi_nil = powers[n].is_zero() if n else True
        dp = Matrix.identity(n)
        for _ in range(n):
            dp = dp @ d
        d_nil = dp.is_zero() if n else True

    sq_zero = isotropic = None
    if base.algebra.is_abelian() and n == 4:
        sq_zero = powers[2].is_zero()
        image = Subspace.span(n, xi.columns())
        isotropic = classify_subspace(base, image) in (
            SubspaceClass.TOTALLY_ISOTROPIC, SubspaceClass.LAGRANGIAN)
    return NilpotencyTraceReport(
        power_right_traces_ok=traces_ok,
        xi_power_traces_ok=xi_traces_ok,
        base_nilpotent=base_nilpotent,
        xi_nilpotent=xi_nil,
        d_nilpotent=d_nil,
        xi_square_zero=sq_zero,
        image_xi_isotropic=isotropic,
    )
