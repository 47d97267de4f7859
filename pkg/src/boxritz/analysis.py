"""Convergence tables over the basis size and checks on what they show.

The standard model's Ritz values approach the box energies from above.  The
projected models produce ``d`` non-null values approaching the weights from
below plus ``N - d`` structural zeros.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from . import geneig
from .assembly import ModelKind, ModelSpec, SecularPair, assemble, overlap_with_eigenfunctions
from .geneig import PrecisionLossError, SolverError, SpectrumResult
from .trigmoments import BigReal, PrecisionContext

DEFAULT_DISPLAY_DIGITS = 10
BOUND_SLACK_OFFSET = 15


@dataclass(frozen=True)
class TableRow:
    n: int
    values: list[BigReal]
    null_count: int
    error_bounds: list[BigReal] = field(default_factory=list, repr=False)
    spectrum: Optional[SpectrumResult] = field(default=None, repr=False, compare=False)
    pair: Optional[SecularPair] = field(default=None, repr=False, compare=False)


@dataclass(frozen=True)
class ConvergenceTable:
    model: ModelSpec
    rows: list[TableRow]
    levels_shown: int
    digits_shown: int = DEFAULT_DISPLAY_DIGITS
    precision: int = 0

    def row(self, n: int) -> TableRow:
        for r in self.rows:
            if r.n == n:
                return r
        raise KeyError(n)

    @property
    def ns(self) -> list[int]:
        return [r.n for r in self.rows]


def displayed_values(result: SpectrumResult, levels: int) -> list[BigReal]:
    """Lowest ``levels`` eigenvalues, non-null ones only for projector models."""
    if result.model.kind is ModelKind.STANDARD:
        return result.eigenvalues[:levels]
    return [result.eigenvalues[j] for j in result.presentation_order() if not result.null_flags[j]][:levels]


def _displayed_columns(result: SpectrumResult, levels: int) -> list[int]:
    if result.model.kind is ModelKind.STANDARD:
        return list(range(min(levels, result.n)))
    return [j for j in result.presentation_order() if not result.null_flags[j]][:levels]


def solve_model(
    n: int,
    spec: ModelSpec,
    ctx: PrecisionContext,
    levels: Optional[int] = None,
    digits: int = DEFAULT_DISPLAY_DIGITS,
    certify: bool = True,
) -> TableRow:
    """Assemble, solve and classify one basis size, optionally certifying the digits.

    With ``certify`` the displayed values carry residual error bounds and a
    :class:`PrecisionLossError` is raised if any bound exceeds one unit in
    the ``digits``-th significant place.
    """
    if levels is None:
        levels = n if spec.kind is ModelKind.STANDARD else spec.d
    try:
        pair = assemble(n, spec, ctx)
        result = geneig.solve(pair, ctx)
        bounds: list[BigReal] = []
        if certify:
            cols = _displayed_columns(result, levels)
            all_bounds = geneig.error_bounds(result, spec, ctx)
            bounds = [all_bounds[j] for j in cols]
            mp = ctx.mp
            unit = mp.mpf(10) ** (-digits)
            for j, b in zip(cols, bounds):
                w = result.eigenvalues[j]
                if b > unit * max(mp.one, abs(w)):
                    raise PrecisionLossError(
                        f"Ritz value {mp.nstr(w, digits)} has error bound {mp.nstr(b, 3)}; "
                        f"{ctx.decimal_digits} working digits cannot support {digits} displayed digits",
                        bounds,
                    )
    except SolverError as exc:
        exc.n = n
        raise
    return TableRow(n, displayed_values(result, levels), result.null_count, bounds, result, pair)


def build_table(
    spec: ModelSpec,
    n_min: int,
    n_max: int,
    levels: int,
    ctx: PrecisionContext,
    digits: int = DEFAULT_DISPLAY_DIGITS,
    certify: bool = True,
) -> ConvergenceTable:
    if not 1 <= n_min <= n_max:
        raise ValueError(f"need 1 <= n_min <= n_max, got {n_min}, {n_max}")
    if levels < 1:
        raise ValueError("levels must be >= 1")
    if spec.kind is ModelKind.STANDARD and levels > n_min:
        raise ValueError(f"standard model: levels={levels} exceeds n_min={n_min}")
    rows = [solve_model(n, spec, ctx, levels, digits, certify) for n in range(n_min, n_max + 1)]
    return ConvergenceTable(spec, rows, levels, digits, ctx.decimal_digits)


def reference_levels(spec: ModelSpec, count: int, ctx: PrecisionContext) -> list[BigReal]:
    """Exact values the first ``count`` Ritz values are compared with."""
    if spec.kind is ModelKind.STANDARD:
        return [ctx.level(k) for k in range(1, count + 1)]
    return sorted(spec.level_weights(ctx))


@dataclass(frozen=True)
class BoundEntry:
    n: int
    k: int
    value: BigReal
    reference: BigReal
    gap: BigReal
    direction: str  # "upper" (W >= ref) or "lower" (W <= ref)
    ok: bool


@dataclass(frozen=True)
class MonotoneEntry:
    k: int
    n: int
    n_next: int
    ok: bool


@dataclass(frozen=True)
class BoundReport:
    model: ModelSpec
    entries: list[BoundEntry]
    monotone: list[MonotoneEntry]
    tolerance: BigReal
    applicable: bool = True

    @property
    def bounds_ok(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def monotone_ok(self) -> bool:
        return all(m.ok for m in self.monotone)

    @property
    def passed(self) -> bool:
        return self.bounds_ok and self.monotone_ok

    @property
    def violations(self) -> list[BoundEntry]:
        return [e for e in self.entries if not e.ok]


def verify_bounds(table: ConvergenceTable, ctx: PrecisionContext) -> BoundReport:
    """Check the bound direction and monotonicity across the table's rows.

    Standard: ``W_k >= E_k`` and non-increasing in N.  Projector models with
    non-negative weights: ``W_k <= w_k`` and non-decreasing in N.  A
    projector with a negative weight gets an empty, non-applicable report.
    """
    spec = table.model
    tol = ctx.tolerance(BOUND_SLACK_OFFSET)
    upper = spec.kind is ModelKind.STANDARD
    if not upper and any(w < 0 for w in spec.weights):
        return BoundReport(spec, [], [], tol, applicable=False)
    entries = []
    for row in table.rows:
        count = len(row.values)
        if upper:
            refs = reference_levels(spec, count, ctx)
        else:
            # with fewer live values than weights, the live values sit under the top weights
            weights = reference_levels(spec, spec.d, ctx)
            refs = weights[spec.d - count:] if count < spec.d else weights
        for k, (w, ref) in enumerate(zip(row.values, refs), start=1):
            gap = w - ref
            ok = gap >= -tol if upper else gap <= tol
            entries.append(BoundEntry(row.n, k, w, ref, gap, "upper" if upper else "lower", ok))
    monotone = []
    for a, b in zip(table.rows, table.rows[1:]):
        for k, (wa, wb) in enumerate(zip(a.values, b.values), start=1):
            if not upper and len(a.values) != len(b.values):
                continue
            ok = wb <= wa + tol if upper else wb >= wa - tol
            monotone.append(MonotoneEntry(k, a.n, b.n, ok))
    return BoundReport(spec, entries, monotone, tol)


@dataclass(frozen=True)
class Mismatch:
    n: int
    k: int
    computed: BigReal
    expected: str
    relative_error: BigReal


def compare_with_reference(
    table: ConvergenceTable,
    reference: Mapping[int, Sequence[str]],
    ctx: PrecisionContext,
    rel_tol: Fraction = Fraction(5, 10**9),
) -> list[Mismatch]:
    """Cells where ``|computed - expected| > rel_tol * max(1, |expected|)``.

    A reference row absent from the table, or a value count that differs,
    counts as a mismatch too.
    """
    mp = ctx.mp
    tol = ctx.real(rel_tol)
    bad = []
    for n, expected in sorted(reference.items()):
        try:
            row = table.row(n)
        except KeyError:
            bad.append(Mismatch(n, 0, mp.nan, "missing row", mp.inf))
            continue
        if len(row.values) != len(expected):
            bad.append(Mismatch(n, 0, mp.mpf(len(row.values)), f"{len(expected)} values", mp.inf))
            continue
        for k, (w, e) in enumerate(zip(row.values, expected), start=1):
            ref = ctx.real(e)
            err = abs(w - ref) / max(mp.one, abs(ref))
            if err > tol:
                bad.append(Mismatch(n, k, w, e, err))
    return bad


@dataclass(frozen=True)
class CauchySchwarzRecord:
    """Trial state orthogonal to every ``psi_k`` (``k <= d``) except ``psi_n``.

    ``quotient`` is ``<psi|H_D|psi>/<psi|psi>``; ``overlap_form`` is
    ``E_n |<psi_n|psi>|^2 / <psi|psi>`` (equal to the quotient once the
    constraints hold); ``bound`` is ``E_n``.
    """

    n: int
    d: int
    basis_size: int
    quotient: BigReal
    overlap_form: BigReal
    bound: BigReal
    coefficients: list[BigReal] = field(repr=False)
    constraint_residual: BigReal = field(default=0, repr=False)

    @property
    def holds(self) -> bool:
        return self.quotient <= self.bound


def cauchy_schwarz_demo(n: int, d: int, basis_size: int, ctx: PrecisionContext) -> CauchySchwarzRecord:
    """Build a constrained trial state and evaluate its projected-model quotient.

    The seed is the best approximant of ``psi_n`` in the trial space; the
    ``d - 1`` constraints ``<psi_k|psi> = 0`` are then projected out in the
    S inner product.  The quotient can never exceed ``E_n``.
    """
    if not 1 <= n <= d <= basis_size:
        raise ValueError(f"need 1 <= n <= d <= N, got n={n}, d={d}, N={basis_size}")
    mp = ctx.mp
    spec = ModelSpec.projected(d)
    pair = assemble(basis_size, spec, ctx)
    v = overlap_with_eigenfunctions(basis_size, d, ctx)
    low = geneig.cholesky(pair.s, ctx, basis_size)
    # columns of S^-1 V: coefficient vectors of the best approximants of psi_k
    approx = []
    for k in range(d):
        y = geneig.forward_solve(mp, low, [v[i][k] for i in range(basis_size)])
        approx.append(geneig.backward_solve_transposed(mp, low, y))
    vcols = [[v[i][k] for i in range(basis_size)] for k in range(d)]
    seed = approx[n - 1]
    others = [k for k in range(d) if k != n - 1]
    c = list(seed)
    if others:
        gram = mp.matrix([[mp.fdot(vcols[k], approx[l]) for l in others] for k in others])
        rhs = mp.matrix([mp.fdot(vcols[k], seed) for k in others])
        coef = mp.lu_solve(gram, rhs)
        for idx, l in enumerate(others):
            c = [ci - coef[idx] * xi for ci, xi in zip(c, approx[l])]
    norm2 = mp.fdot(c, geneig.matvec(mp, pair.s, c))
    if norm2 <= ctx.tolerance(10):
        raise ArithmeticError(f"constrained trial state vanished (n={n}, d={d}, N={basis_size})")
    quotient = mp.fdot(c, geneig.matvec(mp, pair.h, c)) / norm2
    level = ctx.level(n)
    overlap_form = level * mp.fdot(vcols[n - 1], c) ** 2 / norm2
    residual = max((abs(mp.fdot(vcols[k], c)) for k in others), default=mp.zero)
    return CauchySchwarzRecord(n, d, basis_size, quotient, overlap_form, level, c, residual)


@dataclass(frozen=True)
class SpectralIdentityVerdict:
    passed: bool
    off_diagonal: BigReal
    diagonal_error: BigReal
    complement_error: BigReal
    tolerance: BigReal
    diagonal: list[BigReal] = field(repr=False, default_factory=list)


def spectral_identity_check(result: SpectrumResult, pair: SecularPair, ctx: PrecisionContext) -> SpectralIdentityVerdict:
    """``<phi_i|H|phi_j> = W_i delta_ij`` plus completeness of the null block.

    The null-flagged Ritz vectors must be S-orthonormal among themselves and
    S-orthogonal to the live ones, so together they span the complement.
    """
    mp = ctx.mp
    m = geneig.ritz_vector_matrix_check(result, pair, ctx)
    g = geneig.gram_matrix(result, pair, ctx)
    h_norm = geneig.inf_norm(mp, pair.h)
    tol_h = ctx.tolerance(12) * h_norm
    tol = ctx.tolerance(12)
    n = result.n
    off = geneig.off_diagonal_max(m)
    diag = [m[i][i] for i in range(n)]
    diag_err = max(abs(d - w) for d, w in zip(diag, result.eigenvalues))
    nulls = [j for j in range(n) if result.null_flags[j]]
    comp = mp.zero
    for j in nulls:
        for i in range(n):
            target = 1 if i == j else 0
            comp = max(comp, abs(g[i][j] - target))
    passed = off <= tol_h and diag_err <= tol_h and comp <= tol
    return SpectralIdentityVerdict(passed, off, diag_err, comp, tol_h, diag)
