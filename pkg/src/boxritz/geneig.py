"""Generalized symmetric-definite eigenproblem ``H c = W S c`` at working precision.

The pencil is reduced with a Cholesky factor ``S = L L^T`` to the standard
problem ``A = L^-1 H L^-T`` and ``A`` is diagonalized by row-cyclic Jacobi
rotations.  Everything is plain Python over mpmath numbers: the matrices are
small (N <= 20 or so) and precision, not speed, is the constraint.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .assembly import (
    ModelSpec,
    RealMatrix,
    SecularPair,
    assemble,
    overlap_matrix,
    overlap_with_eigenfunctions,
    to_real,
)
from .trigmoments import BigReal, PrecisionContext

MAX_SWEEPS = 40
NULL_RELATIVE_THRESHOLD_EXP = -20


class SolverError(ArithmeticError):
    """Base class for failures of the eigensolver."""

    kind = "solver-error"

    def __init__(self, message: str, n: Optional[int] = None):
        super().__init__(message)
        self.n = n

    def diagnostic(self) -> str:
        where = f" N={self.n}" if self.n is not None else ""
        return f"geneig:{where} {self.kind}: {self}"


class NotPositiveDefiniteError(SolverError):
    """Cholesky met a pivot that is not positive at working precision."""

    kind = "S-not-positive-definite"

    def __init__(self, pivot_index: int, pivot: BigReal, n: Optional[int] = None):
        super().__init__(f"nonpositive pivot {pivot_index} ({float(pivot):.3e})", n)
        self.pivot_index = pivot_index
        self.pivot = pivot


class ConvergenceError(SolverError):
    kind = "jacobi-no-convergence"

    def __init__(self, sweeps: int, residual: BigReal, n: Optional[int] = None):
        super().__init__(
            f"off-diagonal norm {float(residual):.3e} after {sweeps} sweeps", n
        )
        self.sweeps = sweeps
        self.residual = residual


class PrecisionLossError(SolverError):
    """The a-posteriori error bound is too large for the requested digits."""

    kind = "precision-loss"

    def __init__(self, message: str, bounds: Sequence[BigReal] = (), n: Optional[int] = None):
        super().__init__(message, n)
        self.bounds = list(bounds)


@dataclass(frozen=True)
class SpectrumResult:
    """Sorted Ritz values and S-orthonormal coefficient vectors of one solve.

    ``coefficients[i][j]`` is the weight of ``u_{i+1}`` in Ritz vector ``j``.
    """

    eigenvalues: list[BigReal]
    coefficients: RealMatrix = field(repr=False)
    null_flags: list[bool]
    n: int
    model: ModelSpec
    sweeps: int = 0
    transformed: RealMatrix = field(default=None, repr=False)

    def column(self, j: int) -> list[BigReal]:
        return [row[j] for row in self.coefficients]

    @property
    def null_count(self) -> int:
        return sum(self.null_flags)

    def presentation_order(self) -> list[int]:
        """Indices of non-null eigenvalues (ascending) followed by the nulls."""
        live = [j for j in range(self.n) if not self.null_flags[j]]
        dead = [j for j in range(self.n) if self.null_flags[j]]
        return live + dead

    def non_null(self) -> list[BigReal]:
        return [w for w, z in zip(self.eigenvalues, self.null_flags) if not z]


def _dot(mp, a, b) -> BigReal:
    return mp.fdot(a, b)


def matvec(mp, m: RealMatrix, v: Sequence[BigReal]) -> list[BigReal]:
    return [mp.fdot(row, v) for row in m]


def inf_norm(mp, m: RealMatrix) -> BigReal:
    return max(mp.fsum(abs(x) for x in row) for row in m)


def cholesky(s: RealMatrix, ctx: PrecisionContext, n_label: Optional[int] = None) -> RealMatrix:
    """Lower-triangular ``L`` with ``L L^T = S``."""
    mp = ctx.mp
    n = len(s)
    low = [[mp.zero] * n for _ in range(n)]
    for j in range(n):
        pivot = s[j][j] - mp.fsum(low[j][m] ** 2 for m in range(j))
        if pivot <= 0:
            raise NotPositiveDefiniteError(j + 1, pivot, n_label)
        ljj = mp.sqrt(pivot)
        low[j][j] = ljj
        for i in range(j + 1, n):
            low[i][j] = (s[i][j] - mp.fdot(low[i][:j], low[j][:j])) / ljj
    return low


def forward_solve(mp, low: RealMatrix, b: Sequence[BigReal]) -> list[BigReal]:
    """Solve ``L x = b``."""
    x: list[BigReal] = []
    for i in range(len(b)):
        x.append((b[i] - mp.fdot(low[i][:i], x)) / low[i][i])
    return x


def backward_solve_transposed(mp, low: RealMatrix, b: Sequence[BigReal]) -> list[BigReal]:
    """Solve ``L^T x = b``."""
    n = len(b)
    x = [mp.zero] * n
    for i in reversed(range(n)):
        acc = b[i] - mp.fsum(low[m][i] * x[m] for m in range(i + 1, n))
        x[i] = acc / low[i][i]
    return x


def reduce_pencil(h: RealMatrix, low: RealMatrix, ctx: PrecisionContext) -> RealMatrix:
    """``A = L^-1 H L^-T``, symmetrized."""
    mp = ctx.mp
    n = len(h)
    # columns of L^-1 H, then rows of L^-1 (L^-1 H)^T
    x_cols = [forward_solve(mp, low, [h[i][j] for i in range(n)]) for j in range(n)]
    a_cols = [forward_solve(mp, low, [x_cols[j][i] for j in range(n)]) for i in range(n)]
    a = [[a_cols[j][i] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a[i][j] = a[j][i] = (a[i][j] + a[j][i]) / 2
    return a


def jacobi_eigh(
    a: RealMatrix, ctx: PrecisionContext, max_sweeps: int = MAX_SWEEPS, n_label: Optional[int] = None
) -> tuple[list[BigReal], RealMatrix, int]:
    """Eigen-decomposition of a symmetric matrix by row-cyclic Jacobi rotations.

    Returns ``(values, vectors, sweeps)`` with ``vectors[i][j]`` the i-th
    component of eigenvector j.  Unsorted.
    """
    mp = ctx.mp
    n = len(a)
    a = [list(row) for row in a]
    v = [[mp.one if i == j else mp.zero for j in range(n)] for i in range(n)]
    frob = mp.sqrt(mp.fsum(x * x for row in a for x in row))
    tol = ctx.tolerance(8) * frob

    def off() -> BigReal:
        return mp.sqrt(mp.fsum(a[i][j] ** 2 for i in range(n) for j in range(n) if i != j))

    sweeps = 0
    while True:
        residual = off()
        if residual <= tol:
            break
        if sweeps >= max_sweeps:
            raise ConvergenceError(sweeps, residual, n_label)
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if not apq:
                    continue
                theta = (a[q][q] - a[p][p]) / (2 * apq)
                t = 1 / (abs(theta) + mp.sqrt(theta * theta + 1))
                if theta < 0:
                    t = -t
                c = 1 / mp.sqrt(t * t + 1)
                s = t * c
                for r in range(n):
                    if r == p or r == q:
                        continue
                    arp, arq = a[r][p], a[r][q]
                    a[r][p] = a[p][r] = c * arp - s * arq
                    a[r][q] = a[q][r] = s * arp + c * arq
                a[p][p] -= t * apq
                a[q][q] += t * apq
                a[p][q] = a[q][p] = mp.zero
                for r in range(n):
                    vrp, vrq = v[r][p], v[r][q]
                    v[r][p] = c * vrp - s * vrq
                    v[r][q] = s * vrp + c * vrq
    return [a[i][i] for i in range(n)], v, sweeps


def _fix_sign(mp, col: list[BigReal]) -> list[BigReal]:
    biggest = max(abs(x) for x in col)
    if not biggest:
        return col
    floor = biggest * mp.mpf(10) ** (-(mp.dps // 2))
    for x in col:
        if abs(x) > floor:
            return col if x > 0 else [-y for y in col]
    return col


def solve(pair: SecularPair, ctx: PrecisionContext, max_sweeps: int = MAX_SWEEPS) -> SpectrumResult:
    """Ritz values and vectors of the pencil ``(H, S)``.

    Raises :class:`NotPositiveDefiniteError` if the Cholesky factorization of
    ``S`` breaks down and :class:`ConvergenceError` if Jacobi does not settle
    within ``max_sweeps``.  The null flags are filled in by
    :func:`classify_null`.
    """
    mp = ctx.mp
    n = pair.n
    low = cholesky(pair.s, ctx, n)
    a = reduce_pencil(pair.h, low, ctx)
    values, vecs, sweeps = jacobi_eigh(a, ctx, max_sweeps, n)
    order = sorted(range(n), key=lambda j: values[j])
    eigenvalues = [values[j] for j in order]
    columns = []
    for j in order:
        c = backward_solve_transposed(mp, low, [vecs[i][j] for i in range(n)])
        norm = mp.sqrt(_dot(mp, c, matvec(mp, pair.s, c)))
        columns.append(_fix_sign(mp, [x / norm for x in c]))
    coefficients = [[columns[j][i] for j in range(n)] for i in range(n)]
    result = SpectrumResult(eigenvalues, coefficients, [False] * n, n, pair.model, sweeps, a)
    return classify_null(result, ctx)


def null_threshold(eigenvalues: Sequence[BigReal], ctx: PrecisionContext) -> BigReal:
    mp = ctx.mp
    scale = max([mp.one] + [abs(w) for w in eigenvalues])
    return mp.mpf(10) ** NULL_RELATIVE_THRESHOLD_EXP * scale


def classify_null(result: SpectrumResult, ctx: PrecisionContext) -> SpectrumResult:
    """Flag eigenvalues with ``|W| <= 1e-20 max(1, max|W|)`` as null."""
    cut = null_threshold(result.eigenvalues, ctx)
    flags = [abs(w) <= cut for w in result.eigenvalues]
    return dataclasses.replace(result, null_flags=flags)


def ritz_vector_matrix_check(result: SpectrumResult, pair: SecularPair, ctx: PrecisionContext) -> RealMatrix:
    """``M_ij = c_i^T H c_j``; diagonal with the Ritz values on it for a good solve."""
    mp = ctx.mp
    cols = [result.column(j) for j in range(result.n)]
    hc = [matvec(mp, pair.h, c) for c in cols]
    return [[_dot(mp, cols[i], hc[j]) for j in range(result.n)] for i in range(result.n)]


def gram_matrix(result: SpectrumResult, pair: SecularPair, ctx: PrecisionContext) -> RealMatrix:
    """``G_ij = c_i^T S c_j``; the identity for S-orthonormal Ritz vectors."""
    mp = ctx.mp
    cols = [result.column(j) for j in range(result.n)]
    sc = [matvec(mp, pair.s, c) for c in cols]
    return [[_dot(mp, cols[i], sc[j]) for j in range(result.n)] for i in range(result.n)]


def orthonormality_residual(result: SpectrumResult, pair: SecularPair, ctx: PrecisionContext) -> BigReal:
    g = gram_matrix(result, pair, ctx)
    n = result.n
    return max(abs(g[i][j] - (1 if i == j else 0)) for i in range(n) for j in range(n))


def eigen_residual(result: SpectrumResult, pair: SecularPair, ctx: PrecisionContext) -> BigReal:
    """``max_j ||H c_j - W_j S c_j||_inf``."""
    mp = ctx.mp
    worst = mp.zero
    for j, w in enumerate(result.eigenvalues):
        c = result.column(j)
        hc = matvec(mp, pair.h, c)
        sc = matvec(mp, pair.s, c)
        worst = max(worst, max(abs(x - w * y) for x, y in zip(hc, sc)))
    return worst


def off_diagonal_max(m: RealMatrix) -> BigReal:
    n = len(m)
    return max((abs(m[i][j]) for i in range(n) for j in range(n) if i != j), default=0)


def error_bounds(result: SpectrumResult, spec: ModelSpec, ctx: PrecisionContext, guard_digits: int = 40) -> list[BigReal]:
    """A-posteriori bounds on the distance from each Ritz value to the pencil spectrum.

    For a symmetric-definite pencil and any ``(W, c)``,
    ``min_lambda |lambda - W| <= sqrt(r^T S^-1 r / c^T S c)`` with
    ``r = H c - W S c``.  The pencil is re-assembled and the residual
    evaluated ``guard_digits`` above working precision, so the bound
    measures the error of the stored values and not the check's own rounding.
    """
    hi = ctx.higher(max(guard_digits, ctx.decimal_digits))
    mp = hi.mp
    pair = assemble(result.n, spec, hi)
    low = cholesky(pair.s, hi, result.n)
    bounds = []
    for j, w in enumerate(result.eigenvalues):
        c = [hi.real(x) for x in result.column(j)]
        wj = hi.real(w)
        hc = matvec(mp, pair.h, c)
        sc = matvec(mp, pair.s, c)
        r = [x - wj * y for x, y in zip(hc, sc)]
        y = forward_solve(mp, low, r)
        bound = mp.sqrt(_dot(mp, y, y) / _dot(mp, c, sc))
        bounds.append(ctx.real(bound))
    return bounds


def duality_eigenvalues(n: int, spec: ModelSpec, ctx: PrecisionContext) -> list[BigReal]:
    """Non-null pencil eigenvalues via the ``d x d`` matrix ``sqrt(w_k w_l) (V^T S^-1 V)_kl``.

    ``V_ik = <u_i|psi_k>``.  The non-zero spectra of ``AB`` and ``BA`` agree,
    so this independently reproduces the ``min(d, n)`` non-null Ritz values.
    Uses mpmath's LU solver and symmetric eigensolver rather than the
    Cholesky/Jacobi path above.  Requires non-negative weights.
    """
    mp = ctx.mp
    if not spec.is_projector:
        raise ValueError("duality oracle needs a projected or weighted model")
    w = spec.level_weights(ctx)
    if any(x < 0 for x in w):
        raise ValueError("duality oracle needs non-negative weights")
    v = overlap_with_eigenfunctions(n, spec.d, ctx)
    s = mp.matrix(to_real(overlap_matrix(n), ctx))
    vm = mp.matrix(v)
    x = mp.matrix(n, spec.d)
    for k in range(spec.d):
        col = mp.lu_solve(s, vm.column(k))
        for i in range(n):
            x[i, k] = col[i]
    gram = vm.T * x
    g = mp.matrix(spec.d, spec.d)
    roots = [mp.sqrt(x) for x in w]
    for k in range(spec.d):
        for l in range(spec.d):
            g[k, l] = roots[k] * roots[l] * (gram[k, l] + gram[l, k]) / 2
    values = mp.eigsy(g, eigvals_only=True)
    values = sorted(values[i] for i in range(spec.d))
    # rank of V^T S^-1 V is min(d, n); drop the structural zeros
    return values[spec.d - min(spec.d, n):]

