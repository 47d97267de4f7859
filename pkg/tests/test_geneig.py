from fractions import Fraction

import mpmath
import pytest

from boxritz import geneig, reference
from boxritz.assembly import ModelSpec, SecularPair, assemble, kinetic_matrix, overlap_matrix, to_real
from boxritz.geneig import ConvergenceError, NotPositiveDefiniteError
from boxritz.trigmoments import PrecisionContext

REL = Fraction(5, 10**9)


def close(ctx, value, expected):
    ref = ctx.real(expected)
    return abs(value - ref) <= ctx.real(REL) * max(1, abs(ref))


def pair_from_exact(h, s, ctx, spec=None):
    return SecularPair(to_real(h, ctx), to_real(s, ctx), len(s), spec or ModelSpec.standard(), s, h)


def test_standard_rows(ctx):
    res = geneig.solve(assemble(4, ModelSpec.standard(), ctx), ctx)
    assert all(close(ctx, w, e) for w, e in zip(res.eigenvalues, reference.STANDARD[4]))
    res = geneig.solve(assemble(10, ModelSpec.standard(), ctx), ctx)
    assert close(ctx, res.eigenvalues[0], "4.934802200")
    assert close(ctx, res.eigenvalues[3], "78.95700917")


def test_one_by_one_pencil(ctx):
    res = geneig.solve(pair_from_exact([[Fraction(1, 6)]], [[Fraction(1, 30)]], ctx), ctx)
    assert abs(res.eigenvalues[0] - 5) <= ctx.tolerance(2)
    assert res.coefficients[0][0] > 0


def test_classify_null_examples(ctx):
    res = geneig.solve(assemble(6, ModelSpec.projected(2), ctx), ctx)
    assert res.null_count == 4
    live = res.non_null()
    assert close(ctx, live[0], "4.934802200") and close(ctx, live[1], "19.73920734")
    order = res.presentation_order()
    assert [res.null_flags[j] for j in order] == [False] * 2 + [True] * 4
    assert geneig.solve(assemble(6, ModelSpec.projected(1), ctx), ctx).null_count == 5
    assert geneig.solve(assemble(4, ModelSpec.standard(), ctx), ctx).null_count == 0


def test_classify_null_threshold(ctx):
    res = geneig.solve(assemble(3, ModelSpec.standard(), ctx), ctx)
    fake = [ctx.real("1e-30"), ctx.real("6e-19"), ctx.real(50)]
    import dataclasses

    flagged = geneig.classify_null(dataclasses.replace(res, eigenvalues=fake), ctx)
    # threshold is 1e-20 * 50
    assert flagged.null_flags == [True, False, False]


def test_ritz_matrix_projected_d3_n7(ctx):
    pair = assemble(7, ModelSpec.projected(3), ctx)
    res = geneig.solve(pair, ctx)
    m = geneig.ritz_vector_matrix_check(res, pair, ctx)
    h_norm = geneig.inf_norm(ctx.mp, pair.h)
    assert geneig.off_diagonal_max(m) <= ctx.tolerance(12) * h_norm
    diag = [m[j][j] for j in res.presentation_order()]
    for w, e in zip(diag, reference.PROJECTED_D3[7]):
        assert close(ctx, w, e)
    assert all(abs(x) <= ctx.tolerance(12) * h_norm for x in diag[3:])


def test_ritz_matrix_standard_n5(ctx):
    pair = assemble(5, ModelSpec.standard(), ctx)
    res = geneig.solve(pair, ctx)
    m = geneig.ritz_vector_matrix_check(res, pair, ctx)
    for j, e in enumerate(reference.STANDARD[5]):
        assert close(ctx, m[j][j], e)
    assert geneig.off_diagonal_max(m) <= ctx.tolerance(12) * geneig.inf_norm(ctx.mp, pair.h)


@pytest.mark.parametrize(
    "spec,n",
    [(ModelSpec.standard(), 2), (ModelSpec.standard(), 8), (ModelSpec.projected(2), 9), (ModelSpec.weighted([1, 2, 3]), 8)],
)
def test_result_invariants(ctx, spec, n):
    pair = assemble(n, spec, ctx)
    res = geneig.solve(pair, ctx)
    assert res.eigenvalues == sorted(res.eigenvalues)
    tol = ctx.tolerance(12)
    h_norm = geneig.inf_norm(ctx.mp, pair.h)
    assert geneig.orthonormality_residual(res, pair, ctx) <= tol
    assert geneig.eigen_residual(res, pair, ctx) <= tol * h_norm


@pytest.mark.parametrize("spec,n", [(ModelSpec.standard(), 12), (ModelSpec.projected(3), 10)])
def test_pencil_invariant_under_basis_rescaling(ctx, spec, n):
    pair = assemble(n, spec, ctx)
    # u_i -> 2 u_i multiplies every entry of H and S by 4, exactly in binary
    scaled = SecularPair([[4 * x for x in r] for r in pair.h], [[4 * x for x in r] for r in pair.s], n, spec, pair.exact_s)
    a = geneig.solve(pair, ctx).eigenvalues
    b = geneig.solve(scaled, ctx).eigenvalues
    tol = ctx.tolerance(15)
    for x, y in zip(a, b):
        assert abs(x - y) <= tol * max(1, abs(x))


@pytest.mark.parametrize("spec,n", [(ModelSpec.standard(), 20), (ModelSpec.weighted([1, 2, 3]), 14)])
def test_trace_identity(ctx, spec, n):
    res = geneig.solve(assemble(n, spec, ctx), ctx)
    trace = ctx.mp.fsum(res.transformed[i][i] for i in range(n))
    total = ctx.mp.fsum(res.eigenvalues)
    assert abs(total - trace) <= ctx.tolerance(12) * max(1, abs(trace))


@pytest.mark.parametrize(
    "spec,n",
    [(ModelSpec.projected(1), 1), (ModelSpec.projected(2), 5), (ModelSpec.projected(3), 13), (ModelSpec.weighted(["0.5", "4", "1"]), 7)],
)
def test_duality_oracle_and_lower_bound(ctx, spec, n):
    res = geneig.solve(assemble(n, spec, ctx), ctx)
    dual = geneig.duality_eigenvalues(n, spec, ctx)
    live = res.non_null()
    assert len(dual) == len(live) == min(spec.d, n)
    for a, b in zip(live, dual):
        assert abs(a - b) <= ctx.tolerance(15) * max(1, abs(b))
    weights = sorted(spec.level_weights(ctx))
    for w, ref in zip(live, weights):
        assert w <= ref + ctx.tolerance(15)


def test_duality_rejects_negative_weights(ctx):
    with pytest.raises(ValueError):
        geneig.duality_eigenvalues(4, ModelSpec.weighted([-1, 1]), ctx)


def test_deterministic_digits(ctx):
    spec = ModelSpec.projected(3)
    runs = [geneig.solve(assemble(9, spec, ctx), ctx) for _ in range(2)]
    digits = [[mpmath.nstr(x, 64) for x in r.eigenvalues] for r in runs]
    coeffs = [[mpmath.nstr(x, 64) for row in r.coefficients for x in row] for r in runs]
    assert digits[0] == digits[1]
    assert coeffs[0] == coeffs[1]


def test_sign_convention(ctx):
    res = geneig.solve(assemble(8, ModelSpec.standard(), ctx), ctx)
    for j in range(8):
        col = res.column(j)
        first = next(x for x in col if abs(x) > ctx.tolerance(20))
        assert first > 0


def test_cholesky_failure_reports_pivot(ctx):
    s = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(1)]]
    with pytest.raises(NotPositiveDefiniteError) as info:
        geneig.solve(pair_from_exact([[Fraction(1), 0], [0, Fraction(1)]], s, ctx), ctx)
    assert info.value.pivot_index == 2
    assert "S-not-positive-definite" in info.value.diagnostic()


def test_low_precision_gram_breakdown():
    low = PrecisionContext(16, allow_low_precision=True)
    with pytest.raises(NotPositiveDefiniteError):
        geneig.solve(assemble(20, ModelSpec.standard(), low), low)


def test_sweep_cap_reports_residual(ctx):
    pair = assemble(5, ModelSpec.standard(), ctx)
    with pytest.raises(ConvergenceError) as info:
        geneig.solve(pair, ctx, max_sweeps=1)
    assert info.value.residual > 0
    assert info.value.sweeps == 1


def test_jacobi_sweep_count_within_cap(ctx):
    res = geneig.solve(assemble(20, ModelSpec.standard(), ctx), ctx)
    assert res.sweeps <= 12


def test_error_bounds_small_at_working_precision(ctx):
    spec = ModelSpec.standard()
    res = geneig.solve(assemble(12, spec, ctx), ctx)
    bounds = geneig.error_bounds(res, spec, ctx)
    assert max(bounds) < ctx.real("1e-30")


def test_error_bounds_flag_low_precision():
    low = PrecisionContext(16, allow_low_precision=True)
    spec = ModelSpec.standard()
    res = geneig.solve(assemble(10, spec, low), low)
    assert max(geneig.error_bounds(res, spec, low)[:4]) > low.real("1e-9")
