import random
from fractions import Fraction

import pytest

from boxritz import geneig
from boxritz.assembly import (
    ModelKind,
    ModelSpec,
    assemble,
    kinetic_matrix,
    overlap_matrix,
    projected_matrix,
)
from boxritz.trigmoments import gauss_legendre

REL = Fraction(5, 10**9)


def close(ctx, value, expected, rel=REL):
    ref = ctx.real(expected)
    return abs(value - ref) <= ctx.real(rel) * max(1, abs(ref))


def test_overlap_examples():
    assert overlap_matrix(1) == [[Fraction(1, 30)]]
    assert overlap_matrix(2)[0][1] == Fraction(1, 60)


def test_kinetic_examples():
    assert kinetic_matrix(1) == [[Fraction(1, 6)]]
    # single-function Rayleigh quotient, exact before any rounding
    assert kinetic_matrix(1)[0][0] / overlap_matrix(1)[0][0] == 5


def test_single_function_quotient_above_ground_state(ctx):
    assert ctx.real(5) >= ctx.level(1)


@pytest.mark.parametrize("n", [1, 5, 12, 20])
def test_exact_symmetry(n):
    s, h = overlap_matrix(n), kinetic_matrix(n)
    for i in range(n):
        for j in range(n):
            assert s[i][j] == s[j][i]
            assert h[i][j] == h[j][i]


def test_matrices_against_quadrature(ctx):
    # u_i evaluated directly as x**i (1 - x); 64-point rule is exact to degree 127
    mp = ctx.mp
    nodes = gauss_legendre(ctx)
    n = 20
    s, h = overlap_matrix(n), kinetic_matrix(n)
    tol = ctx.tolerance(10)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            s_q = mp.fsum(w * x**i * (1 - x) * x**j * (1 - x) for x, w in nodes)
            du_i = [(i * x ** (i - 1) - (i + 1) * x**i) for x, _ in nodes]
            du_j = [(j * x ** (j - 1) - (j + 1) * x**j) for x, _ in nodes]
            h_q = mp.fsum(w * a * b for (_, w), a, b in zip(nodes, du_i, du_j)) / 2
            assert abs(ctx.real(s[i - 1][j - 1]) - s_q) <= tol
            assert abs(ctx.real(h[i - 1][j - 1]) - h_q) <= tol


@pytest.mark.parametrize("n", range(1, 21))
def test_gram_cholesky_succeeds(ctx, n):
    pair = assemble(n, ModelSpec.standard(), ctx)
    geneig.cholesky(pair.s, ctx)


def test_projected_single_entry(ctx):
    m = projected_matrix(1, ModelSpec.projected(1), ctx)
    assert abs(m[0][0] - 16 / ctx.pi**4) <= ctx.tolerance(10)


def test_projected_rank(ctx):
    pair = assemble(6, ModelSpec.projected(2), ctx)
    res = geneig.solve(pair, ctx)
    assert len(res.non_null()) == 2
    assert res.null_count == 4


def test_weighted_n4_table_row(ctx):
    res = geneig.solve(assemble(4, ModelSpec.weighted([1, 2, 3]), ctx), ctx)
    live = res.non_null()
    for w, e in zip(live, ["0.9999994479", "1.999877421", "2.818209291"]):
        assert close(ctx, w, e)
    assert res.null_count == 1


def test_assemble_examples(ctx):
    res = geneig.solve(assemble(1, ModelSpec.projected(1), ctx), ctx)
    assert abs(res.eigenvalues[0] - 480 / ctx.pi**4) <= ctx.tolerance(10)
    assert close(ctx, res.eigenvalues[0], "4.927671482")
    res = geneig.solve(assemble(3, ModelSpec.projected(3), ctx), ctx)
    for w, e in zip(res.non_null(), ["4.934799541", "19.40270646", "41.72191568"]):
        assert close(ctx, w, e)
    res = geneig.solve(assemble(4, ModelSpec.standard(), ctx), ctx)
    for w, e in zip(res.eigenvalues, ["4.934874810", "19.75077640", "51.06512518", "100.2492235"]):
        assert close(ctx, w, e)


def test_pair_keeps_exact_overlap(ctx):
    pair = assemble(5, ModelSpec.projected(2), ctx)
    assert pair.exact_s == overlap_matrix(5)
    assert pair.exact_h is None
    assert assemble(5, ModelSpec.standard(), ctx).exact_h == kinetic_matrix(5)


@pytest.mark.parametrize(
    "spec",
    [ModelSpec.projected(3), ModelSpec.weighted(["0.5", "2", "7"]), ModelSpec.weighted([4, 1])],
)
def test_projector_domination(ctx, spec):
    rng = random.Random(1234)
    mp = ctx.mp
    n = 9
    pair = assemble(n, spec, ctx)
    w_max = max(spec.level_weights(ctx))
    slack = ctx.tolerance(15)
    for _ in range(25):
        c = [ctx.real(Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000))) for _ in range(n)]
        hc = mp.fdot(c, geneig.matvec(mp, pair.h, c))
        sc = mp.fdot(c, geneig.matvec(mp, pair.s, c))
        assert hc <= w_max * sc + slack * sc


def test_model_spec_validation():
    with pytest.raises(ValueError):
        ModelSpec(ModelKind.PROJECTED, 0)
    with pytest.raises(ValueError):
        ModelSpec(ModelKind.WEIGHTED, 3, (1, 2))
    with pytest.raises(ValueError):
        ModelSpec(ModelKind.STANDARD, 0, (1,))
    spec = ModelSpec.weighted(["0.1", "-2.5"])
    assert spec.weights == (Fraction(1, 10), Fraction(-5, 2))
    assert spec.d == 2
    assert ModelSpec("projected", 2).kind is ModelKind.PROJECTED


def test_negative_weights_allowed(ctx):
    spec = ModelSpec.weighted([-1, 2])
    res = geneig.solve(assemble(6, spec, ctx), ctx)
    live = res.non_null()
    assert len(live) == 2
    assert live[0] < 0 < live[1]
