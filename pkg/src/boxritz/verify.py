"""Regression and invariant suite behind ``boxritz verify``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import geneig, reference
from .analysis import (
    BOUND_SLACK_OFFSET,
    ConvergenceTable,
    build_table,
    cauchy_schwarz_demo,
    compare_with_reference,
    verify_bounds,
)
from .assembly import ModelSpec
from .trigmoments import PrecisionContext, basis_overlap_oracle, eigenfunction_overlap

# (spec, n_min, n_max, levels, reference rows)
PUBLISHED_RUNS = [
    (ModelSpec.standard(), 4, 20, 4, reference.STANDARD),
    (ModelSpec.projected(1), 1, 6, 1, reference.PROJECTED_D1),
    (ModelSpec.projected(2), 2, 10, 2, reference.PROJECTED_D2),
    (ModelSpec.projected(3), 3, 13, 3, reference.PROJECTED_D3),
    (ModelSpec.weighted(["1", "2", "3"]), 4, 14, 3, reference.WEIGHTED_123),
]


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: {self.checked - len(self.failures)}/{self.checked}"


def published_tables(ctx: PrecisionContext) -> list[tuple[ConvergenceTable, dict]]:
    return [(build_table(spec, lo, hi, lv, ctx), ref) for spec, lo, hi, lv, ref in PUBLISHED_RUNS]


def check_regressions(tables, ctx: PrecisionContext) -> CheckResult:
    out = CheckResult("table regression (5e-9 relative)")
    for table, ref in tables:
        out.checked += sum(len(v) for v in ref.values())
        for m in compare_with_reference(table, ref, ctx):
            out.failures.append(f"{table.model.label()} N={m.n} k={m.k}: {m.computed} vs {m.expected}")
    return out


def check_null_counts(tables, ctx: PrecisionContext) -> CheckResult:
    out = CheckResult("null count = N - min(d, N)")
    for table, _ in tables:
        if not table.model.is_projector:
            continue
        for row in table.rows:
            out.checked += 1
            expected = row.n - min(table.model.d, row.n)
            if row.null_count != expected:
                out.failures.append(f"{table.model.label()} N={row.n}: {row.null_count} nulls, want {expected}")
    return out


def check_bounds(tables, ctx: PrecisionContext) -> CheckResult:
    out = CheckResult("bound direction and monotonicity")
    for table, _ in tables:
        report = verify_bounds(table, ctx)
        out.checked += len(report.entries) + len(report.monotone)
        for e in report.violations:
            out.failures.append(f"{table.model.label()} N={e.n} k={e.k}: gap {e.gap} ({e.direction})")
        for m in report.monotone:
            if not m.ok:
                out.failures.append(f"{table.model.label()} k={m.k}: N={m.n}->{m.n_next} not monotone")
    return out


def check_moment_oracle(ctx: PrecisionContext, max_i: int = 20, max_k: int = 5) -> CheckResult:
    out = CheckResult("sine-moment recursion vs Gauss-Legendre")
    tol = ctx.tolerance(10)
    for i in range(1, max_i + 1):
        for k in range(1, max_k + 1):
            out.checked += 1
            diff = abs(eigenfunction_overlap(i, k, ctx) - basis_overlap_oracle(i, k, ctx))
            if diff > tol:
                out.failures.append(f"i={i} k={k}: |diff|={ctx.mp.nstr(diff, 3)}")
    return out


def check_duality(tables, ctx: PrecisionContext) -> CheckResult:
    out = CheckResult("duality oracle (d x d matrix)")
    mp = ctx.mp
    tol = ctx.tolerance(BOUND_SLACK_OFFSET)
    for table, _ in tables:
        if not table.model.is_projector:
            continue
        for row in table.rows:
            out.checked += 1
            dual = geneig.duality_eigenvalues(row.n, table.model, ctx)
            live = row.spectrum.non_null()
            if len(dual) != len(live):
                out.failures.append(f"{table.model.label()} N={row.n}: {len(live)} vs {len(dual)} values")
                continue
            err = max((abs(a - b) / max(mp.one, abs(b)) for a, b in zip(live, dual)), default=mp.zero)
            if err > tol:
                out.failures.append(f"{table.model.label()} N={row.n}: rel diff {mp.nstr(err, 3)}")
    return out


def check_ritz_structure(tables, ctx: PrecisionContext) -> CheckResult:
    out = CheckResult("Ritz structure (S-orthonormality, residual, <phi_i|H|phi_j>)")
    mp = ctx.mp
    tol = ctx.tolerance(12)
    for table, _ in tables:
        for row in table.rows:
            out.checked += 1
            res, pair = row.spectrum, row.pair
            h_norm = geneig.inf_norm(mp, pair.h)
            orth = geneig.orthonormality_residual(res, pair, ctx)
            eig = geneig.eigen_residual(res, pair, ctx)
            off = geneig.off_diagonal_max(geneig.ritz_vector_matrix_check(res, pair, ctx))
            bad = []
            if orth > tol:
                bad.append(f"orth {mp.nstr(orth, 2)}")
            if eig > tol * h_norm:
                bad.append(f"residual {mp.nstr(eig / h_norm, 2)}*|H|")
            if off > tol * h_norm:
                bad.append(f"offdiag {mp.nstr(off / h_norm, 2)}*|H|")
            if bad:
                out.failures.append(f"{table.model.label()} N={row.n}: " + ", ".join(bad))
    return out


def check_cauchy_schwarz(ctx: PrecisionContext, max_d: int = 3, max_n: int = 13) -> CheckResult:
    out = CheckResult("constrained trial quotient <= E_n")
    tol = ctx.tolerance(BOUND_SLACK_OFFSET)
    for d in range(1, max_d + 1):
        for n in range(1, d + 1):
            for size in range(d, max_n + 1):
                out.checked += 1
                rec = cauchy_schwarz_demo(n, d, size, ctx)
                if rec.quotient > rec.bound + tol:
                    out.failures.append(f"n={n} d={d} N={size}: {rec.quotient} > {rec.bound}")
    return out


def run_all(ctx: PrecisionContext, progress: Callable[[str], None] | None = None) -> Iterator[CheckResult]:
    tables = published_tables(ctx)
    checks = [
        lambda: check_regressions(tables, ctx),
        lambda: check_null_counts(tables, ctx),
        lambda: check_bounds(tables, ctx),
        lambda: check_moment_oracle(ctx),
        lambda: check_duality(tables, ctx),
        lambda: check_ritz_structure(tables, ctx),
        lambda: check_cauchy_schwarz(ctx),
    ]
    for check in checks:
        result = check()
        if progress is not None:
            progress(result.line())
        yield result
