"""
Why extended precision: the overlap matrix is Hilbert-like
==========================================================

The condition number of S grows roughly tenfold per added function and reaches
~3e29 at N = 20.  At 30 working digits the tabulated values still come out
right.  At 16 digits the solver refuses: either the Cholesky factorization of S
breaks down, or the residual error bound shows the digits cannot be trusted.
"""

from fractions import Fraction

from boxritz import ModelSpec, PrecisionContext, SolverError
from boxritz.analysis import solve_model
from boxritz.assembly import overlap_matrix
from boxritz.cli import format_sig


def exact_condition(n):
    """Infinity-norm condition number of S, by exact Gauss-Jordan inversion."""
    s = overlap_matrix(n)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(s)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    inv = [row[n:] for row in aug]
    norm = lambda m: max(sum(abs(x) for x in row) for row in m)
    return norm(s) * norm(inv)


for n in (5, 10, 15, 20):
    print(f"cond(S), N={n}: {float(exact_condition(n)):.2e}")

print()
for digits in (64, 30, 16):
    ctx = PrecisionContext(digits, allow_low_precision=True)
    for n in (7, 10, 14, 20):
        try:
            row = solve_model(n, ModelSpec.standard(), ctx, 4)
            print(digits, n, [format_sig(w, 10) for w in row.values])
        except SolverError as exc:
            print(digits, n, exc.diagnostic())
