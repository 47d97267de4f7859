"""
Ritz values of the particle in a box approach the exact levels from above
=========================================================================

The trial functions x**i (1 - x) are far from orthogonal, so the secular
problem is a generalized one, det(H - W S) = 0.  Every Ritz value sits above
the exact level k**2 pi**2 / 2 it approximates and decreases as functions are
added.
"""

from boxritz import ModelSpec, PrecisionContext, build_table, verify_bounds
from boxritz.cli import format_sig

ctx = PrecisionContext(64)

# Basis sizes 4..20, four lowest levels.  About five seconds.
table = build_table(ModelSpec.standard(), 4, 20, 4, ctx)

for row in table.rows:
    print(f"{row.n:3d}  " + "  ".join(format_sig(w, 10) for w in row.values))

# Gap to the exact levels.  Adding one even and one odd function improves one
# level at a time, which is why values repeat in pairs down the columns.
print()
for k in range(1, 5):
    gap = table.row(20).values[k - 1] - ctx.level(k)
    print(f"W{k}(N=20) - E{k} = {ctx.mp.nstr(gap, 3)}")

report = verify_bounds(table, ctx)
print("\nupper bounds hold:", report.bounds_ok, "| monotone from above:", report.monotone_ok)
