"""
Arbitrary weights on the box eigenfunctions
===========================================

H = sum_k alpha_k |psi_k><psi_k| with any real alpha_k.  With alpha = (1, 2, 3)
the Ritz values creep up to 1, 2, 3.  Weights are parsed as exact fractions,
so "0.1" means 1/10 and not the nearest double.
"""

from boxritz import ModelSpec, PrecisionContext, build_table
from boxritz.cli import render_text

ctx = PrecisionContext(64)

table = build_table(ModelSpec.weighted(["1", "2", "3"]), 4, 14, 3, ctx)
print(render_text(table))

# How far below the weights each value still is.
for row in table.rows[::3]:
    gaps = [ctx.mp.nstr(k - w, 3) for k, w in zip((1, 2, 3), row.values)]
    print(row.n, gaps)

# %%
# Negative weights are allowed.  The zeros then sit between the negative and
# positive Ritz values in plain ascending order; the table lists live values first.
mixed = build_table(ModelSpec.weighted(["-2", "0.5", "4"]), 3, 8, 3, ctx)
print()
print(render_text(mixed))
