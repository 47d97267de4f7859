"""
A projected Hamiltonian gives lower bounds and exact zeros
==========================================================

Replace the kinetic operator by H_d = sum_k E_k |psi_k><psi_k| over the lowest
d box states.  The same Rayleigh-Ritz machinery now returns d meaningful
values, which climb towards E_k from *below*, plus N - d roots that vanish
because H_d has rank d.
"""

from boxritz import ModelSpec, PrecisionContext, build_table, geneig, verify_bounds
from boxritz.cli import render_text

ctx = PrecisionContext(64)

for d, (n_min, n_max) in {1: (1, 6), 2: (2, 10), 3: (3, 13)}.items():
    table = build_table(ModelSpec.projected(d), n_min, n_max, d, ctx)
    print(render_text(table))
    report = verify_bounds(table, ctx)
    print("below E_k:", report.bounds_ok, "| non-decreasing in N:", report.monotone_ok, "\n")

# %%
# The non-null values can be obtained a second way.  With V_ik = <u_i|psi_k>,
# they are the eigenvalues of the small d x d matrix
# sqrt(E_k E_l) (V^T S^-1 V)_kl, since AB and BA share their non-zero spectrum.
spec = ModelSpec.projected(3)
row = build_table(spec, 9, 9, 3, ctx).rows[0]
dual = geneig.duality_eigenvalues(9, spec, ctx)
for a, b in zip(row.values, dual):
    print(ctx.mp.nstr(a, 20), ctx.mp.nstr(b, 20))
