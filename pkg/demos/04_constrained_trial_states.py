"""
Trial states orthogonal to all but one box state
================================================

Take psi in the trial space with <psi_k|psi> = 0 for every k <= d except
k = n.  Its projected-Hamiltonian quotient is E_n |<psi_n|psi>|^2 / <psi|psi>,
which by the Cauchy-Schwarz inequality cannot exceed E_n.
"""

from boxritz import PrecisionContext, cauchy_schwarz_demo

ctx = PrecisionContext(64)

# A single basis function: the quotient is 480 / pi**4.
rec = cauchy_schwarz_demo(1, 1, 1, ctx)
print("N=1 quotient:", ctx.mp.nstr(rec.quotient, 12), " 480/pi^4 =", ctx.mp.nstr(480 / ctx.pi**4, 12))

# Keep psi_2 out of three states and grow the basis: the quotient rises to 2 pi^2.
print("\n N   quotient              E_2 - quotient")
for size in range(3, 14):
    rec = cauchy_schwarz_demo(2, 3, size, ctx)
    print(f"{size:2d}   {ctx.mp.nstr(rec.quotient, 16):20s}  {ctx.mp.nstr(rec.bound - rec.quotient, 3)}")
