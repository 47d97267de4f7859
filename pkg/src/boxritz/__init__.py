"""Rayleigh-Ritz eigenvalues for the particle in a box in a non-orthogonal polynomial basis.

Besides the kinetic Hamiltonian, the package treats projections
``sum_k w_k |psi_k><psi_k|`` onto the exact box eigenfunctions, whose Ritz
values approach the weights from below and come with ``N - d`` exact zeros.

Subpackages
-----------
exactpoly
    Exact rational polynomials and the trial functions ``x**i (1 - x)``.
trigmoments
    Working-precision context, sine moments and a quadrature oracle.
assembly
    Overlap, kinetic and projector matrices.
geneig
    Cholesky + Jacobi solver for the symmetric-definite pencil.
analysis
    Convergence tables, bound checks, constrained trial states.
"""

from .analysis import (
    ConvergenceTable,
    build_table,
    cauchy_schwarz_demo,
    spectral_identity_check,
    verify_bounds,
)
from .assembly import ModelKind, ModelSpec, SecularPair, assemble
from .exactpoly import Polynomial, basis_function
from .geneig import (
    ConvergenceError,
    NotPositiveDefiniteError,
    PrecisionLossError,
    SolverError,
    SpectrumResult,
    classify_null,
    solve,
)
from .trigmoments import PrecisionContext

__all__ = [
    "ConvergenceError",
    "ConvergenceTable",
    "ModelKind",
    "ModelSpec",
    "NotPositiveDefiniteError",
    "Polynomial",
    "PrecisionContext",
    "PrecisionLossError",
    "SecularPair",
    "SolverError",
    "SpectrumResult",
    "assemble",
    "basis_function",
    "build_table",
    "cauchy_schwarz_demo",
    "classify_null",
    "solve",
    "spectral_identity_check",
    "verify_bounds",
]
