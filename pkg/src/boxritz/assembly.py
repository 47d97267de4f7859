"""Matrices of the secular problem ``det(H - W S) = 0`` in the polynomial basis.

Three models share the basis ``u_i = x**i (1 - x)``, ``i = 1..N``:

* ``standard``: the box kinetic operator ``-1/2 d^2/dx^2``;
* ``projected``: ``sum_k E_k |psi_k><psi_k|`` over the lowest ``d`` box states;
* ``weighted``: the same projector with arbitrary real weights.

Overlap and kinetic matrices are exact rationals; anything involving pi is
assembled at the working precision of a :class:`PrecisionContext`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .exactpoly import basis_function, derivative, integrate_unit, multiply
from .trigmoments import BigReal, PrecisionContext, eigenfunction_overlap

RationalMatrix = list[list[Fraction]]
RealMatrix = list[list[BigReal]]


class ModelKind(str, enum.Enum):
    STANDARD = "standard"
    PROJECTED = "projected"
    WEIGHTED = "weighted"


@dataclass(frozen=True)
class ModelSpec:
    """Which operator to restrict to the trial space.

    ``weights`` are stored as exact fractions; decimal strings such as
    ``"0.1"`` are parsed exactly so no binary rounding sneaks into inputs.
    """

    kind: ModelKind = ModelKind.STANDARD
    d: int = 0
    weights: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        kind = ModelKind(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        if kind is ModelKind.STANDARD:
            if self.weights:
                raise ValueError("the standard model takes no weights")
            return
        if self.d < 1:
            raise ValueError(f"{kind.value} model needs d >= 1, got {self.d}")
        if kind is ModelKind.WEIGHTED and len(self.weights) != self.d:
            raise ValueError(f"weighted model needs exactly d={self.d} weights, got {len(self.weights)}")
        if kind is ModelKind.PROJECTED and self.weights:
            raise ValueError("the projected model uses the box energies; use 'weighted' for custom weights")

    @classmethod
    def standard(cls) -> "ModelSpec":
        return cls(ModelKind.STANDARD)

    @classmethod
    def projected(cls, d: int) -> "ModelSpec":
        return cls(ModelKind.PROJECTED, d)

    @classmethod
    def weighted(cls, weights: Sequence[Union[str, int, Fraction]]) -> "ModelSpec":
        return cls(ModelKind.WEIGHTED, len(weights), tuple(Fraction(w) for w in weights))

    @property
    def is_projector(self) -> bool:
        return self.kind is not ModelKind.STANDARD

    def level_weights(self, ctx: PrecisionContext) -> list[BigReal]:
        """Weights ``w_k`` of the projector terms, ``k = 1..d``."""
        if self.kind is ModelKind.PROJECTED:
            return [ctx.level(k) for k in range(1, self.d + 1)]
        if self.kind is ModelKind.WEIGHTED:
            return [ctx.real(w) for w in self.weights]
        raise ValueError("the standard model has no projector weights")

    def label(self) -> str:
        if self.kind is ModelKind.STANDARD:
            return "standard"
        if self.kind is ModelKind.PROJECTED:
            return f"projected(d={self.d})"
        return "weighted(" + ",".join(str(w) for w in self.weights) + ")"


@dataclass(frozen=True)
class SecularPair:
    """``(H, S)`` in the trial basis at working precision."""

    h: RealMatrix = field(repr=False)
    s: RealMatrix = field(repr=False)
    n: int
    model: ModelSpec
    exact_s: RationalMatrix = field(repr=False)
    exact_h: RationalMatrix | None = field(default=None, repr=False)
    digits: int = 0


def _symmetric(n: int, entry) -> list[list]:
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            out[i][j] = out[j][i] = entry(i + 1, j + 1)
    return out


def overlap_matrix(n: int) -> RationalMatrix:
    """``S_ij = <u_i|u_j>`` exactly, 1-based basis indices."""
    if n < 1:
        raise ValueError(f"basis size must be >= 1, got {n}")
    return _symmetric(n, lambda i, j: integrate_unit(multiply(basis_function(i), basis_function(j))))


def kinetic_matrix(n: int) -> RationalMatrix:
    """``H_ij = 1/2 <u_i'|u_j'>``.

    Equal to ``<u_i| -1/2 d^2/dx^2 |u_j>`` since the boundary terms of the
    integration by parts vanish for this basis.
    """
    if n < 1:
        raise ValueError(f"basis size must be >= 1, got {n}")
    return _symmetric(
        n,
        lambda i, j: integrate_unit(
            multiply(derivative(basis_function(i)), derivative(basis_function(j)))
        )
        / 2,
    )


def overlap_with_eigenfunctions(n: int, d: int, ctx: PrecisionContext) -> RealMatrix:
    """``V[i][k] = <u_{i+1}|psi_{k+1}>``, an ``n x d`` matrix."""
    return [[eigenfunction_overlap(i, k, ctx) for k in range(1, d + 1)] for i in range(1, n + 1)]


def projected_matrix(n: int, spec: ModelSpec, ctx: PrecisionContext) -> RealMatrix:
    """``(H_D)_ij = sum_k w_k <u_i|psi_k><psi_k|u_j>``."""
    if not spec.is_projector:
        raise ValueError("projected_matrix needs a projected or weighted model")
    if n < 1:
        raise ValueError(f"basis size must be >= 1, got {n}")
    v = overlap_with_eigenfunctions(n, spec.d, ctx)
    w = spec.level_weights(ctx)
    mp = ctx.mp

    def entry(i: int, j: int) -> BigReal:
        return mp.fsum(w[k] * v[i - 1][k] * v[j - 1][k] for k in range(spec.d))

    return _symmetric(n, entry)


def to_real(m: RationalMatrix, ctx: PrecisionContext) -> RealMatrix:
    return [[ctx.real(x) for x in row] for row in m]


def assemble(n: int, spec: ModelSpec, ctx: PrecisionContext) -> SecularPair:
    if n < 1:
        raise ValueError(f"basis size must be >= 1, got {n}")
    exact_s = overlap_matrix(n)
    s = to_real(exact_s, ctx)
    if spec.kind is ModelKind.STANDARD:
        exact_h = kinetic_matrix(n)
        return SecularPair(to_real(exact_h, ctx), s, n, spec, exact_s, exact_h, ctx.decimal_digits)
    return SecularPair(projected_matrix(n, spec, ctx), s, n, spec, exact_s, None, ctx.decimal_digits)
