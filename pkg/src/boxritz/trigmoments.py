"""Extended-precision context and the sine moments of the box eigenfunctions.

The overlaps between the polynomial trial functions and the exact box
eigenfunctions ``sqrt(2) sin(k pi x)`` reduce to the moments

    I_n(k) = int_0^1 x**n sin(k pi x) dx,

which are generated exactly by integration by parts.  A Gauss-Legendre rule
evaluated at working precision provides an independent check.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

import mpmath
from mpmath import libmp

from .exactpoly import Polynomial, basis_function

BigReal = Any  # an mpf bound to a PrecisionContext's mpmath context

MIN_DIGITS = 30
DEFAULT_DIGITS = 64
QUADRATURE_NODES = 64


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision for every non-rational quantity.

    Each context owns a private :class:`mpmath.MPContext`, so contexts at
    different precisions never interfere and a context can be shared freely
    between threads.  ``allow_low_precision`` lifts the 30-digit floor; it
    exists only so precision-loss diagnostics can be exercised.
    """

    decimal_digits: int = DEFAULT_DIGITS
    allow_low_precision: bool = False
    mp: Any = field(init=False, repr=False, compare=False)
    pi: BigReal = field(init=False, repr=False, compare=False)
    _moments: dict = field(init=False, repr=False, compare=False)
    _nodes: list = field(init=False, repr=False, compare=False)
    _lock: Any = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.decimal_digits < 1:
            raise ValueError("decimal_digits must be positive")
        if self.decimal_digits < MIN_DIGITS and not self.allow_low_precision:
            raise ValueError(
                f"decimal_digits={self.decimal_digits} is below {MIN_DIGITS}; "
                "pass allow_low_precision=True to force it"
            )
        mp = mpmath.MPContext()
        mp.dps = self.decimal_digits
        object.__setattr__(self, "mp", mp)
        object.__setattr__(self, "pi", +mp.pi)
        object.__setattr__(self, "_moments", {})
        object.__setattr__(self, "_nodes", [])
        object.__setattr__(self, "_lock", threading.Lock())

    @property
    def prec(self) -> int:
        """Working precision in bits."""
        return self.mp.prec

    def tolerance(self, offset: int) -> BigReal:
        """``10**-(decimal_digits - offset)``."""
        return self.mp.mpf(10) ** (offset - self.decimal_digits)

    def real(self, x: Union[int, str, Fraction, BigReal]) -> BigReal:
        """Convert ``x`` to a BigReal, correctly rounded at working precision."""
        if isinstance(x, Fraction):
            return self.mp.make_mpf(
                libmp.from_rational(x.numerator, x.denominator, self.prec, libmp.round_nearest)
            )
        if hasattr(x, "_mpf_"):
            return self.mp.make_mpf(libmp.mpf_pos(x._mpf_, self.prec, libmp.round_nearest))
        if isinstance(x, str):
            return self.real(Fraction(x))
        return self.mp.mpf(x)

    def higher(self, extra_digits: int) -> "PrecisionContext":
        return PrecisionContext(self.decimal_digits + extra_digits, allow_low_precision=True)

    def level(self, k: int) -> BigReal:
        """Exact box eigenvalue ``k**2 pi**2 / 2``."""
        if k < 1:
            raise ValueError(f"level index must be >= 1, got {k}")
        return k * k * self.pi**2 / 2


def to_fraction(x: BigReal) -> Fraction:
    """Exact rational value of a binary BigReal."""
    sign, man, exp, _ = x._mpf_
    if not man:
        if exp:
            raise ValueError(f"{x} has no rational value")
        return Fraction(0)
    man = -int(man) if sign else int(man)
    if exp >= 0:
        return Fraction(man << int(exp))
    return Fraction(man, 1 << int(-exp))


def sine_moment(n: int, k: int, ctx: PrecisionContext) -> BigReal:
    """``int_0^1 x**n sin(k pi x) dx`` by integration by parts.

    With ``s = -(-1)**k``:

        I_0 = (1 - (-1)**k) / (k pi)
        I_n = s / (k pi) + n / (k pi) * C_{n-1}
        C_m = -m / (k pi) * I_{m-1},   C_0 = 0

    where ``C_m`` is the companion cosine moment.  Values are memoized on
    the context.
    """
    if k < 1:
        raise ValueError(f"sine_moment needs k >= 1, got {k}")
    if n < 0:
        raise ValueError(f"sine_moment needs n >= 0, got {n}")
    with ctx._lock:
        key = (n, k)
        if key in ctx._moments:
            return ctx._moments[key]
        mp = ctx.mp
        kpi = k * ctx.pi
        sign = -1 if k % 2 == 0 else 1  # -(-1)**k
        table = ctx._moments
        if (0, k) not in table:
            table[(0, k)] = mp.mpf(1 + sign) / kpi
        for m in range(1, n + 1):
            if (m, k) in table:
                continue
            cos_prev = -(m - 1) * table[(m - 2, k)] / kpi if m >= 2 else mp.zero
            table[(m, k)] = (sign + m * cos_prev) / kpi
        return table[key]


def eigenfunction_overlap(i: int, k: int, ctx: PrecisionContext) -> BigReal:
    """Overlap of trial function ``x**i (1 - x)`` with ``sqrt(2) sin(k pi x)``."""
    if i < 1:
        raise ValueError(f"basis index must be >= 1, got {i}")
    return ctx.mp.sqrt(2) * (sine_moment(i, k, ctx) - sine_moment(i + 1, k, ctx))


def _legendre_nodes(n: int, ctx: PrecisionContext) -> list[tuple[BigReal, BigReal]]:
    # Newton on P_n with guard digits; nodes/weights mapped to [0, 1].
    hi = mpmath.MPContext()
    hi.dps = ctx.decimal_digits + 20
    eps = hi.mpf(10) ** (-(ctx.decimal_digits + 15))
    out = []
    for j in range(1, n // 2 + 1):
        x = hi.cos(hi.pi * (j - hi.mpf(1) / 4) / (n + hi.mpf(1) / 2))
        for _ in range(100):
            p0, p1 = hi.one, x
            for m in range(2, n + 1):
                p0, p1 = p1, ((2 * m - 1) * x * p1 - (m - 1) * p0) / m
            dp = n * (x * p1 - p0) / (x * x - 1)
            dx = p1 / dp
            x -= dx
            if abs(dx) < eps:
                break
        else:
            raise ArithmeticError("Legendre node iteration did not converge")
        p0, p1 = hi.one, x
        for m in range(2, n + 1):
            p0, p1 = p1, ((2 * m - 1) * x * p1 - (m - 1) * p0) / m
        dp = n * (x * p1 - p0) / (x * x - 1)
        w = 2 / ((1 - x * x) * dp * dp)
        out.append(((1 + x) / 2, w / 2))
        out.append(((1 - x) / 2, w / 2))
    if n % 2:
        # middle node x = 0
        p0, p1 = hi.one, hi.zero
        for m in range(2, n):
            p0, p1 = p1, ((2 * m - 1) * 0 * p1 - (m - 1) * p0) / m
        dp = n * p1  # P_n'(0) = n P_{n-1}(0)
        out.append((hi.mpf(1) / 2, 1 / (dp * dp)))
    out.sort(key=lambda t: t[0])
    return [(ctx.real(x), ctx.real(w)) for x, w in out]


def gauss_legendre(ctx: PrecisionContext) -> list[tuple[BigReal, BigReal]]:
    """64-point Gauss-Legendre nodes and weights on [0, 1], cached per context."""
    with ctx._lock:
        if not ctx._nodes:
            ctx._nodes.extend(_legendre_nodes(QUADRATURE_NODES, ctx))
        return list(ctx._nodes)


def quadrature_oracle(p: Polynomial, k: int, ctx: PrecisionContext) -> BigReal:
    """``int_0^1 p(x) sin(k pi x) dx`` by Gauss-Legendre quadrature."""
    if k < 1:
        raise ValueError(f"quadrature_oracle needs k >= 1, got {k}")
    mp = ctx.mp
    coeffs = [ctx.real(c) for c in p.coefficients]
    total = mp.zero
    for x, w in gauss_legendre(ctx):
        px = mp.zero
        for c in reversed(coeffs):
            px = px * x + c
        total += w * px * mp.sin(k * ctx.pi * x)
    return total


def basis_overlap_oracle(i: int, k: int, ctx: PrecisionContext) -> BigReal:
    """Quadrature route to :func:`eigenfunction_overlap`."""
    return ctx.mp.sqrt(2) * quadrature_oracle(basis_function(i), k, ctx)
