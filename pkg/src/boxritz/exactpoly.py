"""Exact rational polynomials on the unit interval.

Coefficients are :class:`fractions.Fraction` values stored densely, index =
power of ``x``.  Everything here is exact; nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
Number = Union[int, Fraction]


def _trim(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with exact rational coefficients, lowest power first."""

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Number]) -> "Polynomial":
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def monomial(cls, power: int, coeff: Number = 1) -> "Polynomial":
        if power < 0:
            raise ValueError(f"negative power {power}")
        return cls((Fraction(0),) * power + (Fraction(coeff),))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x: Number) -> Fraction:
        # Horner
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return Polynomial(
            tuple(
                (a[m] if m < len(a) else 0) + (b[m] if m < len(b) else 0)
                for m in range(n)
            )
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Number]) -> "Polynomial":
        if isinstance(other, Polynomial):
            return multiply(self, other)
        return Polynomial(tuple(c * other for c in self.coefficients))

    __rmul__ = __mul__

    def derivative(self) -> "Polynomial":
        return derivative(self)

    def integrate_unit(self) -> Fraction:
        return integrate_unit(self)


def basis_function(i: int) -> Polynomial:
    """Return the trial function ``x**i * (1 - x)`` for ``i >= 1``.

    Every member vanishes at both ends of [0, 1], so the box boundary
    conditions hold exactly.
    """
    if i < 1:
        raise ValueError(f"basis index must be >= 1, got {i}")
    coeffs = [Fraction(0)] * (i + 2)
    coeffs[i] = Fraction(1)
    coeffs[i + 1] = Fraction(-1)
    return Polynomial(tuple(coeffs))


def derivative(p: Polynomial) -> Polynomial:
    return Polynomial(tuple(m * c for m, c in enumerate(p.coefficients) if m > 0))


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return Polynomial()
    a, b = p.coefficients, q.coefficients
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for m, x in enumerate(a):
        if x == 0:
            continue
        for n, y in enumerate(b):
            out[m + n] += x * y
    return Polynomial(tuple(out))


def integrate_unit(p: Polynomial) -> Fraction:
    """Exact value of the integral of ``p`` over [0, 1]."""
    return sum((c / (m + 1) for m, c in enumerate(p.coefficients)), Fraction(0))
