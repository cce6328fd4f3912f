"""Exact Gaussian-rational arithmetic.

Coefficients are ``gmpy2.mpq`` rationals: always canonical (positive
denominator, lowest terms, zero as ``0/1``) and unbounded. They compare and
hash equal to :class:`fractions.Fraction`, which is accepted on input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from gmpy2 import mpq

from .errors import ZeroComplexDivisor

Rational = mpq


def as_rational(x) -> mpq:
    return x if type(x) is mpq else mpq(x)


def rational_str(q: mpq) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _imag_str(q: mpq) -> str:
    # "3i/4" rather than "3/4i": the parser reads "3/4i" as 3/(4i).
    if q.denominator == 1:
        return f"{q.numerator}i"
    return f"{q.numerator}i/{q.denominator}"


def rational_sqrt(q: mpq) -> Optional[mpq]:
    """Exact square root of a non-negative rational, or None if irrational."""
    if q < 0:
        return None
    p, d = q.numerator, q.denominator
    rp, rd = math.isqrt(p), math.isqrt(d)
    if rp * rp == p and rd * rd == d:
        return mpq(rp, rd)
    return None


@dataclass(frozen=True)
class Complex:
    re: mpq = mpq(0)
    im: mpq = mpq(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_rational(self.re))
        object.__setattr__(self, "im", as_rational(self.im))

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def conjugate(self) -> Complex:
        return Complex(self.re, -self.im)

    def __add__(self, other):
        return c_add(self, other)

    def __sub__(self, other):
        return c_sub(self, other)

    def __mul__(self, other):
        return c_mul(self, other)

    def __truediv__(self, other):
        return c_div(self, other)

    def __neg__(self):
        return Complex(-self.re, -self.im)

    def __str__(self):
        if self.im == 0:
            return rational_str(self.re)
        if self.re == 0:
            return _imag_str(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"{rational_str(self.re)}{sign}{_imag_str(abs(self.im))}"

    def __repr__(self):
        return f"C({rational_str(self.re)}, {rational_str(self.im)})"


ZERO = Complex(0, 0)
ONE = Complex(1, 0)


@dataclass(frozen=True)
class Radical:
    """sqrt(radicand); ``exact_root`` is set only when the root is rational."""

    radicand: mpq
    exact_root: Optional[mpq] = None

    def __post_init__(self):
        if self.radicand < 0:
            raise ValueError("radicand must be non-negative")
        if self.exact_root is not None and (
            self.exact_root < 0 or self.exact_root * self.exact_root != self.radicand
        ):
            raise ValueError("exact_root is not the square root of radicand")

    @classmethod
    def of(cls, radicand: mpq) -> Radical:
        radicand = as_rational(radicand)
        return cls(radicand, rational_sqrt(radicand))

    def __str__(self):
        if self.exact_root is not None:
            return rational_str(self.exact_root)
        return f"sqrt({rational_str(self.radicand)})"


def c_add(a: Complex, b: Complex) -> Complex:
    return Complex(a.re + b.re, a.im + b.im)


def c_sub(a: Complex, b: Complex) -> Complex:
    return Complex(a.re - b.re, a.im - b.im)


def c_mul(a: Complex, b: Complex) -> Complex:
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re)


def c_div(a: Complex, b: Complex) -> Complex:
    if b.is_zero():
        raise ZeroComplexDivisor(f"division of {a} by complex zero")
    norm = b.re * b.re + b.im * b.im
    return Complex((a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm)


def c_modulus(a: Complex) -> Radical:
    return Radical.of(a.re * a.re + a.im * a.im)
