"""Exact scalar rings: rationals (``Fraction``) and Gaussian rationals.

Two ring tags are used throughout the package:

``"Q"``
    real rationals, stored as :class:`fractions.Fraction`.
``"Q(i)"``
    complex rationals, stored as :class:`ComplexQ`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

REAL = "Q"
COMPLEX = "Q(i)"
RINGS = (REAL, COMPLEX)


class RingMismatchError(TypeError):
    """Raised when values over different scalar rings are combined."""


class ComplexQ:
    """A complex number ``re + i*im`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def coerce(x) -> "ComplexQ":
        if isinstance(x, ComplexQ):
            return x
        if isinstance(x, (int, Rational)):
            return ComplexQ(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to ComplexQ")

    def __add__(self, other):
        if isinstance(other, ComplexQ):
            return ComplexQ(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Rational)):
            return ComplexQ(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return ComplexQ(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, ComplexQ):
            return ComplexQ(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Rational)):
            return ComplexQ(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Rational)):
            return ComplexQ(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, ComplexQ):
            a, b, c, d = self.re, self.im, other.re, other.im
            return ComplexQ(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Rational)):
            return ComplexQ(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> "ComplexQ":
        return ComplexQ(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "ComplexQ":
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("ComplexQ division by zero")
        return ComplexQ(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, ComplexQ):
            return self * other.inverse()
        if isinstance(other, (int, Rational)):
            return ComplexQ(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Rational)):
            return ComplexQ(other) * self.inverse()
        return NotImplemented

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, ComplexQ):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"ComplexQ({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


I = ComplexQ(0, 1)


def ring_of(x) -> str:
    """Ring tag of a single scalar value."""
    if isinstance(x, ComplexQ):
        return COMPLEX
    if isinstance(x, (int, Rational)):
        return REAL
    raise TypeError(f"not an exact scalar: {x!r}")


def to_ring(x, ring: str):
    """Convert an exact scalar into ``ring``; complex values cannot go down to ``"Q"``."""
    if ring == REAL:
        if isinstance(x, ComplexQ):
            if x.im != 0:
                raise RingMismatchError("complex value in a real ring")
            return x.re
        if isinstance(x, (int, Rational)):
            return Fraction(x)
        raise TypeError(f"not an exact scalar: {x!r}")
    if ring == COMPLEX:
        return ComplexQ.coerce(x)
    raise ValueError(f"unknown ring {ring!r}")


def zero(ring: str):
    return Fraction(0) if ring == REAL else ComplexQ(0, 0)


def one(ring: str):
    return Fraction(1) if ring == REAL else ComplexQ(1, 0)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Decimal notation is rejected."""
    s = str(text).strip()
    if not s or any(c in s for c in ".eE"):
        raise ValueError(f"not an exact rational literal: {text!r}")
    num, _, den = s.partition("/")
    try:
        value = Fraction(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational literal: {text!r}") from exc
    return value


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
