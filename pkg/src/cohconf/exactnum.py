"""Exact arithmetic over the rationals and real quadratic extensions.

Eigenvalue identities in this package are verified with no floating-point
ambiguity.  Rational values are plain :class:`fractions.Fraction`; values of
the form ``a + b*sqrt(d)`` with ``d`` square-free are :class:`QuadraticNumber`.
Sums mixing two different nonzero radicands are rejected rather than promoted
to a larger field: no computation here ever needs more than one surd at a time.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import MixedRadicand

#: Exact rational scalar. ``Fraction`` already maintains the reduced-form
#: invariants (gcd(num, den) = 1, den >= 1).
Rational = Fraction

Scalar = Union[int, Fraction, "QuadraticNumber"]


def normalize_sqrt(m: int) -> tuple[int, int]:
    """Split ``m >= 0`` as ``outside**2 * square_free``.

    Returns ``(square_free, outside)``; ``normalize_sqrt(0) == (0, 0)``.
    """
    if m < 0:
        raise ValueError("normalize_sqrt requires a non-negative integer")
    if m == 0:
        return (0, 0)
    r = math.isqrt(m)
    if r * r == m:
        return (1, r)
    square_free, outside, rest, f = 1, 1, m, 2
    while f * f <= rest:
        if rest % f == 0:
            e = 0
            while rest % f == 0:
                rest //= f
                e += 1
            outside *= f ** (e // 2)
            if e % 2:
                square_free *= f
        f += 1 if f == 2 else 2
    return (square_free * rest, outside)


class QuadraticNumber:
    """Exact value ``a + b*sqrt(d)`` with rational a, b and square-free d >= 0.

    Normalization: ``b == 0`` forces ``d == 0``; a non-square-free input
    radicand is reduced (``sqrt(12) -> 2*sqrt(3)``); ``d == 1`` folds into the
    rational part.  Equality and hashing are componentwise on the normal form.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0, d: int = 0):
        a, b = Fraction(a), Fraction(b)
        d = int(d)
        if d < 0:
            raise ValueError("radicand must be non-negative")
        if b == 0 or d == 0:
            b, d = Fraction(0), 0
        else:
            sf, out = normalize_sqrt(d)
            b, d = b * out, sf
            if d == 1:
                a, b, d = a + b, Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticNumber is immutable")

    # -- predicates ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.a

    def is_integer(self) -> bool:
        return self.is_rational and self.a.denominator == 1

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "QuadraticNumber":
        if isinstance(x, QuadraticNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadraticNumber(x)
        return NotImplemented  # type: ignore[return-value]

    def _common_d(self, other: "QuadraticNumber") -> int:
        if self.d and other.d and self.d != other.d:
            raise MixedRadicand(f"cannot combine sqrt({self.d}) with sqrt({other.d})")
        return self.d or other.d

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._common_d(other)
        return QuadraticNumber(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._common_d(other)
        a = self.a * other.a + self.b * other.b * d
        b = self.a * other.b + self.b * other.a
        return QuadraticNumber(a, b, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.a == 0 and other.b == 0:
            raise ZeroDivisionError
        d = self._common_d(other)
        norm = other.a * other.a - other.b * other.b * d
        if norm == 0:
            raise ZeroDivisionError("division by zero norm")
        num = self * other.conjugate()
        return QuadraticNumber(num.a / norm, num.b / norm, num.d)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def conjugate(self) -> "QuadraticNumber":
        """Negate the surd part: conj(a + b*sqrt(d)) = a - b*sqrt(d)."""
        return QuadraticNumber(self.a, -self.b, self.d)

    # -- comparisons ---------------------------------------------------------

    def sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 d (equality impossible, d square-free > 1)
        return (1 if a > 0 else -1) if a * a > b * b * d else (1 if b > 0 else -1)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    # -- rendering -----------------------------------------------------------

    @staticmethod
    def _frac_str(f: Fraction) -> str:
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

    def __str__(self) -> str:
        if self.b == 0:
            return self._frac_str(self.a)
        surd = f"sqrt({self.d})"
        babs = abs(self.b)
        bpart = surd if babs == 1 else f"{self._frac_str(babs)}*{surd}"
        if self.a == 0:
            return bpart if self.b > 0 else f"-{bpart}"
        op = "+" if self.b > 0 else "-"
        return f"{self._frac_str(self.a)} {op} {bpart}"

    def __repr__(self) -> str:
        return f"QuadraticNumber({self.a!r}, {self.b!r}, {self.d!r})"


def sqrt_exact(m: int) -> QuadraticNumber:
    """Exact square root of a non-negative integer."""
    sf, out = normalize_sqrt(m)
    if sf <= 1:
        return QuadraticNumber(out)
    return QuadraticNumber(0, out, sf)


def quad_arith(x: QuadraticNumber, y: QuadraticNumber, op: str) -> QuadraticNumber:
    """Apply ``op`` in {'add', 'sub', 'mul'} exactly, re-normalizing the result."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown op {op!r}")
