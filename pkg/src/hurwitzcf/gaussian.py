"""Exact arithmetic in the Gaussian rationals Q(i)."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

__all__ = ["GaussianRational", "GaussianInt", "gaussian_int", "as_gaussian"]


class GaussianRational:
    """The number ``(re_num + im_num*i) / den`` in lowest terms.

    ``den`` is a positive integer and ``gcd(re_num, im_num, den) == 1``, so
    two instances are equal exactly when they denote the same complex number.
    Instances are immutable and hashable.

    >>> GaussianRational(2, 1) / GaussianRational(9, 8)
    GaussianRational(26, -7, 145)
    """

    __slots__ = ("re_num", "im_num", "den")

    def __init__(self, re_num: int = 0, im_num: int = 0, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("GaussianRational with zero denominator")
        if den < 0:
            re_num, im_num, den = -re_num, -im_num, -den
        g = math.gcd(re_num, im_num, den)
        if g != 1:
            re_num //= g
            im_num //= g
            den //= g
        object.__setattr__(self, "re_num", re_num)
        object.__setattr__(self, "im_num", im_num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def from_parts(cls, re: Rational | int, im: Rational | int = 0) -> GaussianRational:
        re = Fraction(re)
        im = Fraction(im)
        den = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        return cls(re.numerator * (den // re.denominator), im.numerator * (den // im.denominator), den)

    # -- accessors -------------------------------------------------------

    @property
    def real(self) -> Fraction:
        return Fraction(self.re_num, self.den)

    @property
    def imag(self) -> Fraction:
        return Fraction(self.im_num, self.den)

    def is_integer(self) -> bool:
        return self.den == 1

    def is_zero(self) -> bool:
        return self.re_num == 0 and self.im_num == 0

    def is_even(self) -> bool:
        """True for members of (1+i)Z[i], i.e. Gaussian integers with even a+b."""
        return self.den == 1 and (self.re_num + self.im_num) % 2 == 0

    def norm(self) -> Fraction:
        """Squared modulus |z|^2."""
        return Fraction(self.re_num * self.re_num + self.im_num * self.im_num, self.den * self.den)

    def conjugate(self) -> GaussianRational:
        return _raw(self.re_num, -self.im_num, self.den)

    # -- arithmetic ------------------------------------------------------

    def __neg__(self):
        return _raw(-self.re_num, -self.im_num, self.den)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return GaussianRational(self.re_num + other.re_num, self.im_num + other.im_num, self.den)
        return GaussianRational(
            self.re_num * other.den + other.re_num * self.den,
            self.im_num * other.den + other.im_num * self.den,
            self.den * other.den,
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, d = self.re_num, self.im_num, self.den
        c, e, f = other.re_num, other.im_num, other.den
        return GaussianRational(a * c - b * e, a * e + b * c, d * f)

    __rmul__ = __mul__

    def reciprocal(self) -> GaussianRational:
        a, b, d = self.re_num, self.im_num, self.den
        n = a * a + b * b
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(a * d, -b * d, n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.reciprocal()
        result = ONE
        for _ in range(abs(k)):
            result = result * base
        return result

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re_num == other.re_num and self.im_num == other.im_num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return self.im_num == 0 and self.re_num == other.numerator and self.den == other.denominator
        return NotImplemented

    def __hash__(self):
        return hash((self.re_num, self.im_num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        return complex(self.re_num / self.den, self.im_num / self.den)

    def __repr__(self):
        if self.den == 1:
            return f"GaussianRational({self.re_num}, {self.im_num})"
        return f"GaussianRational({self.re_num}, {self.im_num}, {self.den})"

    def __str__(self):
        body = _format_numerator(self.re_num, self.im_num)
        if self.den == 1:
            return body
        if self.re_num != 0 and self.im_num != 0:
            body = f"({body})"
        return f"{body}/{self.den}"


# Gaussian integers are Gaussian rationals with den == 1; there is no separate class.
GaussianInt = GaussianRational


def _raw(a: int, b: int, d: int) -> GaussianRational:
    # caller guarantees canonical form
    obj = object.__new__(GaussianRational)
    object.__setattr__(obj, "re_num", a)
    object.__setattr__(obj, "im_num", b)
    object.__setattr__(obj, "den", d)
    return obj


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, int):
        return _raw(x, 0, 1)
    if isinstance(x, Fraction):
        return _raw(x.numerator, 0, x.denominator)
    return NotImplemented


def _format_numerator(a: int, b: int) -> str:
    if b == 0:
        return str(a)
    if b == 1:
        imag = "i"
    elif b == -1:
        imag = "-i"
    else:
        imag = f"{b}i"
    if a == 0:
        return imag
    if b > 0:
        return f"{a}+{imag}"
    return f"{a}{imag}"


def gaussian_int(re: int, im: int = 0) -> GaussianRational:
    return _raw(re, im, 1)


def as_gaussian(x) -> GaussianRational:
    """Coerce an int, Fraction or GaussianRational to GaussianRational."""
    g = _coerce(x)
    if g is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(i)")
    return g


ZERO = _raw(0, 0, 1)
ONE = _raw(1, 0, 1)
I = _raw(0, 1, 1)
