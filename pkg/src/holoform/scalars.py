"""Exact Gaussian rationals, the numbers a + b*i with a, b in Q.

Real and imaginary parts are ``gmpy2.mpq`` values, which are kept in lowest
terms with a positive denominator.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

_MPQ = type(mpq(0))

__all__ = ["Scalar", "ZERO", "ONE", "I", "as_scalar"]


class Scalar:
    """An immutable element of Q(i)."""

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re: Rational | int | str = 0, im: Rational | int | str = 0):
        self.re = re if type(re) is _MPQ else mpq(re)
        self.im = im if type(im) is _MPQ else mpq(im)
        self._hash = None

    @classmethod
    def _raw(cls, re, im) -> Scalar:
        s = object.__new__(cls)
        s.re = re
        s.im = im
        s._hash = None
        return s

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Scalar._raw(a * c, b)
        return Scalar._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if not self:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        if not self.im:
            return Scalar._raw(mpq(1) / self.re, self.im)
        norm = self.re * self.re + self.im * self.im
        return Scalar._raw(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> Scalar:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> Scalar:
        return Scalar._raw(self.re, -self.im)

    def norm(self):
        """Squared modulus ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    # comparisons ----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.re, self.im)) if self.im else hash(self.re)
        return self._hash

    def is_real(self) -> bool:
        return not self.im

    def is_integral(self) -> bool:
        """True for Gaussian integers."""
        return self.re.denominator == 1 and self.im.denominator == 1

    # text -----------------------------------------------------------------

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        """Exact rendering ``a/b+c/d*i``; parts that vanish are dropped."""
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        im = _imag_str(self.im)
        return f"{self.re}{im}" if im.startswith("-") else f"{self.re}+{im}"

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """Inverse of :meth:`__str__`."""
        m = _SCALAR_RE.fullmatch(text.replace(" ", ""))
        if m is None or not m.group(0):
            raise ValueError(f"not a Gaussian rational: {text!r}")
        re_part, im_part = m.group("re"), m.group("im")
        re_val = mpq(re_part.lstrip("+")) if re_part else mpq(0)
        im_val = mpq(0)
        if im_part is not None:
            body = im_part[:-2] if im_part.endswith("*i") else im_part[:-1]
            if body in ("", "+"):
                im_val = mpq(1)
            elif body == "-":
                im_val = mpq(-1)
            else:
                im_val = mpq(body.lstrip("+"))
        return cls._raw(re_val, im_val)


_NUM = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"(?P<re>[+-]?{_NUM})?(?P<im>(?(re)[+-]|[+-]?)(?:{_NUM}\*)?i)?"
)


def _imag_str(v) -> str:
    if v == 1:
        return "i"
    if v == -1:
        return "-i"
    return f"{v}*i"


def as_scalar(value) -> Scalar:
    """Coerce ints, Fractions and Scalars; anything else gives NotImplemented."""
    if type(value) is Scalar:
        return value
    if isinstance(value, (int, Fraction, _MPQ)):
        return Scalar._raw(mpq(value), _ZERO_Q)
    if isinstance(value, Scalar):
        return value
    if isinstance(value, complex):
        if value.real.is_integer() and value.imag.is_integer():
            return Scalar(int(value.real), int(value.imag))
        raise TypeError("only integral complex literals coerce exactly")
    return NotImplemented


_ZERO_Q = mpq(0)
ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
