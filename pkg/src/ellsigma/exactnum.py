"""Exact scalars: rationals (gmpy2.mpq) and the cyclotomic field Q(zeta), zeta^3 = 1."""

import re

from gmpy2 import mpq

Rational = mpq

ZERO = mpq(0)
ONE = mpq(1)

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def rational(value, den=None):
    """Coerce ints, strings like "-3/4" and mpq values to a reduced mpq."""
    if den is not None:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return mpq(value, den)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a string or a ratio")
    return mpq(value)


def parse_rational(text):
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return mpq(int(num), int(den) if den else 1)


def format_rational(q):
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class CycNum:
    """a + b*zeta with zeta^2 = -1 - zeta."""

    __slots__ = ("re", "ze")

    def __init__(self, re=0, ze=0):
        self.re = mpq(re)
        self.ze = mpq(ze)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, CycNum):
            return value
        return cls(value, 0)

    def __add__(self, other):
        if isinstance(other, CycNum):
            return CycNum(self.re + other.re, self.ze + other.ze)
        return CycNum(self.re + other, self.ze)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(-self.re, -self.ze)

    def __sub__(self, other):
        if isinstance(other, CycNum):
            return CycNum(self.re - other.re, self.ze - other.ze)
        return CycNum(self.re - other, self.ze)

    def __rsub__(self, other):
        return CycNum(other - self.re, -self.ze)

    def __mul__(self, other):
        if isinstance(other, CycNum):
            a, b, c, d = self.re, self.ze, other.re, other.ze
            bd = b * d
            # (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2, z^2 = -1 - z
            return CycNum(a * c - bd, a * d + b * c - bd)
        return CycNum(self.re * other, self.ze * other)

    __rmul__ = __mul__

    def conjugate(self):
        # zeta -> zeta^2 = -1 - zeta
        return CycNum(self.re - self.ze, -self.ze)

    def norm(self):
        a, b = self.re, self.ze
        return a * a - a * b + b * b

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        c = self.conjugate()
        return CycNum(c.re / n, c.ze / n)

    def __truediv__(self, other):
        if isinstance(other, CycNum):
            return self * other.inverse()
        return CycNum(self.re / other, self.ze / other)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = CycNum(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.re == other.re and self.ze == other.ze
        try:
            return self.ze == 0 and self.re == other
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self.ze == 0:
            return hash(self.re)
        return hash((self.re, self.ze))

    def __bool__(self):
        return bool(self.re) or bool(self.ze)

    def is_rational(self):
        return self.ze == 0

    def __repr__(self):
        return f"CycNum({format_cyc(self)!r})"

    def __str__(self):
        return format_cyc(self)


ZETA = CycNum(0, 1)
ZETA2 = CycNum(-1, -1)


def cyc_mul(a, b):
    return CycNum.coerce(a) * CycNum.coerce(b)


def cyc_is_rational(a):
    return CycNum.coerce(a).ze == 0


def format_cyc(a):
    a = CycNum.coerce(a)
    if a.ze == 0:
        return format_rational(a.re)
    return f"{format_rational(a.re)} + {format_rational(a.ze)}*z"


_CYC_RE = re.compile(r"^\s*([+-]?\d+(?:/\d+)?)\s*\+\s*([+-]?\d+(?:/\d+)?)\s*\*\s*z\s*$")


def parse_cyc(text):
    m = _CYC_RE.match(text)
    if m:
        return CycNum(parse_rational(m.group(1)), parse_rational(m.group(2)))
    return CycNum(parse_rational(text))


def format_scalar(c):
    return format_cyc(c) if isinstance(c, CycNum) else format_rational(c)


def parse_scalar(text):
    """Inverse of format_scalar; returns mpq unless a zeta part is present."""
    c = parse_cyc(text)
    return c if c.ze else c.re


def is_rational_scalar(c):
    return not isinstance(c, CycNum) or c.ze == 0


def real_part(c):
    """Project a zeta-free scalar to mpq; raises if a zeta component survives."""
    if isinstance(c, CycNum):
        if c.ze:
            raise ValueError(f"zeta component survives: {format_cyc(c)}")
        return c.re
    return c
