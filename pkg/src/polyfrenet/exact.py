"""Exact scalars: rational parsing, perfect-square roots and quadratic surds."""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational


def as_exact(x):
    """Coerce ``x`` to an exact rational when that is lossless.

    Strings such as ``"1/4"`` or ``"2.5"`` parse exactly.  Floats are left as
    floats, since their binary expansion is rarely what the caller meant.
    """
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, (int, Fraction)):
        return x
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return Fraction(x.strip())
    if hasattr(x, "is_Rational") and x.is_Rational:  # sympy numbers
        return Fraction(int(x.p), int(x.q))
    return x


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, Surd))


def rational_sqrt(q):
    """Exact square root of a non-negative rational, or ``None`` if irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def exact_sqrt(q):
    """Square root that stays exact for perfect squares and falls back to float."""
    if isinstance(q, (int, Fraction)):
        r = rational_sqrt(q)
        if r is not None:
            return r.numerator if r.denominator == 1 else r
    return math.sqrt(q)


def fmt(x, digits: int = 15) -> str:
    """Decimal string with ``digits`` significant digits."""
    return f"{float(x):.{digits}g}"


class Surd:
    """Number ``a + b*sqrt(d)`` with rational ``a, b`` and square-free-ish ``d >= 0``.

    Arithmetic is exact inside one quadratic field; mixing two different
    radicands raises ``ValueError``.  Perfect-square radicands collapse to a
    plain rational on construction.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=0):
        a, b, d = Fraction(a), Fraction(b), Fraction(d)
        if d < 0:
            raise ValueError("negative radicand")
        r = rational_sqrt(d)
        if r is not None:
            a, b, d = a + b * r, Fraction(0), Fraction(0)
        if b == 0:
            d = Fraction(0)
        self.a, self.b, self.d = a, b, d

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.a

    def _coerce(self, other):
        if isinstance(other, Surd):
            if other.d and self.d and other.d != self.d:
                raise ValueError("surds from different quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return Surd(other)
        return NotImplemented

    def _field(self, other):
        return self.d or other.d

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return float(self) + other
        return Surd(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return float(self) - other
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return float(self) * other
        d = self._field(o)
        return Surd(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        out = Surd(1)
        for _ in range(k):
            out = out * self
        return out

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare squares
        lhs, rhs = self.a * self.a, self.b * self.b * self.d
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        if o is NotImplemented:
            return float(self) == other
        if self.d and o.d and self.d != o.d:
            return False
        return self.a == o.a and self.b == o.b and (self.b == 0 or self.d == o.d)

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

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self):
        return f"Surd({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if self.is_rational:
            return str(self.a)
        root = f"{self.b}*sqrt({self.d})"
        return root if self.a == 0 else f"{self.a} + {root}"


def parse_exact(text: str):
    """Inverse of ``str`` for Fractions and :class:`Surd` values."""
    text = text.strip()
    if "sqrt" in text:
        head, _, tail = text.rpartition(" + ")
        coef, _, rad = tail.partition("*sqrt(")
        return Surd(Fraction(head or 0), Fraction(coef), Fraction(rad.rstrip(")")))
    q = Fraction(text)
    return q.numerator if q.denominator == 1 else q


def exact_record(x) -> dict:
    """JSON-friendly form: exact string when available plus a 15-digit decimal."""
    rec = {"decimal": fmt(x)}
    if is_exact(x):
        rec["exact"] = str(x)
    return rec


def surd_sqrt(q) -> Surd:
    """``sqrt(q)`` of a non-negative rational as a surd."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("negative radicand")
    return Surd(0, 1, q)
