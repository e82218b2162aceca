"""Exact arithmetic in Q(sqrt(D))."""
from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm, gcd
from numbers import Rational

from .errors import ZeroInput


def is_square(k: int) -> bool:
    return k >= 0 and isqrt(k) ** 2 == k


class QuadElem:
    """The number ``a + b*sqrt(D)`` with rational ``a``, ``b``.

    When ``D`` is a perfect square the element is folded into its rational
    value, so the representation is always canonical and division is defined
    for every nonzero element.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        if b and is_square(d):
            a += b * isqrt(d)
            b = Fraction(0)
        self.a = a
        self.b = b
        self.d = d

    # construction helpers

    @classmethod
    def sqrt(cls, d: int) -> QuadElem:
        return cls(0, 1, d)

    def _coerce(self, other) -> QuadElem:
        if isinstance(other, QuadElem):
            if other.d != self.d and other.b and self.b:
                raise ValueError(f"mixing Q(sqrt({self.d})) and Q(sqrt({other.d}))")
            return other
        if isinstance(other, (int, Rational)):
            return QuadElem(other, 0, self.d)
        return NotImplemented

    def _field(self, other: QuadElem) -> int:
        return self.d if self.b or not other.b else other.d

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self.a + other.a, self.b + other.b, self._field(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self.a - other.a, self.b - other.b, self._field(other))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self._field(other)
        return QuadElem(self.a * other.a + self.b * other.b * d,
                        self.a * other.b + self.b * other.a, d)

    __rmul__ = __mul__

    def conj(self) -> QuadElem:
        return QuadElem(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def trace(self) -> Fraction:
        return 2 * self.a

    def inverse(self) -> QuadElem:
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(D))")
        return QuadElem(self.a / nrm, -self.b / nrm, self.d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> QuadElem:
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadElem(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparisons (exact, valid for D >= 0)

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        if self.d < 0:
            raise ValueError("no ordering in an imaginary quadratic field")
        # opposite signs: the larger square wins; equality is impossible for non-square D
        return sa if self.a * self.a > self.b * self.b * self.d else sb

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b, self.d if self.b else 0))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    # queries

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def minimal_polynomial(self) -> tuple[int, ...]:
        """Primitive integer minimal polynomial, leading coefficient positive.

        Returns ``(c0, c1)`` for rationals (``c0*X + c1``) and
        ``(c0, c1, c2)`` otherwise.
        """
        if self.b == 0:
            p, q = self.a.numerator, self.a.denominator
            return (q, -p)
        coeffs = [Fraction(1), -2 * self.a, self.norm()]
        den = lcm(*(c.denominator for c in coeffs))
        ints = [int(c * den) for c in coeffs]
        g = gcd(*ints)
        return tuple(c // g for c in ints)

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        if self.b == 0:
            return f"QuadElem({self.a})"
        return f"QuadElem({self.a} + {self.b}*sqrt({self.d}))"
