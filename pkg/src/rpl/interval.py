"""Outward-rounded real intervals.

Arithmetic runs in mpmath's interval context, which rounds lower endpoints
down and upper endpoints up. Each call builds its own context object, so
concurrent derivations at different precisions never share state.
``RInterval`` is the exported, immutable form with exact rational endpoints.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, Context, Decimal
from fractions import Fraction

from mpmath.ctx_iv import MPIntervalContext
from mpmath.libmp import to_rational

from .quadratic import QuadElem

DEFAULT_PRECISION = 128


def make_context(bits: int = DEFAULT_PRECISION) -> MPIntervalContext:
    ctx = MPIntervalContext()
    ctx.prec = bits
    return ctx


def _endpoint(raw) -> Fraction:
    p, q = to_rational(raw)
    return Fraction(int(p), int(q))


@dataclass(frozen=True)
class RInterval:
    lo: Fraction
    hi: Fraction
    precision_bits: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def from_iv(cls, x, bits: int) -> RInterval:
        lo, hi = x._mpi_
        return cls(_endpoint(lo), _endpoint(hi), bits)

    def to_iv(self, ctx):
        return ctx.mpf([ctx.mpf(self.lo.numerator) / self.lo.denominator,
                        ctx.mpf(self.hi.numerator) / self.hi.denominator])

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return float((self.lo + self.hi) / 2)

    def relative_width(self) -> float:
        scale = max(abs(self.lo), abs(self.hi))
        return 0.0 if scale == 0 else float(self.width / scale)

    def contains(self, value) -> bool:
        if isinstance(value, QuadElem):
            return (value - self.lo).sign() >= 0 and (value - self.hi).sign() <= 0
        value = Fraction(value)
        return self.lo <= value <= self.hi

    def ceil_hi(self) -> int:
        return math.ceil(self.hi)

    def lo_str(self, digits: int = 40) -> str:
        return _directed_str(self.lo, digits, ROUND_FLOOR)

    def hi_str(self, digits: int = 40) -> str:
        return _directed_str(self.hi, digits, ROUND_CEILING)

    def __str__(self):
        return f"[{self.lo_str(17)}, {self.hi_str(17)}]"


def _directed_str(x: Fraction, digits: int, rounding) -> str:
    """``x`` rounded in the given direction, in fixed-width scientific notation.

    The fixed form makes parse-and-reprint stable.
    """
    ctx = Context(prec=digits, rounding=rounding)
    if not x:
        return f"{Decimal(0).scaleb(1 - digits):.{digits - 1}E}"
    q = ctx.divide(Decimal(x.numerator), Decimal(x.denominator))
    return f"{q:.{digits - 1}E}"


def iv(ctx, value):
    """Enclose an exact or decimal value in an interval of ``ctx``."""
    if isinstance(value, RInterval):
        return value.to_iv(ctx)
    if isinstance(value, QuadElem):
        return quad_iv(ctx, value)
    if isinstance(value, Fraction):
        return ctx.mpf(value.numerator) / value.denominator
    if isinstance(value, (int, float, str)):
        return ctx.mpf(value)
    return value


def quad_iv(ctx, x: QuadElem):
    r = ctx.mpf(x.a.numerator) / x.a.denominator
    if x.b == 0:
        return r
    s = ctx.mpf(x.b.numerator) / x.b.denominator
    return r + s * ctx.sqrt(x.d)


def endpoints(x):
    lo, hi = x._mpi_
    return lo, hi


def iv_max(ctx, *xs):
    """Endpoint-wise maximum, which encloses max over the enclosed reals."""
    los = [x.a for x in xs]
    his = [x.b for x in xs]
    lo = los[0]
    for v in los[1:]:
        if v > lo:
            lo = v
    hi = his[0]
    for v in his[1:]:
        if v > hi:
            hi = v
    return ctx.mpf([lo, hi])


def iv_abs(ctx, x):
    return abs(x)


def lower(x) -> Fraction:
    return _endpoint(x._mpi_[0])


def upper(x) -> Fraction:
    return _endpoint(x._mpi_[1])


def certainly_positive(x) -> bool:
    return lower(x) > 0
