"""Certified constants for the fixed-base search bound.

Every real constant is an outward-rounded interval. ``derive_constants``
walks the inequality chain that turns Matveev's lower bound for linear forms
in logarithms into ``n < C1 * (log x)^4`` (valid for ``n > C2``) and records
each step, in order, in ``EffectiveBounds.trace``. Only upper endpoints feed
the final integer bound.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import HypothesisViolated, InvalidInput, UnsupportedSequence, ZeroInput
from .interval import DEFAULT_PRECISION, RInterval, iv, iv_max, lower, make_context, quad_iv, upper
from .quadratic import QuadElem, is_square
from .recurrence import RecurrenceSequence

#: Stop refining once every trace interval is this narrow (relative).
TARGET_RELATIVE_WIDTH = 1e-12
MAX_PRECISION = 1 << 14

MATVEEV_A_FLOOR = "0.16"


@dataclass(frozen=True)
class TraceStep:
    name: str
    formula: str
    interval: RInterval

    def to_json(self) -> dict:
        return {"name": self.name, "formula": self.formula,
                "lo": self.interval.lo_str(), "hi": self.interval.hi_str(),
                "precision_bits": self.interval.precision_bits}


@dataclass(frozen=True)
class MatveevInput:
    t: int
    dL: int
    B: object
    A: tuple

    def __post_init__(self):
        if self.t < 1 or self.dL < 1:
            raise InvalidInput("need t >= 1 and d_L >= 1")
        if len(self.A) != self.t:
            raise InvalidInput(f"expected {self.t} values A_j, got {len(self.A)}")
        if Fraction(str(self.B)) < 1:
            raise InvalidInput("B bounds nonzero integer exponents, so B >= 1")
        if any(Fraction(str(a)) < Fraction(MATVEEV_A_FLOOR) for a in self.A):
            raise InvalidInput("every A_j must be >= 0.16")


@dataclass(frozen=True)
class EffectiveBounds:
    c0: RInterval
    c1: RInterval
    d1: RInterval
    d2: RInterval
    c4: RInterval
    c2: RInterval
    C1: RInterval
    C2: RInterval
    trace: tuple[TraceStep, ...]
    precision_bits: int
    n0: int

    def __getitem__(self, name: str) -> RInterval:
        for step in self.trace:
            if step.name == name:
                return step.interval
        raise KeyError(name)

    def names(self) -> list[str]:
        return [s.name for s in self.trace]

    def trace_json(self) -> list[dict]:
        return [s.to_json() for s in self.trace]

    def dumps(self) -> str:
        return json.dumps(self.trace_json(), indent=2)


# heights and Matveev's bound


def _height_iv(ctx, x: QuadElem):
    if not x:
        raise ZeroInput("height of 0 is undefined here")
    if x.is_rational():
        p, q = x.a.numerator, x.a.denominator
        return ctx.log(max(abs(p), q))
    a0, _, _ = x.minimal_polynomial()
    one = ctx.mpf(1)
    total = ctx.log(a0)
    for conj in (x, x.conj()):
        total += ctx.log(iv_max(ctx, abs(quad_iv(ctx, conj)), one))
    return total / 2


def height_quadratic(x: QuadElem, precision_bits: int = DEFAULT_PRECISION) -> RInterval:
    """Absolute logarithmic height of an element of Q(sqrt(D))."""
    ctx = make_context(precision_bits)
    return RInterval.from_iv(_height_iv(ctx, x), precision_bits)


def _matveev_prefactor(ctx, t: int, dL: int):
    return (ctx.mpf("1.4") * ctx.mpf(30) ** (t + 3) * ctx.mpf(t) ** ctx.mpf("4.5")
            * ctx.mpf(dL) ** 2 * (1 + ctx.log(dL)))


def _matveev_iv(ctx, t: int, dL: int, B, A):
    e = _matveev_prefactor(ctx, t, dL) * (1 + ctx.log(iv(ctx, B)))
    for a in A:
        e = e * iv(ctx, a)
    return e


def matveev_bound(inp: MatveevInput, precision_bits: int = DEFAULT_PRECISION) -> RInterval:
    """Exponent E with |Lambda| >= exp(-E) for a nonzero real linear form.

    E = 1.4 * 30^(t+3) * t^4.5 * dL^2 * (1 + log dL) * (1 + log B) * A_1 ... A_t
    """
    ctx = make_context(precision_bits)
    return RInterval.from_iv(_matveev_iv(ctx, inp.t, inp.dL, _as_exact(inp.B),
                                         [_as_exact(a) for a in inp.A]), precision_bits)


def _as_exact(v):
    if isinstance(v, float):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    return v


def invert_log_power(m: int, T) -> float:
    """Upper-rounded ``2^m * T * (log T)^m``.

    If ``T > (4m^2)^m`` and ``T > x / (log x)^m`` then ``x`` is below the
    returned value.
    """
    if m < 1:
        raise HypothesisViolated("m must be >= 1")
    T = _as_exact(T)
    if Fraction(T) <= (4 * m * m) ** m:
        raise HypothesisViolated(f"T = {T} must exceed (4m^2)^m = {(4 * m * m) ** m}")
    ctx = make_context(64)
    t = iv(ctx, T)
    hi = upper(ctx.mpf(2) ** m * t * ctx.log(t) ** m)
    out = float(hi)
    if Fraction(out) < hi:
        out = math.nextafter(out, math.inf)
    return out


# the constant chain


class _Trace:
    def __init__(self, bits: int):
        self.bits = bits
        self.steps: list[TraceStep] = []
        self.values: dict[str, object] = {}

    def add(self, name: str, formula: str, value):
        self.steps.append(TraceStep(name, formula, RInterval.from_iv(value, self.bits)))
        self.values[name] = value
        return value


def _derive_at(seq: RecurrenceSequence, bits: int) -> EffectiveBounds:
    ctx = make_context(bits)
    tr = _Trace(bits)
    zero = ctx.mpf(0)
    log2 = ctx.log(2)

    sqrt_d = tr.add("sqrt_D", "sqrt(P^2 + 4Q)", ctx.sqrt(seq.D))
    alpha = tr.add("alpha", "(P + sqrt(D))/2", quad_iv(ctx, seq.alpha))
    abs_beta = tr.add("abs_beta", "|P - sqrt(D)|/2", abs(quad_iv(ctx, seq.beta)))
    abs_a1 = tr.add("abs_a1", "|U1 - U0*beta|", abs(quad_iv(ctx, seq.a1)))
    abs_a2 = tr.add("abs_a2", "|U1 - U0*alpha|", abs(quad_iv(ctx, seq.a2)))
    log_alpha = tr.add("log_alpha", "log(alpha)", ctx.log(alpha))

    # upper-bound lemma
    c0 = tr.add("c0", "(|a1| + |a2|)/sqrt(D)", (abs_a1 + abs_a2) / sqrt_d)
    c1 = tr.add("c1", "2*c0", 2 * c0)
    d1 = tr.add("d1", "2*log(alpha)", 2 * log_alpha)
    d2 = tr.add("d2", "max(0, log(c1)/log(alpha))", iv_max(ctx, zero, ctx.log(c1) / log_alpha))

    # Lambda_2 = 0 forces n < c4
    ratio = ctx.log(2 * (abs_a2 + abs_a1) / abs_a1)
    c4 = tr.add("c4", "max(log(2(|a2|+|a1|)/|a1|)/log(alpha), "
                      "log(2(|a2|+|a1|)/|a1|)/log(alpha/|beta|))",
                iv_max(ctx, ratio / log_alpha, ratio / ctx.log(alpha / abs_beta)))
    C2 = tr.add("C2", "max(d2, c4)", iv_max(ctx, d2, c4))

    # shared Matveev ingredients, t = 3 and d_L = 2
    h_alpha = tr.add("h_alpha", "h(alpha)", _height_iv(ctx, seq.alpha))
    log_beta_plus = tr.add("log_beta_plus", "max(0, log|beta|)", iv_max(ctx, zero, ctx.log(abs_beta)))
    lam = tr.add("lambda", "log(alpha) - max(0, log|beta|)", log_alpha - log_beta_plus)
    a_alpha = tr.add("A_alpha", "max(2*h(alpha), log(alpha), 0.16)",
                     iv_max(ctx, 2 * h_alpha, log_alpha, ctx.mpf(MATVEEV_A_FLOOR)))
    gamma = seq.sqrt_d / seq.a1
    a_gamma = tr.add("A_gamma", "max(2*h(sqrt(D)/a1), |log(sqrt(D)/|a1|)|, 0.16)",
                     iv_max(ctx, 2 * _height_iv(ctx, gamma), abs(ctx.log(sqrt_d / abs_a1)),
                            ctx.mpf(MATVEEV_A_FLOOR)))
    k0 = tr.add("K0", "1.4*30^6*3^4.5*2^2*(1+log 2)", _matveev_prefactor(ctx, 3, 2))
    d1_eff = tr.add("d1_eff", "d1/log 2  (q < d1_eff*n once n > d2, any x >= 2)", d1 / log2)

    # explicit lower bound |U_n + U_m| > d4r * alpha^n for n > d3r, hence n/q < d5r*log x
    d4r = tr.add("d4r", "|a1|/(2*sqrt(D))", abs_a1 / (2 * sqrt_d))
    d3r = tr.add("d3r", "max(0, log(4|a2|/|a1|)/lambda)",
                 iv_max(ctx, zero, ctx.log(4 * abs_a2 / abs_a1) / lam))
    d5r = tr.add("d5r", "(1 + max(0, -log d4r)/(2 log 2))/log(alpha)",
                 (1 + iv_max(ctx, zero, -ctx.log(d4r)) / (2 * log2)) / log_alpha)
    k_coef = tr.add("k_coef", "d5r + d3r/(2 log 2)  (k <= n/q <= k_coef*log x)",
                    d5r + d3r / (2 * log2))

    # gap lemma: (n-m)*lambda < log K + K0 (1 + log q) A1 A_alpha A_gamma
    gap_k = tr.add("K_gap", "(c0*sqrt(D) + |a2|)/|a1|", (c0 * sqrt_d + abs_a2) / abs_a1)
    a1_coef = tr.add("A1_coef", "2 + 2*h(alpha)*k_coef  (A1 <= A1_coef*log x)",
                     2 + 2 * h_alpha * k_coef)
    c2_main = (k0 * (1 + 1 / log2) * a1_coef * a_alpha * a_gamma
               + iv_max(ctx, zero, ctx.log(gap_k)) / log2 ** 2) / lam
    c2 = tr.add("c2", "max([K0(1+1/log 2) A1_coef A_alpha A_gamma + max(0, log K_gap)/(log 2)^2]"
                      "/lambda, c4/(log 2)^2)",
                iv_max(ctx, c2_main, c4 / log2 ** 2))

    # Case II: A3 <= c5 log x log q
    c5 = tr.add("c5", "(A_gamma + 2 log 2)/(log 2)^2 + 2*h(alpha)*c2",
                (a_gamma + 2 * log2) / log2 ** 2 + 2 * h_alpha * c2)
    n0 = max(3, math.floor(lower(C2)) + 1)
    log_n0 = tr.add("log_n0", f"log(n0), n0 = max(3, floor(C2) + 1) = {n0}", ctx.log(n0))
    c_b = tr.add("c_B", "1 + max(0, 1 + log d1_eff)/log n0  (1 + log B <= c_B log n)",
                 1 + iv_max(ctx, zero, 1 + ctx.log(d1_eff)) / log_n0)
    c6 = tr.add("c6", "K0 * c_B * 2 * A_alpha * c5", k0 * c_b * 2 * a_alpha * c5)
    l0 = iv_max(ctx, zero, ctx.log(2 * abs_a2 / abs_a1))
    c7 = tr.add("c7", "max(0, log(2|a2|/|a1|))/(log 2)^2", l0 / log2 ** 2)
    c8 = tr.add("c8", "1 + max(0, log d1_eff)/log n0  (log q < c8 log n)",
                1 + iv_max(ctx, zero, ctx.log(d1_eff)) / log_n0)
    c9 = tr.add("c9", "c7*c8", c7 * c8)
    c10 = tr.add("c10", "c6*c8", c6 * c8)
    c11 = tr.add("c11", "c9/(log n0 * log 2) + c10", c9 / (log_n0 * log2) + c10)
    c12 = tr.add("c12", "c11/lambda  (n/(log n)^2 < c12 (log x)^2)", c11 / lam)
    c12p = tr.add("c12_eff", "max(c12, 257/(log 2)^2)", iv_max(ctx, c12, 257 / log2 ** 2))
    C1 = tr.add("C1", "4*c12_eff*(log(c12_eff)/log 2 + 2)^2",
                4 * c12p * (ctx.log(c12p) / log2 + 2) ** 2)

    def get(name):
        return next(s.interval for s in tr.steps if s.name == name)

    return EffectiveBounds(c0=get("c0"), c1=get("c1"), d1=get("d1"), d2=get("d2"),
                           c4=get("c4"), c2=get("c2"), C1=get("C1"), C2=get("C2"),
                           trace=tuple(tr.steps), precision_bits=bits, n0=n0)


@lru_cache(maxsize=256)
def derive_constants(seq: RecurrenceSequence, precision_bits: int = DEFAULT_PRECISION,
                     refine: bool = True) -> EffectiveBounds:
    """Derive the whole constant chain, doubling precision until every trace
    interval has relative width below ``TARGET_RELATIVE_WIDTH``."""
    if is_square(seq.D):
        raise UnsupportedSequence(
            f"D = {seq.D} is a perfect square; the nonvanishing arguments for the "
            "linear forms need an irrational alpha")
    bits = precision_bits
    while True:
        bounds = _derive_at(seq, bits)
        if not refine or bits >= MAX_PRECISION:
            return bounds
        if all(s.interval.relative_width() < TARGET_RELATIVE_WIDTH for s in bounds.trace):
            return bounds
        bits *= 2


def _log_x_iv(ctx, x: int):
    if x < 2:
        raise InvalidInput("x must be >= 2")
    return ctx.log(x)


def search_bound(seq: RecurrenceSequence, x: int, precision_bits: int = DEFAULT_PRECISION) -> int:
    """Integer N with n <= N for every solution of U_n + U_m = x^q."""
    b = derive_constants(seq, precision_bits)
    ctx = make_context(b.precision_bits)
    log_x = _log_x_iv(ctx, x)
    main = b.C1.to_iv(ctx) * log_x ** 4
    return max(b.C2.ceil_hi(), math.ceil(upper(main)), b.n0)


def gap_bound(seq: RecurrenceSequence, x: int, q: int, precision_bits: int = DEFAULT_PRECISION) -> int:
    """Integer G with n - m <= G for every solution with base x and exponent q."""
    if q < 2:
        raise InvalidInput("q must be >= 2")
    b = derive_constants(seq, precision_bits)
    ctx = make_context(b.precision_bits)
    return math.ceil(upper(b.c2.to_iv(ctx) * ctx.log(q) * _log_x_iv(ctx, x)))


def upper_envelope(seq: RecurrenceSequence, n: int, precision_bits: int = DEFAULT_PRECISION) -> Fraction:
    """Upper endpoint of c1 * alpha^n."""
    b = derive_constants(seq, precision_bits)
    ctx = make_context(max(b.precision_bits, 64 + 2 * n))
    return upper(b.c1.to_iv(ctx) * quad_iv(ctx, seq.alpha) ** n)
