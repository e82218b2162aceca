"""Exact X/Y identities and abc-triple exploration for sums U_n + U_m.

For ``n >= m`` put ``S = U_n + U_m`` and ``X = W_n + W_m`` where ``W`` is the
companion sequence ``a1*alpha^n + a2*beta^n``. Then

    X^2 - D*S^2 = Y = 4*a1*a2*(-Q)^n*(1 + alpha^(m-n))*(1 + beta^(m-n)),

and dividing through by ``d = gcd(X^2, D*S^2)`` gives ``Y/d + D*S^2/d = X^2/d``.
Nothing here asserts a bound: the abc conjecture is unproven, so every
quality score is exploratory.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import FactorizationTimeout, ZeroEncountered, ZeroTerm
from .factor import DEFAULT_BUDGET_S, factorize, radical
from .interval import DEFAULT_PRECISION, RInterval, lower, make_context, quad_iv
from .quadratic import QuadElem
from .recurrence import (N_MAX_HARD, RecurrenceSequence, companion_term, iterate_terms,
                         make_sequence, term)

__all__ = ["XYRecord", "AbcTriple", "QualityReport", "EmpiricalConstants", "xy_pair",
           "closed_form_y", "radical", "triple", "scan_quality", "estimate_lower_constants"]

CONJECTURAL_NOTE = ("abc is a conjecture; qualities are exploratory and no bound is asserted")


@dataclass(frozen=True)
class XYRecord:
    n: int
    m: int
    X: int
    S: int
    Y: int
    d: int

    @property
    def DS2(self) -> int:
        return self.X * self.X - self.Y


@lru_cache(maxsize=4096)
def _neg_powers(seq: RecurrenceSequence, k: int) -> tuple[QuadElem, QuadElem]:
    return seq.alpha ** (-k), seq.beta ** (-k)


def closed_form_y(seq: RecurrenceSequence, n: int, m: int) -> QuadElem:
    """``4*a1*a2*(-Q)^n*(1 + alpha^(m-n))*(1 + beta^(m-n))`` in exact arithmetic."""
    ia, ib = _neg_powers(seq, n - m)
    return seq.a1 * seq.a2 * 4 * (-seq.Q) ** n * (1 + ia) * (1 + ib)


def xy_pair(seq: RecurrenceSequence, n: int, m: int, cross_check: bool = True) -> XYRecord:
    if not n >= m >= 0:
        raise ValueError(f"need n >= m >= 0, got n = {n}, m = {m}")
    X = companion_term(seq, n) + companion_term(seq, m)
    S = term(seq, n) + term(seq, m)
    DS2 = seq.D * S * S
    Y = X * X - DS2
    if cross_check:
        closed = closed_form_y(seq, n, m)
        if closed != Y:
            raise ArithmeticError(f"closed form {closed!r} disagrees with Y = {Y} at ({n}, {m})")
    return XYRecord(n, m, X, S, Y, math.gcd(X * X, DS2))


@dataclass(frozen=True)
class AbcTriple:
    """``A + B = C`` built from one (n, m) pair.

    When ``complete_factorization`` is false, ``rad`` is an upper bound for
    the true radical and ``quality`` is therefore a lower bound.
    """

    n: int
    m: int
    A: int
    B: int
    C: int
    d: int
    residual_gcd: int
    reduced: bool
    rad: int
    quality: float
    complete_factorization: bool = True

    def check(self) -> bool:
        return self.A + self.B == self.C

    def to_json(self, seq: RecurrenceSequence | None = None) -> dict:
        out = {"seq": None if seq is None else seq.describe()}
        for k, v in asdict(self).items():
            out[k] = str(v) if isinstance(v, int) and not isinstance(v, bool) else v
        return out


def _radical_of(parts: list[int], sources: list[int], budget_s: float | None):
    """Radical of the product of ``parts``.

    Every prime of every part divides some ``source``; sources are
    factored (cheaper than the parts) and primes are kept if they divide a
    part. Returns ``(rad, complete, leftover)``; if a factorization times out the
    unfactored cofactors are multiplied in, so ``rad`` stays an upper bound.
    """
    primes: set[int] = set()
    leftover = 1
    complete = True
    for src in sources:
        src = abs(src)
        if src <= 1:
            continue
        try:
            primes.update(factorize(src, budget_s))
        except FactorizationTimeout as exc:
            primes.update(exc.partial)
            leftover *= exc.cofactor
            complete = False
    rad = 1
    for p in primes:
        if any(x % p == 0 for x in parts):
            rad *= p
    # every prime not found divides an unfactored cofactor
    rad *= leftover
    return rad, complete, leftover


def triple(seq: RecurrenceSequence, n: int, m: int, enforce_coprime: bool = True,
           budget_s: float | None = DEFAULT_BUDGET_S, strict: bool = True) -> AbcTriple:
    """The triple ``(Y/d, D*S^2/d, X^2/d)``, optionally reduced to coprime form.

    With ``strict`` a factorization timeout is raised (the partial triple is
    attached as ``payload``); otherwise the partial triple is returned.
    """
    rec = xy_pair(seq, n, m)
    if rec.Y == 0:
        raise ZeroTerm(f"Y = 0 at (n, m) = ({n}, {m})")
    if rec.S == 0 or rec.X == 0:
        raise ZeroTerm(f"{'S' if rec.S == 0 else 'X'} = 0 at (n, m) = ({n}, {m}); "
                       "the triple has a zero term")
    A, B, C = rec.Y // rec.d, rec.DS2 // rec.d, rec.X * rec.X // rec.d
    g = 1
    if enforce_coprime:
        g = math.gcd(A, B)
        A, B, C = A // g, B // g, C // g
    reduced = math.gcd(A, B) == math.gcd(B, C) == math.gcd(A, C) == 1
    rad, complete, leftover = _radical_of([A, B, C], [A, seq.D, rec.S, rec.X], budget_s)
    quality = math.log(max(abs(A), abs(B), abs(C))) / math.log(rad)
    t = AbcTriple(n, m, A, B, C, rec.d, g, reduced, rad, quality, complete)
    if strict and not complete:
        raise FactorizationTimeout(abs(C), {}, leftover, payload=t)
    return t


@dataclass
class QualityReport:
    sequence: RecurrenceSequence
    n_max: int
    triples: list[AbcTriple]
    pairs_scanned: int
    zero_pairs: list[tuple[int, int]] = field(default_factory=list)
    incomplete: int = 0
    note: str = CONJECTURAL_NOTE
    # optional reporting threshold: how many triples have quality above 1 + epsilon
    epsilon: float | None = None
    exceeding: int | None = None


def _rank_key(t: AbcTriple):
    return (-t.quality, t.n, t.m)


def _quality_chunk(args):
    params, n_lo, n_hi, budget_s, enforce = args
    seq = make_sequence(*params)
    found, zeros, scanned = [], [], 0
    for n in range(n_lo, n_hi):
        for m in range(n + 1):
            scanned += 1
            try:
                found.append(triple(seq, n, m, enforce, budget_s, strict=False))
            except ZeroTerm:
                zeros.append((n, m))
    return found, zeros, scanned


def scan_quality(seq: RecurrenceSequence, n_max: int, top: int | None = None,
                 budget_s: float | None = DEFAULT_BUDGET_S, enforce_coprime: bool = True,
                 workers: int = 1, n_max_hard: int = N_MAX_HARD,
                 epsilon: float | None = None) -> QualityReport:
    """Rank the triples of all pairs m <= n <= n_max by quality (descending).

    ``epsilon`` only adds a count of triples with quality > 1 + epsilon.
    """
    if n_max > n_max_hard:
        raise ValueError(f"n_max = {n_max} exceeds n_max_hard = {n_max_hard}")
    if n_max < 0:
        return QualityReport(seq, n_max, [], 0)
    if workers <= 1:
        chunks = [_quality_chunk((seq.params, 0, n_max + 1, budget_s, enforce_coprime))]
    else:
        # later rows hold more pairs; interleave small contiguous blocks
        block = max(1, (n_max + 1) // (8 * workers))
        jobs = [(seq.params, a, min(a + block, n_max + 1), budget_s, enforce_coprime)
                for a in range(0, n_max + 1, block)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_quality_chunk, jobs))
    found = [t for c in chunks for t in c[0]]
    zeros = sorted(z for c in chunks for z in c[1])
    scanned = sum(c[2] for c in chunks)
    found.sort(key=_rank_key)
    incomplete = sum(not t.complete_factorization for t in found)
    ranked = found if top is None else found[:top]
    exceeding = None if epsilon is None else sum(t.quality > 1 + epsilon for t in found)
    return QualityReport(seq, n_max, ranked, scanned, zeros, incomplete,
                         epsilon=epsilon, exceeding=exceeding)


@dataclass(frozen=True)
class EmpiricalConstants:
    """Scan-based stand-ins for the lower-bound constants. NOT certified."""

    d3_emp: int
    d4_emp: Fraction
    d5_emp: float
    n_min: int
    n_max: int
    argmin: tuple[int, int]
    rigorous: bool = False
    flag: str = "NON-RIGOROUS"


def estimate_lower_constants(seq: RecurrenceSequence, n_min: int, n_max: int,
                             precision_bits: int = DEFAULT_PRECISION,
                             n_max_hard: int = N_MAX_HARD) -> EmpiricalConstants:
    """Smallest ``|U_n + U_m| / alpha^n`` over ``n_min <= n <= n_max``, ``m <= n``.

    ``d4_emp`` is the interval lower endpoint of that minimum. ``d5_emp``
    follows from ``x^q > d4 alpha^n``: for ``n >= n_min``,
    ``n/q < log x / (log alpha + min(0, log d4)/n_min)``.
    """
    if not 0 <= n_min < n_max <= n_max_hard:
        raise ValueError("need 0 <= n_min < n_max <= n_max_hard")
    ctx = make_context(precision_bits)
    alpha = quad_iv(ctx, seq.alpha)
    best = None
    prefix: list[int] = []
    for n, u in zip(range(n_max + 1), iterate_terms(seq)):
        prefix.append(u)
        if n < n_min:
            continue
        m_best, s_best = None, None
        for m, v in enumerate(prefix):
            s = abs(u + v)
            if s == 0:
                raise ZeroEncountered(n, m)
            if s_best is None or s < s_best:
                m_best, s_best = m, s
        ratio = lower(ctx.mpf(s_best) / alpha ** n)
        if best is None or ratio < best[0]:
            best = (ratio, n, m_best)
    d4, n_at, m_at = best
    if d4 <= 0:
        raise ArithmeticError("precision too low to separate d4 from zero")
    log_alpha = float(ctx.log(alpha).a)
    denom = log_alpha + min(0.0, math.log(d4)) / max(n_min, 1)
    d5 = math.inf if denom <= 0 else 1.0 / denom
    return EmpiricalConstants(n_min, d4, d5, n_min, n_max, (n_at, m_at))


def y_envelope(seq: RecurrenceSequence, n: int, m: int,
               precision_bits: int = DEFAULT_PRECISION) -> RInterval:
    """Interval enclosure of ``|4 a1 a2 Q^n (1 + alpha^(m-n)) (1 + beta^(m-n))|``."""
    ctx = make_context(precision_bits)
    k = n - m
    a = quad_iv(ctx, seq.alpha)
    b = quad_iv(ctx, seq.beta)
    val = 4 * abs(ctx.mpf(seq.a1a2_int)) * abs(ctx.mpf(seq.Q)) ** n
    val = val * abs(1 + a ** (-k)) * abs(1 + b ** (-k))
    return RInterval.from_iv(val, precision_bits)
