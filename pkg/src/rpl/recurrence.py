"""Binary recurrence sequences U_n = P*U_{n-1} + Q*U_{n-2} and their exact invariants."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .errors import DegenerateSequence, ZeroProduct
from .quadratic import QuadElem, is_square

#: Largest index the enumerators accept; U_n has about n*log2(alpha) bits.
N_MAX_HARD = 10**6


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    params: tuple[int, int, int, int]
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


@dataclass(frozen=True, eq=False)
class RecurrenceSequence:
    """A validated non-degenerate sequence with its Binet data.

    ``U_n = (a1*alpha**n - a2*beta**n) / (alpha - beta)`` with
    ``alpha - beta = sqrt(D) > 0`` and ``alpha > |beta|``.
    """

    P: int
    Q: int
    U0: int
    U1: int
    D: int
    alpha: QuadElem
    beta: QuadElem
    a1: QuadElem
    a2: QuadElem
    a1a2_int: int
    name: str | None = None

    @property
    def params(self) -> tuple[int, int, int, int]:
        return (self.P, self.Q, self.U0, self.U1)

    @property
    def sqrt_d(self) -> QuadElem:
        return self.alpha - self.beta

    def describe(self) -> str:
        p = ",".join(map(str, self.params))
        return f"{self.name} ({p})" if self.name else p

    def __eq__(self, other):
        if not isinstance(other, RecurrenceSequence):
            return NotImplemented
        return self.params == other.params

    def __hash__(self):
        return hash(self.params)


def check_nondegenerate(P: int, Q: int, U0: int, U1: int) -> ValidationReport:
    """Evaluate every standing hypothesis exactly and report each one."""
    checks = []
    checks.append(Check("PQ != 0", P * Q != 0, f"P*Q = {P * Q}"))
    checks.append(Check("|U0| + |U1| > 0", abs(U0) + abs(U1) > 0,
                        f"|U0| + |U1| = {abs(U0) + abs(U1)}"))
    D = P * P + 4 * Q
    checks.append(Check("D > 0", D > 0, f"D = P^2 + 4Q = {D}"))
    if D <= 0:
        return ValidationReport((P, Q, U0, U1), checks)

    alpha = QuadElem(Fraction(P, 2), Fraction(1, 2), D)
    beta = QuadElem(Fraction(P, 2), Fraction(-1, 2), D)
    checks.append(Check("alpha > 1", alpha > 1, f"alpha = (P + sqrt(D))/2 ~ {float(alpha):.6g}"))
    checks.append(Check("alpha > |beta|", alpha > abs(beta),
                        f"beta = (P - sqrt(D))/2 ~ {float(beta):.6g}"))
    # real roots with alpha != |beta|: alpha/beta is real and of modulus != 1,
    # so the only candidate roots of unity +1, -1 are excluded (they need D = 0 or P = 0)
    ratio_ok = P != 0 and Q != 0
    checks.append(Check("alpha/beta not a root of unity", ratio_ok,
                        "alpha/beta = +1 iff D = 0, alpha/beta = -1 iff P = 0; "
                        "no other real root of unity exists"))
    a1a2 = U1 * U1 - P * U0 * U1 - Q * U0 * U0
    checks.append(Check("a1*a2 != 0", a1a2 != 0, f"a1*a2 = U1^2 - P*U0*U1 - Q*U0^2 = {a1a2}"))
    if is_square(D):
        checks.append(Check("D non-square", True,
                            f"D = {isqrt(D)}^2: rational roots, allowed"))
    return ValidationReport((P, Q, U0, U1), checks)


def make_sequence(P: int, Q: int, U0: int, U1: int, name: str | None = None) -> RecurrenceSequence:
    report = check_nondegenerate(P, Q, U0, U1)
    if not report.ok:
        reasons = "; ".join(f"{c.name} fails ({c.detail})" for c in report.failures())
        raise DegenerateSequence(f"sequence ({P},{Q},{U0},{U1}) is degenerate: {reasons}")
    D = P * P + 4 * Q
    alpha = QuadElem(Fraction(P, 2), Fraction(1, 2), D)
    beta = QuadElem(Fraction(P, 2), Fraction(-1, 2), D)
    a1 = U1 - U0 * beta
    a2 = U1 - U0 * alpha
    a1a2_int = U1 * U1 - P * U0 * U1 - Q * U0 * U0
    return RecurrenceSequence(P, Q, U0, U1, D, alpha, beta, a1, a2, a1a2_int, name)


def _fundamental_pair(P: int, Q: int, n: int) -> tuple[int, int]:
    """(u_n, u_{n+1}) for the seeds u_0 = 0, u_1 = 1.

    Doubling rules from squaring the companion matrix
    ``[[u_{k+1}, Q u_k], [u_k, Q u_{k-1}]]``:
    u_{2k} = u_k (2 u_{k+1} - P u_k) and u_{2k+1} = u_{k+1}^2 + Q u_k^2.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    u, v = 0, 1
    for bit in bin(n)[2:]:
        u, v = u * (2 * v - P * u), v * v + Q * u * u
        if bit == "1":
            u, v = v, P * v + Q * u
    return u, v


def _seeded(P: int, Q: int, s0: int, s1: int, n: int) -> int:
    u, v = _fundamental_pair(P, Q, n)
    return s0 * v + (s1 - P * s0) * u


def term(seq: RecurrenceSequence, n: int) -> int:
    """Exact U_n in O(log n) multiplications."""
    return _seeded(seq.P, seq.Q, seq.U0, seq.U1, n)


def lucas_v(seq: RecurrenceSequence, n: int) -> int:
    """V_n = alpha^n + beta^n (seeds 2, P)."""
    return _seeded(seq.P, seq.Q, 2, seq.P, n)


def companion_term(seq: RecurrenceSequence, n: int) -> int:
    """W_n = a1*alpha^n + a2*beta^n = U1*V_n + Q*U0*V_{n-1}."""
    if n == 0:
        return 2 * seq.U1 - seq.P * seq.U0
    return seq.U1 * lucas_v(seq, n) + seq.Q * seq.U0 * lucas_v(seq, n - 1)


def iterate_terms(seq: RecurrenceSequence, start: int = 0):
    """Yield U_start, U_{start+1}, ... with a two-term sliding window."""
    u = term(seq, start)
    v = term(seq, start + 1)
    P, Q = seq.P, seq.Q
    while True:
        yield u
        u, v = v, P * v + Q * u


def terms(seq: RecurrenceSequence, n_max: int) -> list[int]:
    out = []
    for k, u in enumerate(iterate_terms(seq)):
        if k > n_max:
            break
        out.append(u)
    return out


def chebyshev_eval(n: int, x: int) -> int:
    """T_n(x) with T_0 = 2, T_1 = x, T_{n+1} = x*T_n - T_{n-1}."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return _seeded(x, -1, 2, x, n)


def exceptional_condition(seq: RecurrenceSequence, n_parity, m: int) -> str:
    """Exceptional-family condition for the index pair (n, m).

    The condition ``sqrt((-1)^(n+1) D / (a1 a2)) * U_m != +-2`` is squared
    into the integer test ``(-1)^(n+1) * D * U_m^2 != 4 * a1a2``.
    ``n_parity`` is ``"even"``, ``"odd"`` or an integer index.
    Returns ``"holds"`` or ``"fails"``.
    """
    if seq.a1a2_int == 0:
        raise ZeroProduct("a1*a2 = 0")
    if isinstance(n_parity, str):
        if n_parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {n_parity!r}")
        odd = n_parity == "odd"
    else:
        odd = bool(n_parity % 2)
    sign = 1 if odd else -1
    um = term(seq, m)
    return "fails" if sign * seq.D * um * um == 4 * seq.a1a2_int else "holds"
