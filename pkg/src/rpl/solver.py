"""Enumeration and certification of solutions of U_n + U_m = x^q."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import DegenerateSequence, HypothesisViolated
from .bounds import search_bound
from .interval import DEFAULT_PRECISION
from .powers import perfect_power
from .recurrence import (N_MAX_HARD, RecurrenceSequence, exceptional_condition, iterate_terms,
                         make_sequence, term)

# residues of U_m modulo a Mersenne prime index the prefix; hits are re-checked exactly
_MOD = (1 << 61) - 1


@dataclass(frozen=True)
class Solution:
    n: int
    m: int
    x: int
    q: int
    value: int
    certified_complete: bool = False

    def key(self) -> tuple[int, int, int, int]:
        return (self.n, self.m, self.x, self.q)

    def order(self) -> tuple[int, int, int, int]:
        return (self.n, self.m, self.q, self.x)


@dataclass
class SolutionSet:
    sequence: RecurrenceSequence
    mode: str  # "fixed-x" or "unconstrained"
    n_bound_used: int
    theorem_bound: int | None
    solutions: list[Solution]
    x: int | None = None

    @property
    def certified_complete(self) -> bool:
        return self.theorem_bound is not None and self.n_bound_used >= self.theorem_bound

    def tuples(self) -> set[tuple[int, int, int, int]]:
        return {s.key() for s in self.solutions}


def verify_solution(seq: RecurrenceSequence, sol: Solution) -> bool:
    """Recompute both sides from scratch."""
    if not (sol.n >= sol.m >= 0 and sol.x >= 2 and sol.q >= 2):
        return False
    lhs = term(seq, sol.n) + term(seq, sol.m)
    return lhs == pow(sol.x, sol.q) == sol.value


def _residue_index(seq: RecurrenceSequence, upto: int) -> dict[int, int | tuple[int, ...]]:
    """U_m mod _MOD -> m (or tuple of m) for 0 <= m < upto."""
    index: dict[int, int | tuple[int, ...]] = {}
    P, Q = seq.P, seq.Q
    u, v = seq.U0 % _MOD, seq.U1 % _MOD
    for m in range(upto):
        _index_add(index, u, m)
        u, v = v, (P * v + Q * u) % _MOD
    return index


def _index_add(index, key, m):
    prev = index.get(key)
    if prev is None:
        index[key] = m
    elif isinstance(prev, int):
        index[key] = (prev, m)
    else:
        index[key] = prev + (m,)


def _index_get(index, key) -> tuple[int, ...]:
    hit = index.get(key)
    if hit is None:
        return ()
    return (hit,) if isinstance(hit, int) else hit


def _scan_range(seq: RecurrenceSequence, x: int, start: int, stop: int,
                lo_prefix: int | None, hi_prefix: int | None) -> list[tuple[int, int, int, int]]:
    """Hits (n, m, q, value) for start <= n < stop, all m <= n.

    ``lo_prefix``/``hi_prefix`` are min/max of U_m over m < start.
    """
    index = _residue_index(seq, start)
    lo, hi = lo_prefix, hi_prefix
    # ladder position: x^q_c, moved to the bottom of each window
    q_c, p_c = 2, x * x
    hits = []
    verified: dict[int, int] = {}
    for n, u in zip(range(start, stop), iterate_terms(seq, start)):
        _index_add(index, u % _MOD, n)
        lo = u if lo is None or u < lo else lo
        hi = u if hi is None or u > hi else hi
        w_lo, w_hi = max(4, u + lo), u + hi
        if w_hi < 4:
            continue
        while p_c < w_lo:
            p_c *= x
            q_c += 1
        while q_c > 2 and p_c // x >= w_lo:
            p_c //= x
            q_c -= 1
        p, q = p_c, q_c
        while p <= w_hi:
            t = p - u
            for m in _index_get(index, t % _MOD):
                um = u if m == n else verified.get(m)
                if um is None:
                    um = verified[m] = term(seq, m)
                if um == t:
                    hits.append((n, m, q, p))
            p *= x
            q += 1
    return hits


def _prefix_extremes(seq: RecurrenceSequence, cuts: list[int]) -> dict[int, tuple[int, int]]:
    out = {}
    lo = hi = None
    wanted = set(cuts)
    for k, u in enumerate(iterate_terms(seq)):
        if k in wanted:
            out[k] = (lo, hi)
            if k == max(cuts):
                break
        lo = u if lo is None or u < lo else lo
        hi = u if hi is None or u > hi else hi
    return out


def _scan_job(args):
    params, x, start, stop, lo, hi = args
    return _scan_range(make_sequence(*params), x, start, stop, lo, hi)


def scan_fixed_base(seq: RecurrenceSequence, x: int, n_last: int, workers: int = 1):
    """All (n, m, q, value) with n <= n_last and U_n + U_m = x^q, q >= 2."""
    if x < 2:
        raise ValueError("x must be >= 2")
    total = n_last + 1
    if workers <= 1 or total < 4 * workers:
        return sorted(_scan_range(seq, x, 0, total, None, None))
    step = -(-total // workers)
    cuts = list(range(0, total, step))
    extremes = _prefix_extremes(seq, cuts)
    jobs = [(seq.params, x, a, min(a + step, total), *extremes[a]) for a in cuts]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_scan_job, jobs)
    return sorted(h for part in parts for h in part)


def solve_fixed_x(seq: RecurrenceSequence, x: int, n_cap: int | None = None, *,
                  precision_bits: int = DEFAULT_PRECISION, workers: int = 1,
                  n_max_hard: int = N_MAX_HARD) -> SolutionSet:
    """Enumerate every solution with base ``x`` up to min(N, n_cap, n_max_hard).

    N is the certified theorem bound; members are flagged complete only when
    the enumeration actually reached it.
    """
    if x < 2:
        raise ValueError("x must be >= 2")
    N = search_bound(seq, x, precision_bits)
    cap = n_max_hard if n_cap is None else min(n_cap, n_max_hard)
    n_last = min(N, cap)
    complete = n_last >= N
    sols = [Solution(n, m, x, q, value, complete)
            for n, m, q, value in scan_fixed_base(seq, x, n_last, workers)]
    return SolutionSet(seq, "fixed-x", n_last, N, sols, x=x)


def brute_search(seq: RecurrenceSequence, n_max: int, q_max: int | None = None,
                 n_max_hard: int = N_MAX_HARD) -> SolutionSet:
    """Every perfect-power value U_n + U_m with m <= n <= n_max."""
    if n_max > n_max_hard:
        raise ValueError(f"n_max = {n_max} exceeds n_max_hard = {n_max_hard}")
    values = []
    sols = []
    for n, u in zip(range(n_max + 1), iterate_terms(seq)):
        values.append(u)
        for m in range(n + 1):
            s = u + values[m]
            if s < 4:
                continue
            for rep in perfect_power(s):
                if q_max is None or rep.exponent <= q_max:
                    sols.append(Solution(n, m, rep.base, rep.exponent, s))
    sols.sort(key=Solution.order)
    return SolutionSet(seq, "unconstrained", n_max, None, sols)


@dataclass(frozen=True)
class FamilyMember:
    k: int
    solution: Solution
    verified: bool
    exceptional_condition: str


def square_family(P: int, Q: int, k_max: int) -> list[Solution]:
    """The infinite family (4k, 0, U_2k, 2) for seeds U0 = 2, U1 = P, |Q| = 1."""
    return [f.solution for f in family_members(P, Q, k_max)]


def family_members(P: int, Q: int, k_max: int) -> list[FamilyMember]:
    if abs(Q) != 1:
        raise HypothesisViolated(f"|Q| must be 1, got Q = {Q}")
    if P * P + 4 * Q <= 0:
        raise HypothesisViolated(f"P^2 + 4Q = {P * P + 4 * Q} must be positive")
    try:
        seq = make_sequence(P, Q, 2, P)
    except DegenerateSequence as exc:
        raise HypothesisViolated(str(exc)) from exc
    us = [term(seq, j) for j in range(4 * k_max + 1)]
    for j in range(2 * k_max + 1):
        if us[2 * j] != us[j] ** 2 - 2 * (-Q) ** j:
            raise AssertionError(f"U_2n = U_n^2 - 2(-Q)^n fails at n = {j}")
    out = []
    for k in range(1, k_max + 1):
        x = us[2 * k]
        sol = Solution(4 * k, 0, x, 2, x * x)
        ok = x >= 2 and verify_solution(seq, sol)
        out.append(FamilyMember(k, sol, ok, exceptional_condition(seq, 4 * k, 0)))
    return out
