"""Factorization with a time budget: trial division, then Pollard-Brent rho.

Primality of cofactors is decided by deterministic Miller-Rabin below
3.3e24 and by Baillie-PSW above (no known counterexample).
"""
from __future__ import annotations

import math
import random
import time
from functools import lru_cache

from .errors import FactorizationTimeout

TRIAL_BOUND = 10**6
DEFAULT_BUDGET_S = 2.0

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


@lru_cache(maxsize=4)
def primes_upto(n: int) -> tuple[int, ...]:
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytes(len(range(p * p, n + 1, p)))
    return tuple(i for i, v in enumerate(sieve) if v)


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
        if D == 13 and math.isqrt(n) ** 2 == n:
            return False
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def half(v):
        return (v + n if v % 2 else v) // 2 % n

    # binary ladder for U_d, V_d, Q^d
    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < _MR_DETERMINISTIC_LIMIT:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


def _check(deadline: float | None):
    if deadline is not None and time.monotonic() > deadline:
        raise TimeoutError


def pollard_brent(n: int, deadline: float | None = None, seed: int = 1) -> int:
    """A nontrivial factor of the odd composite ``n``."""
    rng = random.Random(seed ^ n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
            _check(deadline)
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int, budget_s: float | None = DEFAULT_BUDGET_S,
              trial_bound: int = TRIAL_BOUND) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as ``{prime: exponent}``.

    Raises FactorizationTimeout (carrying the partial result) once
    ``budget_s`` seconds have elapsed; ``None`` means no budget.
    """
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    deadline = None if budget_s is None else time.monotonic() + budget_s
    found: dict[int, int] = {}
    rest = n
    stack: list[int] | None = None

    def add(p, k=1):
        found[p] = found.get(p, 0) + k

    try:
        for i, p in enumerate(primes_upto(trial_bound)):
            if p * p > rest:
                break
            if rest % p == 0:
                k = 0
                while rest % p == 0:
                    rest //= p
                    k += 1
                add(p, k)
            if i % 4096 == 4095:
                _check(deadline)
                if is_prime(rest):
                    break
        stack = [rest] if rest > 1 else []
        while stack:
            m = stack[-1]
            if is_prime(m):
                stack.pop()
                add(m)
                continue
            r = math.isqrt(m)
            if r * r == m:
                stack[-1:] = [r, r]
                continue
            f = pollard_brent(m, deadline)
            stack[-1:] = [f, m // f]
    except TimeoutError:
        cofactor = rest if stack is None else math.prod(stack)
        raise FactorizationTimeout(n, dict(sorted(found.items())), cofactor) from None
    return dict(sorted(found.items()))


def radical(k: int, budget_s: float | None = DEFAULT_BUDGET_S) -> int:
    """Product of the distinct primes dividing ``k``."""
    if k < 1:
        raise ValueError("radical needs k >= 1")
    return math.prod(factorize(k, budget_s))
