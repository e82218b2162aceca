"""Integer roots and perfect-power detection for arbitrary-size integers."""
from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class PowerRepr:
    base: int
    exponent: int

    def value(self) -> int:
        return self.base ** self.exponent


def int_root(s: int, q: int) -> tuple[int, bool]:
    """Return ``(floor(s ** (1/q)), is_exact)``."""
    if s < 1 or q < 2:
        raise ValueError("int_root needs s >= 1 and q >= 2")
    if s.bit_length() <= 52:
        r = int(round(s ** (1.0 / q)))
    else:
        # float seed from the logarithm, then Newton from above
        lg = math.log(s) / q
        if lg < 700:
            r = int(math.exp(lg)) + 1
        else:
            r = 1 << (-(-s.bit_length() // q))
        q1 = q - 1
        r = (q1 * r + s // r ** q1) // q
        while True:
            nxt = (q1 * r + s // r ** q1) // q
            if nxt >= r:
                break
            r = nxt
    # certified correction: r^q <= s < (r+1)^q
    while r > 1 and r ** q > s:
        r -= 1
    while (r + 1) ** q <= s:
        r += 1
    return r, r ** q == s


_SMALL_PRIMES = [p for p in range(2, 512) if all(p % d for d in range(2, math.isqrt(p) + 1))]

# squares mod 64, 63, 65 and 11 reject ~99.4% of non-squares cheaply
_SQ_MODS = {m: frozenset(k * k % m for k in range(m)) for m in (64, 63, 65, 11)}


def _maybe_square(s: int) -> bool:
    return all(s % m in res for m, res in _SQ_MODS.items())


def _prime_root(s: int, p: int) -> int | None:
    if p == 2 and not _maybe_square(s):
        return None
    r, exact = int_root(s, p)
    return r if exact else None


def _primes_upto(n: int):
    for p in _SMALL_PRIMES:
        if p > n:
            return
        yield p
    p = _SMALL_PRIMES[-1] + 2
    while p <= n:
        if all(p % d for d in range(3, math.isqrt(p) + 1, 2)):
            yield p
        p += 2


def maximal_power(s: int) -> PowerRepr:
    """Write ``s = b^e`` with ``e`` maximal (``e = 1`` if s is not a power)."""
    if s < 2:
        raise ValueError("s must be >= 2")
    base, exp = s, 1
    for p in _primes_upto(s.bit_length()):
        if (1 << p) > base:
            break
        while True:
            r = _prime_root(base, p)
            if r is None:
                break
            base, exp = r, exp * p
    return PowerRepr(base, exp)


def perfect_power(s: int) -> list[PowerRepr]:
    """All ``s = x^q`` with ``x, q >= 2``, exponents descending.

    The first entry (if any) is the canonical, maximal-exponent form.
    """
    if s < 4:
        raise ValueError("perfect_power needs s >= 4 (x, q >= 2 forces s >= 4)")
    canon = maximal_power(s)
    e = canon.exponent
    out = []
    for k in range(e, 1, -1):
        if e % k == 0:
            out.append(PowerRepr(canon.base ** (e // k), k))
    return out


def is_power_of(s: int, x: int) -> int | None:
    """The exponent ``q >= 2`` with ``x^q == s``, or None."""
    if x < 2:
        raise ValueError("x must be >= 2")
    if s < x * x:
        return None
    q = round(math.log(s) / math.log(x))
    for cand in (q - 1, q, q + 1):
        if cand >= 2 and x ** cand == s:
            return cand
    return None
