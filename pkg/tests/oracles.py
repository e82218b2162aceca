"""Independent reference implementations and frozen reference values.

Nothing here imports the package: the naive versions share no code with
the library, so agreement is evidence rather than tautology.
"""
from __future__ import annotations

PRESETS = {"fibonacci": (1, 1, 0, 1), "pell": (2, 1, 0, 1), "lucas": (1, 1, 2, 1)}


def naive_terms(P, Q, U0, U1, n_max):
    out = [U0, U1]
    while len(out) <= n_max:
        out.append(P * out[-1] + Q * out[-2])
    return out[: n_max + 1]


def naive_root(s, q):
    lo, hi = 1, 1 << (s.bit_length() // q + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** q <= s:
            lo = mid
        else:
            hi = mid - 1
    return lo


def naive_powers(s):
    """All (x, q), x >= 2, q >= 2 with x^q = s, by bisection for every q."""
    out = []
    for q in range(2, s.bit_length() + 1):
        r = naive_root(s, q)
        if r >= 2 and r ** q == s:
            out.append((r, q))
    return out


def naive_solutions(params, n_max):
    U = naive_terms(*params, n_max)
    sols = set()
    for n in range(n_max + 1):
        for m in range(n + 1):
            s = U[n] + U[m]
            if s >= 4:
                for x, q in naive_powers(s):
                    sols.add((n, m, x, q))
    return sols


def naive_power_table(limit, q_max=20):
    """s -> {(x, q)} for every x^q <= limit, by a double loop over x and q."""
    table = {}
    x = 2
    while x * x <= limit:
        for q in range(2, q_max + 1):
            v = x ** q
            if v > limit:
                break
            table.setdefault(v, set()).add((x, q))
        x += 1
    return table


# frozen before the library was built (naive double loop, n <= 50)
FROZEN_SOLUTIONS_50 = {
    "fibonacci": {(3, 3, 2, 2), (4, 1, 2, 2), (4, 2, 2, 2), (5, 4, 2, 3), (6, 0, 2, 3),
                  (6, 1, 3, 2), (6, 2, 3, 2), (6, 6, 4, 2), (6, 6, 2, 4), (7, 4, 4, 2),
                  (7, 4, 2, 4), (9, 3, 6, 2), (11, 10, 12, 2), (12, 0, 12, 2), (16, 7, 10, 3),
                  (17, 4, 40, 2), (36, 12, 3864, 2)},
    "pell": {(2, 2, 2, 2), (7, 0, 13, 2)},
    "lucas": {(0, 0, 2, 2), (2, 1, 2, 2), (3, 3, 2, 3), (4, 0, 3, 2), (4, 1, 2, 3), (6, 4, 5, 2),
              (6, 6, 6, 2), (7, 2, 2, 5), (7, 4, 6, 2), (8, 0, 7, 2), (10, 0, 5, 3),
              (12, 0, 18, 2), (16, 0, 47, 2), (17, 7, 60, 2), (20, 0, 123, 2), (24, 0, 322, 2),
              (28, 0, 843, 2), (32, 0, 2207, 2), (36, 0, 5778, 2), (40, 0, 15127, 2),
              (44, 0, 39603, 2), (48, 0, 103682, 2)},
}

# 1.4 * 30^6 * 3^4.5 * 2^2 * (1 + log 2) * (1 + log 10), evaluated at 50 digits
MATVEEV_REFERENCE = "3202653318427.3839740067819059419185237328311471335"

QUALITY_FIB_3_1 = "0.64601501494230895035749710873721598"   # log 9 / log 30
QUALITY_FIB_1_1 = "0.69897000433601880"                      # log 5 / log 10
LOG_POWER_INVERSION = {(1, 17): "96.3292536979", (2, 257): "31654.4282670428"}

# regression values of the certified search bound (not ground truth)
SEARCH_BOUND_REGRESSION = {
    ("fibonacci", 2): 365981038316601796914221220901,
    ("fibonacci", 10): 44567625443143033508573923195905,
    ("pell", 2): 1670620279988048889347970886300,
    ("lucas", 2): 29693816889843121753297019700,
}
GAP_BOUND_REGRESSION = {("fibonacci", 2, 2): 9305832531119}
