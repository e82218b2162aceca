import json
import math
from fractions import Fraction

import pytest

from oracles import GAP_BOUND_REGRESSION, PRESETS, LOG_POWER_INVERSION, SEARCH_BOUND_REGRESSION
from rpl.bounds import (MatveevInput, derive_constants, gap_bound, height_quadratic,
                        invert_log_power, matveev_bound, search_bound)
from rpl.errors import HypothesisViolated, InvalidInput, UnsupportedSequence, ZeroInput
from rpl.quadratic import QuadElem
from rpl.recurrence import make_sequence


def _seq(name):
    return make_sequence(*PRESETS[name], name=name)


def _near(interval, value, rel=1e-4):
    return abs(interval.mid - value) <= rel * abs(value)


def test_heights():
    alpha = (1 + QuadElem.sqrt(5)) / 2
    h = height_quadratic(alpha)
    assert _near(h, math.log((1 + 5 ** 0.5) / 2) / 2)
    assert _near(height_quadratic(QuadElem(Fraction(3, 2))), math.log(3), 1e-12)
    assert height_quadratic(QuadElem(1)).hi == 0
    with pytest.raises(ZeroInput):
        height_quadratic(QuadElem(0))


def test_height_of_conjugate_pair_agrees():
    x = QuadElem(Fraction(2, 3), Fraction(1, 5), 7)
    assert height_quadratic(x).contains(height_quadratic(x.conj()).lo) or \
        height_quadratic(x.conj()).contains(height_quadratic(x).lo)


def test_matveev_floor_and_validation():
    floor = matveev_bound(MatveevInput(3, 2, 1, ("0.16", "0.16", "0.16")))
    larger = matveev_bound(MatveevInput(3, 2, 1, ("0.16", "0.16", "0.17")))
    assert floor.hi < larger.lo
    with pytest.raises(InvalidInput):
        MatveevInput(3, 2, 10, (1, 1, "0.15"))
    with pytest.raises(InvalidInput):
        MatveevInput(3, 2, Fraction(1, 2), (1, 1, 1))
    with pytest.raises(InvalidInput):
        MatveevInput(2, 2, 10, (1, 1, 1))


def test_fibonacci_trace_values():
    b = derive_constants(_seq("fibonacci"))
    assert _near(b.c0, 2 / 5 ** 0.5)
    assert _near(b.c1, 1.78885)
    assert _near(b.d1, 0.962424)
    assert _near(b.d2, 1.20856)
    assert _near(b.c4, 2.88084)
    assert _near(b.c2, 1.93689e13)
    assert _near(b.C1, 1.58547e30)
    assert b.C2 == b["C2"]


def test_trace_relations_and_order():
    b = derive_constants(_seq("pell"))
    assert _near(b.c0, 2 / 8 ** 0.5)
    assert b.c1.lo <= 2 * b.c0.hi and 2 * b.c0.lo <= b.c1.hi
    names = b.names()
    for earlier, later in [("c0", "c1"), ("c4", "C2"), ("c2", "c5"), ("c12", "C1")]:
        assert names.index(earlier) < names.index(later)
    assert all(s.interval.relative_width() < 1e-12 for s in b.trace)
    doc = json.loads(b.dumps())
    assert set(doc[0]) == {"name", "formula", "lo", "hi", "precision_bits"}


def test_equal_a_coefficients_give_four():
    # |a1| = |a2| for Fibonacci, so both c4 expressions use log 4
    b = derive_constants(_seq("fibonacci"))
    expected = max(math.log(4) / math.log((1 + 5 ** 0.5) / 2),
                   math.log(4) / math.log(((1 + 5 ** 0.5) / 2) / ((5 ** 0.5 - 1) / 2)))
    assert _near(b.c4, expected, 1e-12)


@pytest.mark.parametrize("key", sorted(SEARCH_BOUND_REGRESSION))
def test_search_bound_regression(key):
    name, x = key
    assert search_bound(_seq(name), x) == SEARCH_BOUND_REGRESSION[key]


def test_search_bound_monotone_in_x():
    seq = _seq("lucas")
    values = [search_bound(seq, x) for x in (2, 3, 5, 10, 100, 10**6)]
    assert values == sorted(values)


def test_gap_bound():
    seq = _seq("fibonacci")
    assert gap_bound(seq, 2, 2) == GAP_BOUND_REGRESSION[("fibonacci", 2, 2)]
    grid = [[gap_bound(seq, x, q) for q in (2, 3, 7)] for x in (2, 5, 30)]
    assert all(row == sorted(row) for row in grid)
    assert all(list(col) == sorted(col) for col in zip(*grid))
    with pytest.raises(InvalidInput):
        gap_bound(seq, 2, 1)
    with pytest.raises(InvalidInput):
        search_bound(seq, 1)


def test_square_discriminant_unsupported():
    with pytest.raises(UnsupportedSequence):
        derive_constants(make_sequence(1, 2, 0, 1))


def test_invert_log_power():
    for (m, T), ref in LOG_POWER_INVERSION.items():
        v = invert_log_power(m, T)
        assert v >= float(ref) and v - float(ref) < 1e-9
    # the admissibility floor (4m^2)^m is 4 for m = 1 and 256 for m = 2
    with pytest.raises(HypothesisViolated):
        invert_log_power(1, 4)
    assert invert_log_power(1, 16) > 0
    with pytest.raises(HypothesisViolated):
        invert_log_power(2, 256)


def test_invert_log_power_brute_force_small():
    for x in range(2, 201):
        T = max(17.0, x / math.log(x) * 1.0000001)
        assert x < invert_log_power(1, T)
