from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from oracles import PRESETS, naive_terms
from rpl.errors import DegenerateSequence, ZeroProduct
from rpl.recurrence import (chebyshev_eval, check_nondegenerate, companion_term, exceptional_condition,
                            iterate_terms, lucas_v, make_sequence, term, terms)
from rpl.interval import make_context, quad_iv


@pytest.fixture(params=sorted(PRESETS))
def preset(request):
    return make_sequence(*PRESETS[request.param], name=request.param)


def test_make_sequence_examples():
    fib = make_sequence(1, 1, 0, 1)
    assert fib.D == 5 and fib.a1a2_int == 1
    luc = make_sequence(1, 1, 2, 1)
    assert luc.D == 5 and luc.a1a2_int == -5
    with pytest.raises(DegenerateSequence):
        make_sequence(1, -1, 0, 1)


@pytest.mark.parametrize("params", [(0, 2, 1, 1), (1, 0, 1, 1), (1, 1, 0, 0), (2, -1, 0, 1),
                                    (-1, 1, 0, 1), (0, 1, 0, 1)])
def test_degenerate_inputs_rejected(params):
    with pytest.raises(DegenerateSequence):
        make_sequence(*params)


def test_perfect_square_discriminant_allowed():
    seq = make_sequence(1, 2, 0, 1)  # D = 9, alpha = 2, beta = -1
    assert seq.D == 9 and seq.alpha == 2 and seq.beta == -1
    assert [term(seq, n) for n in range(6)] == naive_terms(1, 2, 0, 1, 5)


def test_binet_data_exact(preset):
    assert preset.alpha + preset.beta == preset.P
    assert preset.alpha * preset.beta == -preset.Q
    assert preset.a1 * preset.a2 == preset.a1a2_int
    assert preset.alpha > abs(preset.beta)


def test_term_examples():
    fib = make_sequence(1, 1, 0, 1)
    assert term(fib, 10) == 55
    assert term(make_sequence(2, 1, 0, 1), 7) == 169
    assert term(fib, 0) == 0 and term(fib, 1) == 1


def test_doubling_matches_iteration(preset):
    ref = naive_terms(*preset.params, 1000)
    assert [term(preset, n) for n in range(0, 1001, 7)] == ref[::7]
    assert terms(preset, 1000) == ref
    it = iterate_terms(preset, 500)
    assert [next(it) for _ in range(5)] == ref[500:505]


def test_companion_identity(preset):
    for n in range(501):
        w, u = companion_term(preset, n), term(preset, n)
        assert w * w - preset.D * u * u == 4 * (-preset.Q) ** n * preset.a1a2_int


def test_companion_examples():
    fib = make_sequence(1, 1, 0, 1)
    assert companion_term(fib, 3) == 4 and companion_term(fib, 0) == 2
    assert companion_term(make_sequence(1, 1, 2, 1), 2) == 5


def test_binet_interval_contains_term(preset):
    for bits in (64, 128, 256):
        ctx = make_context(bits)
        a, b = quad_iv(ctx, preset.alpha), quad_iv(ctx, preset.beta)
        a1, a2 = quad_iv(ctx, preset.a1), quad_iv(ctx, preset.a2)
        for n in (0, 1, 5, 40):
            enc = (a1 * a ** n - a2 * b ** n) / (a - b)
            assert enc.a <= term(preset, n) <= enc.b


@given(st.integers(1, 6), st.sampled_from([1, -1]), st.integers(0, 100))
def test_lucas_type_doubling_identity(P, Q, n):
    if P * P + 4 * Q <= 0 or (P == 1 and Q == -1):
        return
    try:
        seq = make_sequence(P, Q, 2, P)
    except DegenerateSequence:
        return
    assert term(seq, 2 * n) == term(seq, n) ** 2 - 2 * (-Q) ** n
    assert lucas_v(seq, n) == term(seq, n)


def test_check_nondegenerate_reports():
    assert check_nondegenerate(1, 1, 0, 1).ok
    rep = check_nondegenerate(0, 2, 1, 1)
    assert not rep.ok and any("PQ" in c.name for c in rep.failures())
    rep = check_nondegenerate(1, 1, 0, 0)
    assert any("U0" in c.name for c in rep.failures())
    root = [c for c in check_nondegenerate(1, 1, 0, 1).checks if "root of unity" in c.name]
    assert root and root[0].detail


def test_chebyshev():
    assert chebyshev_eval(0, 17) == 2 and chebyshev_eval(1, 5) == 5
    assert chebyshev_eval(2, 3) == 7 and chebyshev_eval(4, 2) == 2
    for x in range(-3, 6):
        for n in range(1, 20):
            assert chebyshev_eval(n + 1, x) == x * chebyshev_eval(n, x) - chebyshev_eval(n - 1, x)


def test_exceptional_condition():
    luc = make_sequence(1, 1, 2, 1)
    fib = make_sequence(1, 1, 0, 1)
    assert exceptional_condition(luc, "even", 0) == "fails"
    assert exceptional_condition(fib, "odd", 3) == "holds"
    assert exceptional_condition(fib, "even", 0) == "holds"  # U_0 = 0
    assert exceptional_condition(luc, 4, 0) == exceptional_condition(luc, "even", 0)
    with pytest.raises(ValueError):
        exceptional_condition(fib, "sideways", 0)


def test_exceptional_condition_zero_product():
    # a1*a2 = 0 is rejected at construction, so build the check directly
    seq = replace(make_sequence(1, 1, 0, 1), a1a2_int=0)
    with pytest.raises(ZeroProduct):
        exceptional_condition(seq, "even", 0)
