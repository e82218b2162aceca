import math

import pytest

from oracles import PRESETS, QUALITY_FIB_1_1, QUALITY_FIB_3_1
from rpl.abclab import (closed_form_y, estimate_lower_constants, scan_quality, triple,
                        xy_pair, y_envelope)
from rpl.errors import FactorizationTimeout, ZeroEncountered, ZeroTerm
from rpl.recurrence import make_sequence

FIB = make_sequence(1, 1, 0, 1)
PELL = make_sequence(2, 1, 0, 1)


def test_xy_examples():
    r = xy_pair(FIB, 3, 1)
    assert (r.X, r.S, r.Y, r.d) == (5, 3, -20, 5)
    assert closed_form_y(FIB, 3, 1) == -20
    r = xy_pair(PELL, 2, 0)
    assert (r.X, r.S, r.Y, r.d) == (8, 2, 32, 32)
    with pytest.raises(ValueError):
        xy_pair(FIB, 1, 2)


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_diagonal_identity(name):
    seq = make_sequence(*PRESETS[name])
    for n in range(60):
        assert xy_pair(seq, n, n).Y == 16 * (-seq.Q) ** n * seq.a1a2_int


def test_identity_on_square_discriminant():
    seq = make_sequence(1, 2, 0, 1)
    for n in range(30):
        for m in range(n + 1):
            xy_pair(seq, n, m)


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_y_envelope_for_unit_q(name):
    seq = make_sequence(*PRESETS[name])
    for n in range(0, 120, 3):
        for m in range(0, n + 1, 2):
            env = y_envelope(seq, n, m)
            assert env.lo <= abs(xy_pair(seq, n, m).Y) <= env.hi


def test_triple_examples():
    t = triple(FIB, 3, 1)
    assert (t.A, t.B, t.C, t.rad, t.d, t.residual_gcd) == (-4, 9, 5, 30, 5, 1)
    assert t.reduced and t.complete_factorization and t.check()
    t = triple(FIB, 1, 1)
    assert (t.A, t.B, t.C, t.rad) == (-4, 5, 1, 10)
    assert abs(t.quality - float(QUALITY_FIB_1_1)) < 1e-12
    with pytest.raises(ZeroTerm):
        triple(FIB, 0, 0)


@pytest.mark.parametrize("params", [(2, 1, 0, 1), (3, 1, 5, -7), (4, 3, 1, 1)])
def test_division_by_d_already_gives_coprime_triple(params):
    # gcd(B, C) = 1 by the choice of d, and A = C - B, so no residual factor survives
    seq = make_sequence(*params)
    for n in range(30):
        for m in range(n + 1):
            try:
                t = triple(seq, n, m)
                raw = triple(seq, n, m, enforce_coprime=False)
            except ZeroTerm:
                continue
            assert t.check() and t.reduced and t.residual_gcd == 1
            assert raw == t


def test_triple_timeout_carries_partial():
    with pytest.raises(FactorizationTimeout) as info:
        triple(FIB, 1500, 700, budget_s=1e-6)
    partial = info.value.payload
    assert partial.check() and not partial.complete_factorization
    relaxed = triple(FIB, 1500, 700, budget_s=1e-6, strict=False)
    assert relaxed == partial


def test_scan_quality_report():
    rep = scan_quality(FIB, 10)
    assert rep.pairs_scanned == 66 and rep.zero_pairs == [(0, 0)]
    assert "conjecture" in rep.note
    keys = [(-t.quality, t.n, t.m) for t in rep.triples]
    assert keys == sorted(keys)
    assert any((t.n, t.m) == (3, 1) and abs(t.quality - float(QUALITY_FIB_3_1)) < 1e-12 for t in rep.triples)
    assert all(t.check() for t in rep.triples)
    assert len(scan_quality(FIB, 10, top=5).triples) == 5
    counted = scan_quality(FIB, 10, epsilon=0.25)
    assert counted.exceeding == sum(t.quality > 1.25 for t in rep.triples) > 0
    assert rep.exceeding is None
    empty = scan_quality(FIB, 0)
    assert empty.triples == [] and empty.pairs_scanned == 1


def test_scan_quality_parallel_is_deterministic():
    assert scan_quality(PELL, 25, workers=3).triples == scan_quality(PELL, 25).triples


def test_estimate_lower_constants():
    est = estimate_lower_constants(FIB, 5, 200)
    assert est.d4_emp > 0 and est.flag == "NON-RIGOROUS" and not est.rigorous
    assert est.d3_emp == 5 and math.isfinite(est.d5_emp) and est.d5_emp > 0
    prev = None
    for n_max in (20, 60, 120, 200):
        d4 = estimate_lower_constants(FIB, 5, n_max).d4_emp
        assert prev is None or d4 <= prev
        prev = d4


def test_estimate_reports_zero_witness():
    seq = make_sequence(3, 1, 1, -1)  # U_1 + U_0 = 0
    with pytest.raises(ZeroEncountered) as info:
        estimate_lower_constants(seq, 0, 10)
    assert (info.value.n, info.value.m) == (1, 0)
