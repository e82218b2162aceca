from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rpl.quadratic import QuadElem, is_square

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
discs = st.sampled_from([2, 3, 5, 8, 13])


@given(rationals, rationals, rationals, rationals, discs)
def test_norm_is_multiplicative(a, b, c, d, D):
    x, y = QuadElem(a, b, D), QuadElem(c, d, D)
    xy = x * y
    assert (xy * xy.conj()).is_rational()
    assert xy.norm() == x.norm() * y.norm()


@given(rationals, rationals, discs)
def test_inverse(a, b, D):
    x = QuadElem(a, b, D)
    if not x:
        with pytest.raises(ZeroDivisionError):
            x.inverse()
        return
    assert x * x.inverse() == 1
    assert (x / x) == 1


@given(rationals, rationals, rationals, rationals, discs)
def test_field_laws(a, b, c, d, D):
    x, y = QuadElem(a, b, D), QuadElem(c, d, D)
    assert x + y - y == x
    assert x * (y + 1) == x * y + x
    assert (x - y).conj() == x.conj() - y.conj()


@given(rationals, rationals, discs)
def test_sign_matches_float(a, b, D):
    x = QuadElem(a, b, D)
    f = float(x)
    if abs(f) > 1e-9:
        assert x.sign() == (1 if f > 0 else -1)


def test_sqrt_and_minimal_polynomial():
    r5 = QuadElem.sqrt(5)
    alpha = (1 + r5) / 2
    assert alpha * alpha == alpha + 1
    assert alpha.minimal_polynomial() == (1, -1, -1)
    assert QuadElem(Fraction(3, 2)).minimal_polynomial() == (2, -3)
    assert alpha.trace() == 1 and alpha.norm() == -1


def test_negative_powers():
    alpha = (1 + QuadElem.sqrt(5)) / 2
    assert alpha ** -3 * alpha ** 3 == 1
    assert alpha ** 0 == 1


def test_square_discriminant_folds_to_rational():
    x = QuadElem(1, 1, 9)
    assert x.is_rational() and x == 4


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        QuadElem(0, 1, 2) + QuadElem(0, 1, 3)


def test_is_square():
    assert is_square(0) and is_square(49) and not is_square(50) and not is_square(-4)
