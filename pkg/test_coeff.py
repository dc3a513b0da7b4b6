"""
Tests for exact Q(q,t) scalars and the q-series helpers.
"""

from fractions import Fraction

import pytest

from src.coeff.intpoly import IntPolyQT
from src.coeff.qseries import elementary_symmetric, pochhammer, qbinom
from src.coeff.ratqt import ONE, Q, T, ZERO, RatQT


def test_cancellation_is_canonical():
    r = RatQT.parse("(1 - q^2)/(1 - q)")
    assert r == 1 + Q
    assert r.is_integral()
    assert str(r) == "1 + q"


def test_denominator_sign_is_normalized():
    r = RatQT(1, IntPolyQT.parse("1 - q"))
    assert r.den.leading_coefficient() > 0
    assert r == RatQT(-1, IntPolyQT.parse("-1 + q"))


def test_product_formatting():
    assert str((1 - T) * (1 - Q * T)) == "1 - t - q*t + q*t^2"
    assert str(T**-1) == "(1)/(t)"


def test_negative_powers_and_inverse():
    assert T**-1 * T == ONE
    assert (Q * T**2).inverse() == RatQT.monomial(1, -1, -2)


def test_mixed_scalars():
    assert ONE / 2 + Fraction(1, 2) == 1
    assert (Q + 0) == Q
    assert ZERO * Q == 0


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        RatQT(1, 0)


def test_bool_is_rejected():
    with pytest.raises(TypeError):
        RatQT.coerce(True)


def test_evaluate():
    r = (1 - Q) / (1 - T)
    assert r.evaluate(2, 3) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        r.evaluate(2, 1)


def test_parse_and_strings():
    p = IntPolyQT.parse("1 - q*t + q^2*t^3")
    assert str(p) == "1 - q*t + q^2*t^3"
    r = RatQT.from_strings("1 - t", "1 + q*t")
    assert r.to_strings() == ("1 - t", "1 + q*t")
    with pytest.raises(ValueError):
        IntPolyQT.parse("1 + x")


def test_qbinom_values():
    assert qbinom(2, 1, T) == 1 + T
    assert qbinom(3, 1, T) == 1 + T + T**2
    assert qbinom(4, 2, T) == 1 + T + 2 * T**2 + T**3 + T**4
    assert qbinom(5, 0, T) == 1
    with pytest.raises(ValueError):
        qbinom(2, 3, T)


def test_pochhammer():
    a, b = Q**-1, T**-1
    assert pochhammer(a, b, 0) == ONE
    for n in range(4):
        assert pochhammer(a, b, n + 1) == pochhammer(a, b, n) * (1 - b**n * a)
    with pytest.raises(ValueError):
        pochhammer(a, b, -1)


def test_elementary_symmetric():
    assert elementary_symmetric([1, T, T**2], 2) == T + T**2 + T**3
    assert elementary_symmetric([1, T], 0) == 1
    assert elementary_symmetric([1, T], 3) == 0
