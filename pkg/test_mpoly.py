"""
Tests for sparse polynomials over Q(q,t) and their elementary operators.
"""

import json

import pytest

from src.coeff.ratqt import Q, T
from src.poly.mpoly import (
    InexactDivisionError,
    MPoly,
    apply_shift,
    apply_transposition,
    exact_divide,
    exact_divide_linear,
    is_symmetric,
)
from src.poly.series import ParamPolyResult


def x(i, n=3):
    return MPoly.variable(n, i)


def test_arithmetic_and_degree():
    f = (x(1) + x(2)) ** 2
    assert f == x(1) ** 2 + 2 * x(1) * x(2) + x(2) ** 2
    assert f.degree() == 2
    assert f.coefficient((1, 1, 0)) == 2
    assert (f - f).is_zero()


def test_arity_mismatch():
    with pytest.raises(ValueError):
        x(1, 2) + x(1, 3)


def test_string_form():
    f = MPoly.monomial((2, 1), 1 - T) + MPoly.constant(2, 3)
    assert str(f) == "(1 - t)*x1^2*x2 + (3)"
    assert str(MPoly.zero(2)) == "0"


def test_transposition_is_involution():
    f = x(1) ** 3 * x(3) + Q * x(2) ** 2
    assert apply_transposition(apply_transposition(f, 1), 1) == f
    assert apply_transposition(x(1), 1) == x(2)
    with pytest.raises(ValueError):
        apply_transposition(f, 3)


def test_shift():
    assert apply_shift(x(2) ** 2, 2) == (x(2) ** 2).scale(Q**2)
    assert apply_shift(x(1), 2) == x(1)


def test_exact_division():
    f = x(1) ** 2 - x(2) ** 2
    assert exact_divide(f, 1) == x(1) + x(2)
    g = (x(1) - T * x(3)) * (x(2) + Q)
    assert exact_divide_linear(g, 1, 3, T) == x(2) + Q
    with pytest.raises(InexactDivisionError):
        exact_divide(x(1), 1)


def test_symmetry():
    assert is_symmetric(x(1) + x(2) + x(3))
    assert not is_symmetric(x(1) + x(2))


def test_json_dict():
    f = MPoly.monomial((1, 0), (1 - Q) / (1 + T)) + x(2, 2)
    data = json.loads(json.dumps(f.to_json_dict()))
    assert data["nvars"] == 2
    assert data["terms"][0] == {"exp": [1, 0], "num": "1 - q", "den": "1 + t"}
    assert MPoly.from_json_dict(data) == f


def test_param_result_ignores_trailing_zeros():
    a = ParamPolyResult(2, (x(1, 2), MPoly.zero(2)))
    b = ParamPolyResult(2, (x(1, 2),))
    assert a == b
    assert len(a) == 2
    assert a[5].is_zero()
    s = ParamPolyResult(2, (x(1, 2), x(2, 2)))
    assert s.substitute_sign().evaluate(-1) == s.evaluate(1)
