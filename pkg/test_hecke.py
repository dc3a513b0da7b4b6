"""
Tests for the affine Hecke generators and the Dunkl-Cherednik operators.
"""

import pytest

from src.coeff.ratqt import Q, T
from src.hecke.operators import (
    HeckeContext,
    IndexSet,
    apply_omega,
    apply_s0,
    apply_T,
    apply_T0,
    apply_T_inv,
    apply_Y,
    apply_YJu,
    apply_YJu_as_u_series,
    omega_by_composition,
    s0_by_composition,
)
from src.poly.mpoly import MPoly


def x(i, n=2):
    return MPoly.variable(n, i)


def test_T_on_linear_monomials():
    assert apply_T(x(1), 1) == x(2).scale(T**-1)
    assert apply_T(x(2), 1) == x(1) + x(2).scale(1 - T**-1)
    assert apply_T(MPoly.constant(2, 1), 1) == 1


def test_T0_on_last_variable():
    assert apply_T0(x(2)) == x(1).scale(T**-1 * Q**-1)


def test_quadratic_relation():
    ctx = HeckeContext(3)
    for f in ctx.monomials_up_to(3):
        for i in (1, 2):
            Tf = apply_T(f, i)
            assert apply_T(Tf, i) == Tf.scale(1 - T**-1) + f.scale(T**-1)


def test_inverse_on_both_sides():
    ctx = HeckeContext(3)
    for f in ctx.monomials(2):
        for i in (0, 1, 2):
            forward = apply_T0(f) if i == 0 else apply_T(f, i)
            assert apply_T_inv(forward, i) == f
            back = apply_T_inv(f, i)
            assert (apply_T0(back) if i == 0 else apply_T(back, i)) == f


def test_omega_and_s0_match_compositions():
    ctx = HeckeContext(3)
    for f in ctx.monomials_up_to(3):
        assert apply_s0(f) == s0_by_composition(f)
        assert apply_omega(f) == omega_by_composition(f)
        assert apply_omega(apply_omega(f), -1) == f


def test_Y_fixes_constants():
    for n in (1, 2, 3):
        one = MPoly.constant(n, 1)
        for i in range(1, n + 1):
            assert apply_Y(one, i) == one


def test_single_variable_Y_is_q_shift():
    x1 = MPoly.variable(1, 1)
    assert apply_Y(x1 ** 2, 1) == (x1 ** 2).scale(Q**2)


def test_Y_commute():
    ctx = HeckeContext(3)
    for f in ctx.monomials(2):
        assert apply_Y(apply_Y(f, 1), 3) == apply_Y(apply_Y(f, 3), 1)


def test_u_series_matches_evaluation():
    f = x(1, 3) * x(2, 3) + x(3, 3)
    J = IndexSet.of(3, [1, 3])
    series = apply_YJu_as_u_series(f, J)
    assert len(series) == 3
    u = T * Q
    assert series.evaluate(u) == apply_YJu(f, J, u)


def test_index_errors():
    with pytest.raises(ValueError):
        apply_T(x(1), 0)
    with pytest.raises(ValueError):
        apply_T0(MPoly.variable(1, 1))
    with pytest.raises(ValueError):
        apply_Y(x(1), 3)
    with pytest.raises(ValueError):
        IndexSet.of(2, [3])
