"""
Tests for Macdonald operators and the Gram-Schmidt construction of J_lam.
"""

import pytest

from src.coeff.ratqt import Q, T
from src.hecke.operators import HeckeContext, _t_monomial, apply_T
from src.macdonald import oracle
from src.macdonald.operators import (
    A_tilde,
    _cleared,
    apply_macdonald_genfun,
    apply_macdonald_r,
    eigenvalue_a,
)
from src.macdonald.oracle import (
    gram_schmidt_J,
    linear_extension,
    macdonald_J,
    macdonald_poly,
    to_macdonald_basis,
)
from src.poly.mpoly import MPoly
from src.symfun.bases import Basis, _m_poly, monomial_symmetric, scalar_product_qt
from src.symfun.partitions import Partition
from src.utils.cache import clear_caches


def P(*parts):
    return Partition(parts)


def test_small_J_values():
    assert gram_schmidt_J(P(1), 1).coeffs == {P(1): 1 - T}
    j2 = macdonald_J(P(2), 2)
    assert j2.coefficient(P(2)) == (1 - T) * (1 - Q * T)
    assert j2.coefficient(P(1, 1)) == (1 + Q) * (1 - T) ** 2
    assert macdonald_J(P(1, 1), 2).coeffs == {P(1, 1): (1 - T) * (1 - T**2)}


def test_gram_schmidt_needs_enough_variables():
    with pytest.raises(ValueError):
        gram_schmidt_J(P(2), 1)
    with pytest.raises(ValueError):
        macdonald_J(P(1, 1, 1), 2)


def test_linear_extension_independence():
    lam = P(2, 1, 1)
    assert gram_schmidt_J(lam, 4, "reverse-lex") == gram_schmidt_J(lam, 4, "lex-conjugate")
    assert linear_extension(3) == [P(1, 1, 1), P(2, 1), P(3)]
    with pytest.raises(ValueError):
        linear_extension(3, "bruhat")


def test_orthogonality():
    a = gram_schmidt_J(P(2), 2)
    b = gram_schmidt_J(P(1, 1), 2)
    assert scalar_product_qt(a, b) == 0


def test_order_zero_is_identity():
    f = monomial_symmetric(P(2, 1), 3)
    assert apply_macdonald_r(f, 0) == f
    with pytest.raises(ValueError):
        apply_macdonald_r(f, 4)
    with pytest.raises(ValueError):
        apply_macdonald_r(MPoly.variable(3, 1), 1)


def test_eigenvalues():
    for lam, n in ((P(1), 1), (P(2), 2), (P(2, 1), 3)):
        J = macdonald_poly(lam, n)
        genfun = apply_macdonald_genfun(J)
        for r, a in enumerate(eigenvalue_a(lam, n)):
            assert genfun[r] == J.scale(a)


def test_restricted_operator():
    f = MPoly.variable(2, 1) + MPoly.variable(2, 2)
    assert apply_macdonald_r(f, 1, variables=[1]) == MPoly.variable(2, 1).scale(Q) + MPoly.variable(2, 2)


def test_a_tilde_cleared():
    ctx = HeckeContext(2)
    a = A_tilde([1], ctx)
    x1, x2 = MPoly.variable(2, 1), MPoly.variable(2, 2)
    assert a.numerator() == x1 - x2.scale(T**-1)
    assert a.cleared() == a.numerator()


def test_basis_change():
    f = macdonald_poly(P(2, 1), 3)
    assert to_macdonald_basis(f, Basis.MACDONALD_J).coeffs == {P(2, 1): 1}
    p = to_macdonald_basis(f, Basis.MACDONALD_P)
    assert list(p.coeffs) == [P(2, 1)]


def test_clear_caches_empties_every_memo_table():
    J = macdonald_poly(P(2, 1), 3)
    cleared = A_tilde([1], HeckeContext(2)).cleared()
    shifted = apply_T(MPoly.variable(2, 1), 1)
    assert _m_poly.cache_info().currsize > 0
    assert _cleared.cache_info().currsize > 0
    assert _t_monomial.cache_info().currsize > 0
    assert oracle._tables

    clear_caches()

    assert _m_poly.cache_info().currsize == 0
    assert _cleared.cache_info().currsize == 0
    assert _t_monomial.cache_info().currsize == 0
    assert not oracle._tables
    assert macdonald_poly(P(2, 1), 3) == J
    assert A_tilde([1], HeckeContext(2)).cleared() == cleared
    assert apply_T(MPoly.variable(2, 1), 1) == shifted
