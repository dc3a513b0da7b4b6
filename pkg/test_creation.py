"""
Tests for the creation operators and the Rodrigues construction.
"""

import pytest

from src.coeff.ratqt import Q, T
from src.creation.operators import (
    CreationVariant,
    apply_B,
    apply_B1,
    apply_B2,
    d_statistic,
    integrality_check_monomial,
    rodrigues,
)
from src.macdonald.oracle import macdonald_poly
from src.poly.mpoly import MPoly
from src.symfun.partitions import Partition


def x(i):
    return MPoly.variable(2, i)


def test_d_statistic():
    assert d_statistic((), (1, 2, 3)) == 0
    assert d_statistic((2,), (1, 2, 3)) == 1
    assert d_statistic((1, 3), (1, 2, 3)) == 1
    assert d_statistic((2, 3), (1, 2, 3)) == 2
    with pytest.raises(ValueError):
        d_statistic((4,), (1, 2, 3))


def test_B1_and_B2_differ_off_the_symmetric_subspace():
    assert apply_B1(x(1), 1, check_symmetric=False) == (
        (x(1) ** 2).scale(1 - T * Q) + (x(1) * x(2)).scale(Q * (1 - T))
    )
    assert apply_B2(x(1), 1) == (
        (x(1) ** 2).scale(1 - T * Q)
        + (x(1) * x(2)).scale((1 + Q) * (1 - T))
        - (x(2) ** 2).scale(T * Q * (1 - T))
    )
    assert apply_B1(x(2), 1, check_symmetric=False) == (
        (x(1) * x(2)).scale(1 - T) + (x(2) ** 2).scale(1 - T * Q)
    )
    assert apply_B2(x(2), 1) == (x(2) ** 2).scale(1 - T**2 * Q)


def test_B1_rejects_non_symmetric_input():
    with pytest.raises(ValueError):
        apply_B1(x(1), 1)


@pytest.mark.parametrize("variant", list(CreationVariant))
def test_creation_property(variant):
    J1 = macdonald_poly(Partition((1,)), 2)
    assert apply_B(MPoly.constant(2, 1), 1, variant) == J1
    assert apply_B(J1, 1, variant) == macdonald_poly(Partition((2,)), 2)
    assert apply_B(J1, 2, variant) == macdonald_poly(Partition((2, 1)), 2)


@pytest.mark.parametrize("variant", list(CreationVariant))
def test_rodrigues_matches_gram_schmidt(variant):
    for lam in ((2, 1), (1, 1, 1), (3,)):
        lam = Partition(lam)
        assert rodrigues(lam, 3, variant) == macdonald_poly(lam, 3)


def test_rodrigues_bounds():
    assert rodrigues(Partition(()), 2) == 1
    with pytest.raises(ValueError):
        rodrigues(Partition((1, 1, 1)), 2)
    with pytest.raises(ValueError):
        apply_B(x(1) + x(2), 3, CreationVariant.B3)


def test_monomial_integrality():
    report = integrality_check_monomial(Partition((2, 1)), 3)
    assert report.ok
    assert report.witnesses == []
