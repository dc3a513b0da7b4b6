"""
Tests for partitions and the classical symmetric-function bases.
"""

from fractions import Fraction

import pytest

from src.coeff.ratqt import Q, T
from src.poly.mpoly import MPoly
from src.symfun.bases import (
    Basis,
    SymExpansion,
    elementary,
    expand_basis,
    monomial_symmetric,
    power_sum,
    qt_weight,
    to_basis,
)
from src.symfun.partitions import (
    Partition,
    arm_leg,
    c_lambda,
    dominance_leq,
    partitions_of,
    z_lambda,
)


def test_partition_parse():
    assert Partition.parse("2,1") == (2, 1)
    assert Partition.parse("") == ()
    assert Partition.parse(" 3, 3 ").size == 6
    with pytest.raises(ValueError):
        Partition.parse("1,2")
    with pytest.raises(ValueError):
        Partition.parse("2,x")
    with pytest.raises(ValueError):
        Partition.parse("2,0")


def test_partition_shape():
    lam = Partition((3, 1))
    assert lam.conjugate() == (2, 1, 1)
    assert lam.padded(4) == (3, 1, 0, 0)
    assert lam.add_column(3) == (4, 2, 1)
    assert len(lam.cells()) == 4
    assert arm_leg(lam, (1, 1)) == (2, 1)
    with pytest.raises(ValueError):
        arm_leg(lam, (2, 2))


def test_partitions_of():
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions_of(0)) == [()]
    assert list(partitions_of(4, max_length=2)) == [(4,), (3, 1), (2, 2)]


def test_dominance():
    assert dominance_leq(Partition((2, 2)), Partition((3, 1))) is True
    assert dominance_leq(Partition((3, 1)), Partition((2, 2))) is False
    assert dominance_leq(Partition((3, 1, 1, 1)), Partition((2, 2, 2))) is None
    assert dominance_leq(Partition((2,)), Partition((2, 1))) is None


def test_hook_constants():
    assert z_lambda(Partition((2, 1, 1))) == 4
    assert c_lambda(Partition((1,))) == 1 - T
    assert c_lambda(Partition((2,))) == (1 - Q * T) * (1 - T)
    assert c_lambda(Partition((1, 1))) == (1 - T**2) * (1 - T)
    assert qt_weight(Partition((1,))) == (1 - Q) / (1 - T)


def test_monomial_in_power_sums():
    m11 = to_basis(monomial_symmetric(Partition((1, 1)), 2), Basis.P)
    assert m11.coefficient(Partition((1, 1))) == Fraction(1, 2)
    assert m11.coefficient(Partition((2,))) == Fraction(-1, 2)


def test_elementary_is_a_schur_function():
    s = to_basis(elementary(2, 3), Basis.SCHUR)
    assert [lam for lam, _ in s.items()] == [Partition((1, 1))]
    assert s.coefficient(Partition((1, 1))) == 1


def test_expand_back_to_polynomial():
    f = power_sum(Partition((2, 1)), 3)
    assert expand_basis(to_basis(f, Basis.E)) == f
    assert elementary(4, 3).is_zero()


def test_non_symmetric_input_rejected():
    f = monomial_symmetric(Partition((1,)), 2) + power_sum(Partition((1,)), 2)
    assert to_basis(f, Basis.M).coefficient(Partition((1,))) == 2
    with pytest.raises(ValueError):
        to_basis(MPoly.variable(2, 1), Basis.M)


def test_expansion_text():
    e = SymExpansion(Basis.M, 2, {Partition((2,)): 1 - T, Partition((1, 1)): Q})
    assert e.to_text().splitlines() == ["m[2]    1 - t", "m[1,1]  q"]
