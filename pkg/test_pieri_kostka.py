"""
Tests for the Pieri rule, exact linear solves and (q,t)-Kostka tables.
"""

import pytest

from src.coeff.ratqt import Q, T
from src.pieri.kostka import kostka_matrix
from src.pieri.linalg import SingularMatrixError, bareiss_solve
from src.pieri.pieri import (
    leading_column_structure,
    pieri_coefficient,
    pieri_expand,
    pieri_oracle,
    vertical_strips,
)
from src.symfun.partitions import Partition


def P(*parts):
    return Partition(parts)


def test_vertical_strips():
    assert vertical_strips(P(1), 1) == [P(2), P(1, 1)]
    assert vertical_strips(P(2, 1), 2) == [P(3, 2), P(3, 1, 1), P(2, 2, 1), P(2, 1, 1, 1)]
    assert vertical_strips(P(), 0) == [P()]


def test_pieri_coefficients():
    assert pieri_coefficient(P(1), P(2)) == 1
    assert pieri_coefficient(P(1), P(1, 1)) == (1 - Q) * (1 + T) / (1 - Q * T)
    with pytest.raises(ValueError):
        pieri_coefficient(P(1), P(3))
    with pytest.raises(ValueError):
        pieri_coefficient(P(2), P(1, 1))


def test_pieri_matches_multiplication():
    for lam, k, n in ((P(1), 1, 2), (P(1), 2, 3), (P(2), 1, 2)):
        assert pieri_expand(lam, k, n).terms == pieri_oracle(lam, k, n).terms


def test_pieri_drops_long_terms():
    expansion = pieri_expand(P(1), 2, 2)
    assert list(expansion.terms) == [P(2, 1)]


def test_leading_column_structure():
    expansion = pieri_expand(P(1), 2)
    assert expansion.leading() == P(2, 1)
    assert leading_column_structure(expansion)
    with pytest.raises(ValueError):
        leading_column_structure(pieri_expand(P(1, 1), 1))


def test_pieri_text():
    lines = pieri_expand(P(1), 1).to_text().splitlines()
    assert lines[0] == "e_1 P[1] ="
    assert lines[1].split() == ["P[2]", "1"]


def test_bareiss_solve():
    x = bareiss_solve([[2, 1], [1, 1]], [[3], [2]])
    assert x == [[1], [1]]
    y = bareiss_solve([[0, 1], [1, Q]], [[T], [1]])
    assert y == [[1 - Q * T], [T]]
    with pytest.raises(SingularMatrixError):
        bareiss_solve([[1, 2], [2, 4]], [[1], [1]])


def test_kostka_degree_two():
    matrix = kostka_matrix(2)
    assert matrix.partitions == [P(2), P(1, 1)]
    assert matrix.rows() == [[1, Q], [T, 1]]


def test_kostka_degree_zero():
    assert kostka_matrix(0).rows() == [[1]]
    with pytest.raises(ValueError):
        kostka_matrix(-1)


def test_kostka_degree_three():
    matrix = kostka_matrix(3)
    assert matrix.is_integral()
    assert matrix.non_integral() == []
    assert matrix.specialize(0, 0) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert matrix.to_json_dict()["integral"] is True
