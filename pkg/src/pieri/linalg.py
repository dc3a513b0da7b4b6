"""
Exact linear solves over Q(q,t) with fraction-free (Bareiss) elimination.
"""

from typing import Sequence

from src.coeff.ratqt import ONE, ZERO, RatQT, Scalar

Matrix = list[list[RatQT]]


class SingularMatrixError(RuntimeError):
    """The system matrix has no inverse over Q(q,t)."""


def _as_matrix(rows: Sequence[Sequence[Scalar]]) -> Matrix:
    out = [[RatQT.coerce(v) for v in row] for row in rows]
    width = len(out[0]) if out else 0
    if any(len(row) != width for row in out):
        raise ValueError("Not all rows are of equal length")
    return out


def bareiss_solve(A: Sequence[Sequence[Scalar]], B: Sequence[Sequence[Scalar]]) -> Matrix:
    """
    Solve A X = B for square A.

    Args:
        A: n x n system matrix (rows)
        B: n x m right-hand sides (rows)

    Returns:
        X as n x m rows

    Raises:
        SingularMatrixError: If A is singular
    """
    a = _as_matrix(A)
    b = _as_matrix(B)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("system matrix must be square")
    if len(b) != n:
        raise ValueError("right-hand side has the wrong number of rows")
    m = len(b[0]) if b else 0
    rows = [a[i] + b[i] for i in range(n)]

    previous = ONE
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if rows[r][k]), None)
        if pivot_row is None:
            raise SingularMatrixError(f"no pivot in column {k}")
        rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
        pivot = rows[k][k]
        for i in range(k + 1, n):
            lead = rows[i][k]
            for j in range(k + 1, n + m):
                rows[i][j] = (pivot * rows[i][j] - lead * rows[k][j]) / previous
            rows[i][k] = ZERO
        previous = pivot

    x: Matrix = [[ZERO] * m for _ in range(n)]
    for i in range(n - 1, -1, -1):
        for c in range(m):
            acc = rows[i][n + c]
            for j in range(i + 1, n):
                if rows[i][j]:
                    acc = acc - rows[i][j] * x[j][c]
            x[i][c] = acc / rows[i][i]
    return x
