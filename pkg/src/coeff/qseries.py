"""
q-Pochhammer symbols, Gaussian binomials and elementary symmetric values.
"""

from itertools import combinations
from typing import Sequence

from src.coeff.ratqt import ONE, ZERO, RatQT, Scalar


def pochhammer(a: Scalar, base: Scalar, n: int) -> RatQT:
    """
    (a; base)_n = (1 - a)(1 - base*a)...(1 - base^(n-1)*a).

    Args:
        a: Shifted argument
        base: Ratio between consecutive factors
        n: Number of factors (n = 0 gives 1)
    """
    if n < 0:
        raise ValueError(f"pochhammer length must be non-negative, got {n}")
    a = RatQT.coerce(a)
    base = RatQT.coerce(base)
    result = ONE
    factor = a
    for _ in range(n):
        result = result * (1 - factor)
        factor = factor * base
    return result


def qbinom(n: int, k: int, base: Scalar) -> RatQT:
    """
    Gaussian binomial [n k] evaluated at ``base``.

    Raises:
        ValueError: If k is negative or exceeds n
    """
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"qbinom requires 0 <= k <= n, got n={n}, k={k}")
    base = RatQT.coerce(base)
    numerator = pochhammer(base, base, n)
    return numerator / (pochhammer(base, base, k) * pochhammer(base, base, n - k))


def elementary_symmetric(values: Sequence[Scalar], m: int) -> RatQT:
    """e_m of a finite list of scalars; 0 when m exceeds the length."""
    if m < 0:
        raise ValueError(f"degree must be non-negative, got {m}")
    values = [RatQT.coerce(v) for v in values]
    if m > len(values):
        return ZERO
    total = ZERO
    for subset in combinations(values, m):
        term = ONE
        for v in subset:
            term = term * v
        total = total + term
    return total
