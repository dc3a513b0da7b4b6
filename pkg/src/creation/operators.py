"""
Creation operators for Macdonald polynomials and the Rodrigues driver.

For l(lam) <= k each variant sends J_lam to J_{lam + (1^k)}, so composing
them on the constant 1 builds every J_lam:

    J_lam = (B_N)^{lam_N} (B_{N-1})^{lam_{N-1} - lam_N} ... (B_1)^{lam_1 - lam_2} . 1

Subset sums run over index sets in lexicographic order and are reduced in
that order, so output is reproducible under any thread count.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional, Sequence

from src.coeff.qseries import pochhammer
from src.coeff.ratqt import RatQT
from src.hecke.operators import IndexSet, apply_YJu
from src.poly.mpoly import MPoly, is_symmetric
from src.symfun.bases import Basis, SymExpansion, elementary, m_coefficients
from src.symfun.partitions import Partition, c_lambda
from src.utils.logger import Logger
from src.utils.parallel import ordered_map

Q_INV = RatQT.q_pow(-1)
T_INV = RatQT.t_pow(-1)


class CreationVariant(Enum):
    """The three equivalent forms of the creation operator."""

    B1 = "b1"
    B2 = "b2"
    B3 = "b3"


def d_statistic(J: "IndexSet | Sequence[int]", I: "IndexSet | Sequence[int]") -> int:
    """
    Sum of the 0-based positions of J's elements inside I, minus m(m-1)/2.

    Raises:
        ValueError: If J is not a subset of I
    """
    inner = tuple(J)
    outer = tuple(I)
    if not set(inner) <= set(outer):
        raise ValueError(f"{inner} is not a subset of {outer}")
    m = len(inner)
    return sum(outer.index(j) for j in inner) - m * (m - 1) // 2


def _check_k(f: MPoly, k: int) -> None:
    if not 1 <= k <= f.nvars:
        raise ValueError(f"creation index k={k} out of range 1..{f.nvars}")


def _x_subset(nvars: int, I: Sequence[int]) -> MPoly:
    return MPoly.monomial(tuple(1 if i in I else 0 for i in range(1, nvars + 1)))


def _sum_ordered(nvars: int, terms: list[MPoly]) -> MPoly:
    total = MPoly.zero(nvars)
    for term in terms:
        total = total + term
    return total


def apply_B1(f: MPoly, k: int, check_symmetric: bool = True) -> MPoly:
    """
    B_k f = Y_{{1..N}, t^(k+1-N) q^-1} (e_k f) / (q^-1; t^-1)_{N-k}.

    Args:
        f: Symmetric polynomial
        k: Column height, 1..N
        check_symmetric: Reject non-symmetric input (disable only for
            exploratory use; the operator is only meaningful on symmetric f)

    Raises:
        ValueError: If k is out of range or f is not symmetric
    """
    _check_k(f, k)
    if check_symmetric and not is_symmetric(f):
        raise ValueError("B1 is defined on symmetric polynomials only")
    n = f.nvars
    u = RatQT.t_pow(k + 1 - n) * Q_INV
    raised = apply_YJu(elementary(k, n) * f, IndexSet.full(n), u)
    return raised / pochhammer(Q_INV, T_INV, n - k)


def b2_coefficient(n: int, k: int, m: int) -> RatQT:
    """q^-m / (t^(k-N+1) q^-1; t)_m."""
    return RatQT.q_pow(-m) / pochhammer(RatQT.t_pow(k - n + 1) * Q_INV, RatQT.t_pow(1), m)


def b2_inner_sum(f: MPoly, k: int, m: int) -> MPoly:
    """
    Sum over |I| = k of x_I times the sum over I' in I^c, |I'| = m, of
    t^-d(I', I^c) Y_{I u I', t^(1-m)} f.
    """
    _check_k(f, k)
    n = f.nvars
    if not 0 <= m <= n - k:
        raise ValueError(f"inner index m={m} out of range 0..{n - k}")
    u = RatQT.t_pow(1 - m)

    def term(I: tuple[int, ...]) -> MPoly:
        rest = tuple(i for i in range(1, n + 1) if i not in I)
        inner = MPoly.zero(n)
        for extra in combinations(rest, m):
            J = IndexSet.of(n, I + extra)
            weight = RatQT.t_pow(-d_statistic(extra, rest))
            inner = inner + apply_YJu(f, J, u).scale(weight)
        return _x_subset(n, I) * inner

    return _sum_ordered(n, ordered_map(term, list(combinations(range(1, n + 1), k))))


def apply_B2(f: MPoly, k: int) -> MPoly:
    """B_k in its expanded form; defined on every polynomial."""
    _check_k(f, k)
    n = f.nvars
    total = MPoly.zero(n)
    for m in range(n - k + 1):
        total = total + b2_inner_sum(f, k, m).scale(b2_coefficient(n, k, m))
    return total


def apply_B3(f: MPoly, k: int) -> MPoly:
    """B_k f = sum over |I| = k of x_I Y_{I,t} f."""
    _check_k(f, k)
    n = f.nvars
    t = RatQT.t_pow(1)

    def term(I: tuple[int, ...]) -> MPoly:
        return _x_subset(n, I) * apply_YJu(f, IndexSet(n, I), t)

    return _sum_ordered(n, ordered_map(term, list(combinations(range(1, n + 1), k))))


def apply_B(f: MPoly, k: int, variant: CreationVariant) -> MPoly:
    if variant == CreationVariant.B1:
        return apply_B1(f, k)
    if variant == CreationVariant.B2:
        return apply_B2(f, k)
    return apply_B3(f, k)


def rodrigues(
    lam: Partition,
    N: int,
    variant: CreationVariant = CreationVariant.B3,
    logger: Optional[Logger] = None,
) -> MPoly:
    """
    Build J_lam by applying creation operators to 1, right to left.

    Raises:
        ValueError: If lam has more than N parts
    """
    lam = Partition(lam)
    if lam.length > N:
        raise ValueError(f"partition {lam} has more than N={N} parts")
    parts = lam.padded(N) + (0,)
    f = MPoly.constant(N, 1)
    for k in range(1, N + 1):
        for _ in range(parts[k - 1] - parts[k]):
            f = apply_B(f, k, variant)
            if logger:
                logger.debug("rodrigues", f"applied {variant.name}_{k}: {len(f)} terms")
    return f


def explore_B3(f: MPoly, k: int) -> MPoly:
    """
    B3 on arbitrary input, e.g. J_lam with l(lam) > k.

    Nothing is claimed about the result; callers label it exploratory.
    """
    return apply_B3(f, k)


@dataclass
class IntegralityReport:
    """Outcome of the monomial-coefficient integrality check for one J_lam."""

    partition: Partition
    nvars: int
    expansion: SymExpansion
    witnesses: list[tuple[Partition, RatQT]] = field(default_factory=list)
    leading_ok: bool = True

    @property
    def ok(self) -> bool:
        return not self.witnesses and self.leading_ok


def integrality_check_monomial(lam: Partition, N: int) -> IntegralityReport:
    """
    Check that every m-coefficient of the B3 Rodrigues J_lam lies in ZZ[q,t]
    and that the coefficient of m_lam is c_lam.
    """
    lam = Partition(lam)
    poly = rodrigues(lam, N, CreationVariant.B3)
    expansion = SymExpansion(Basis.M, N, m_coefficients(poly))
    witnesses = [(mu, c) for mu, c in expansion.items() if not c.is_integral()]
    return IntegralityReport(
        partition=lam,
        nvars=N,
        expansion=expansion,
        witnesses=witnesses,
        leading_ok=expansion.coefficient(lam) == c_lambda(lam),
    )
