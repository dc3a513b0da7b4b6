"""
Macdonald polynomials from their defining conditions.

J_lam is the unique symmetric polynomial that is
    - triangular: J_lam = sum over mu <= lam (dominance) of v_{lam mu} m_mu,
    - orthogonal: <J_lam, J_mu>_{q,t} = 0 for mu < lam,
    - normalized: v_{lam lam} = c_lam.

The table for degree n is built by Gram-Schmidt over a linear extension of
dominance, in n variables so that every m_mu has a power-sum expansion.
Coefficients in the m-basis do not depend on the number of variables, so
results for fewer variables are restrictions of the same table.
"""

import threading
from dataclasses import dataclass
from typing import Mapping

from src.coeff.ratqt import ONE, ZERO, RatQT
from src.poly.mpoly import MPoly, is_symmetric
from src.symfun.bases import (
    Basis,
    PSum,
    SymExpansion,
    m_coefficients,
    m_to_p,
    m_to_poly,
    psum_scalar_product,
)
from src.symfun.partitions import Partition, c_lambda, partitions_of
from src.utils.cache import register_clearer

ORDERS = ("reverse-lex", "lex-conjugate")


@dataclass(frozen=True)
class _Row:
    m: dict[Partition, RatQT]
    p: PSum
    norm: RatQT


_table_lock = threading.Lock()
_tables: dict[tuple[int, str], dict[Partition, _Row]] = {}


def _clear_tables() -> None:
    with _table_lock:
        _tables.clear()


register_clearer(_clear_tables)


def linear_extension(n: int, order: str = "reverse-lex") -> list[Partition]:
    """
    Partitions of n, smallest first, in a linear extension of dominance.

    ``reverse-lex`` reverses the reverse-lexicographic listing;
    ``lex-conjugate`` sorts by the conjugate partition instead (mu <= lam in
    dominance iff lam' <= mu').
    """
    parts = list(partitions_of(n))
    if order == "reverse-lex":
        return parts[::-1]
    if order == "lex-conjugate":
        return sorted(parts, key=lambda lam: tuple(lam.conjugate()), reverse=True)
    raise ValueError(f"unknown linear extension {order!r}; expected one of {ORDERS}")


def _build_table(n: int, order: str) -> dict[Partition, _Row]:
    rows: dict[Partition, _Row] = {}
    done: list[Partition] = []
    for lam in linear_extension(n, order):
        m_coeffs: dict[Partition, RatQT] = {lam: ONE}
        p_coeffs = m_to_p({lam: ONE}, max(n, 1))
        base_p = dict(p_coeffs)
        for mu in done:
            row = rows[mu]
            proj = psum_scalar_product(base_p, row.p) / row.norm
            if not proj:
                continue
            for nu, c in row.m.items():
                m_coeffs[nu] = m_coeffs.get(nu, ZERO) - proj * c
            for nu, c in row.p.items():
                p_coeffs[nu] = p_coeffs.get(nu, ZERO) - proj * c
        m_coeffs = {nu: c for nu, c in m_coeffs.items() if c}
        p_coeffs = {nu: c for nu, c in p_coeffs.items() if c}
        rows[lam] = _Row(m_coeffs, p_coeffs, psum_scalar_product(p_coeffs, p_coeffs))
        done.append(lam)
    return rows


def _table(n: int, order: str) -> dict[Partition, _Row]:
    key = (n, order)
    with _table_lock:
        table = _tables.get(key)
    if table is None:
        table = _build_table(n, order)
        with _table_lock:
            _tables.setdefault(key, table)
    return table


def _monic_coeffs(lam: Partition, N: int, order: str) -> dict[Partition, RatQT]:
    row = _table(lam.size, order)[lam]
    return {mu: c for mu, c in row.m.items() if mu.length <= N}


def _check_length(lam: Partition, N: int) -> None:
    if lam.length > N:
        raise ValueError(f"partition {lam} has more than N={N} parts")


def gram_schmidt_J(lam: Partition, N: int, order: str = "reverse-lex") -> SymExpansion:
    """
    J_lam in the m-basis from orthogonality, triangularity and v_{lam lam} = c_lam.

    Raises:
        ValueError: If l(lam) > N or |lam| > N
    """
    lam = Partition(lam)
    _check_length(lam, N)
    if lam.size > N:
        raise ValueError(f"degree {lam.size} exceeds N={N}; the power-sum basis is incomplete")
    c = c_lambda(lam)
    return SymExpansion(Basis.M, N, {mu: v * c for mu, v in _monic_coeffs(lam, N, order).items()})


def monic_P(lam: Partition, N: int) -> SymExpansion:
    """P_lam = J_lam / c_lam in the m-basis (coefficient of m_lam is 1)."""
    lam = Partition(lam)
    _check_length(lam, N)
    if lam.size > N:
        raise ValueError(f"degree {lam.size} exceeds N={N}; the power-sum basis is incomplete")
    return SymExpansion(Basis.M, N, _monic_coeffs(lam, N, "reverse-lex"))


def macdonald_J(lam: Partition, N: int) -> SymExpansion:
    """
    J_lam in N variables for any degree, restricted from the stable table.

    Raises:
        ValueError: If l(lam) > N
    """
    lam = Partition(lam)
    _check_length(lam, N)
    c = c_lambda(lam)
    return SymExpansion(Basis.M, N, {mu: v * c for mu, v in _monic_coeffs(lam, N, "reverse-lex").items()})


def macdonald_P(lam: Partition, N: int) -> SymExpansion:
    lam = Partition(lam)
    _check_length(lam, N)
    return SymExpansion(Basis.M, N, _monic_coeffs(lam, N, "reverse-lex"))


def macdonald_poly(lam: Partition, N: int, monic: bool = False) -> MPoly:
    """J_lam (or P_lam) as a polynomial in x_1..x_N."""
    e = macdonald_P(lam, N) if monic else macdonald_J(lam, N)
    return m_to_poly(e.coeffs, N)


def expand_macdonald(e: SymExpansion) -> MPoly:
    """Polynomial for a SymExpansion in the P or J basis."""
    if e.basis not in (Basis.MACDONALD_P, Basis.MACDONALD_J):
        raise ValueError(f"expected a P or J expansion, got {e.basis.value}")
    monic = e.basis == Basis.MACDONALD_P
    total = MPoly.zero(e.nvars)
    for lam, c in e.coeffs.items():
        total = total + macdonald_poly(lam, e.nvars, monic).scale(c)
    return total


def macdonald_coefficients(m_coeffs: Mapping[Partition, RatQT], N: int, monic: bool) -> dict[Partition, RatQT]:
    """
    Greedy triangular solve: m-coefficients to P (monic) or J coefficients.
    """
    remainder = {Partition(l): c for l, c in m_coeffs.items() if c}
    out: dict[Partition, RatQT] = {}
    while remainder:
        lam = max(remainder, key=lambda l: (l.size, tuple(l)))
        basis_elem = macdonald_P(lam, N) if monic else macdonald_J(lam, N)
        c = remainder[lam] / basis_elem.coefficient(lam)
        out[lam] = c
        for mu, d in basis_elem.coeffs.items():
            value = remainder.get(mu, ZERO) - c * d
            if value:
                remainder[mu] = value
            else:
                remainder.pop(mu, None)
    return out


def to_macdonald_basis(f: MPoly, basis: "Basis | str") -> SymExpansion:
    """
    Expand a symmetric polynomial in the P or J basis.

    Raises:
        ValueError: If f is not symmetric or the basis is not P/J
    """
    basis = Basis.parse(basis)
    if basis not in (Basis.MACDONALD_P, Basis.MACDONALD_J):
        raise ValueError(f"expected basis P or J, got {basis.value}")
    if not is_symmetric(f):
        raise ValueError("polynomial is not symmetric")
    coeffs = macdonald_coefficients(m_coefficients(f), f.nvars, basis == Basis.MACDONALD_P)
    return SymExpansion(basis, f.nvars, coeffs)
