"""
Classical bases of symmetric polynomials and conversions between them.

Working representations:
    - MPoly, the polynomial in x_1..x_N itself;
    - m-coefficients, read off the dominant exponents of a symmetric MPoly;
    - power-sum coefficients (``PSum``, a map Partition -> RatQT), in which
      products, h_n, e_n, Schur functions and the (q,t) scalar product are
      all cheap.

Conversions into e, s and p are triangular with respect to the
lexicographic order on partitions, which extends dominance; they are done
by greedy elimination against the m-expansion of each basis element.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations
from typing import Mapping

from sympy.combinatorics.permutations import Permutation
from sympy.utilities.iterables import multiset_permutations

from src.coeff.ratqt import ONE, ZERO, RatQT, Scalar
from src.poly.mpoly import MPoly, is_symmetric
from src.symfun.partitions import Partition, partitions_of, z_lambda
from src.utils.cache import memoized

PSum = dict[Partition, RatQT]


class Basis(Enum):
    """Basis tags; the value is the tag used in serialized output."""

    M = "m"
    E = "e"
    P = "p"
    SCHUR = "s"
    DUAL_SCHUR = "S"
    MACDONALD_P = "P"
    MACDONALD_J = "J"

    @classmethod
    def parse(cls, tag: "str | Basis") -> "Basis":
        if isinstance(tag, Basis):
            return tag
        for member in cls:
            if member.value == tag:
                return member
        raise ValueError(f"unsupported basis tag {tag!r}")


def _sort_key(lam: Partition) -> tuple:
    return (lam.size, tuple(lam))


@dataclass
class SymExpansion:
    """Symmetric polynomial written in a named basis."""

    basis: Basis
    nvars: int
    coeffs: dict[Partition, RatQT] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.basis = Basis.parse(self.basis)
        clean: dict[Partition, RatQT] = {}
        for lam, c in self.coeffs.items():
            lam = Partition(lam)
            value = clean.get(lam, ZERO) + RatQT.coerce(c)
            if value:
                clean[lam] = value
            else:
                clean.pop(lam, None)
        self.coeffs = clean

    def items(self) -> list[tuple[Partition, RatQT]]:
        """Entries in reverse-lex order (largest degree first)."""
        return sorted(self.coeffs.items(), key=lambda kv: _sort_key(kv[0]), reverse=True)

    def coefficient(self, lam: Partition) -> RatQT:
        return self.coeffs.get(Partition(lam), ZERO)

    def scale(self, factor: Scalar) -> "SymExpansion":
        factor = RatQT.coerce(factor)
        return SymExpansion(self.basis, self.nvars, {l: c * factor for l, c in self.coeffs.items()})

    def to_json_dict(self) -> dict:
        coeffs = []
        for lam, c in self.items():
            num, den = c.to_strings()
            coeffs.append({"partition": list(lam), "num": num, "den": den})
        return {"basis": self.basis.value, "nvars": self.nvars, "coeffs": coeffs}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "SymExpansion":
        coeffs = {
            Partition(entry["partition"]): RatQT.from_strings(entry["num"], entry.get("den", "1"))
            for entry in data["coeffs"]
        }
        return cls(Basis.parse(data["basis"]), int(data["nvars"]), coeffs)

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        width = max(len(str(l)) for l in self.coeffs) + len(self.basis.value) + 2
        lines = []
        for lam, c in self.items():
            label = f"{self.basis.value}[{lam}]"
            lines.append(f"{label:<{width}}  {c}")
        return "\n".join(lines)


# power-sum algebra


def ps_add(a: PSum, b: PSum) -> PSum:
    out = dict(a)
    for lam, c in b.items():
        value = out.get(lam, ZERO) + c
        if value:
            out[lam] = value
        else:
            out.pop(lam, None)
    return out


def ps_scale(a: PSum, factor: Scalar) -> PSum:
    factor = RatQT.coerce(factor)
    if not factor:
        return {}
    return {lam: c * factor for lam, c in a.items()}


def ps_mul(a: PSum, b: PSum) -> PSum:
    """Product in the power-sum basis: p_lam * p_mu = p_(lam u mu)."""
    out: PSum = {}
    for lam, c1 in a.items():
        for mu, c2 in b.items():
            nu = Partition(sorted(lam + mu, reverse=True))
            value = out.get(nu, ZERO) + c1 * c2
            if value:
                out[nu] = value
            else:
                out.pop(nu, None)
    return out


@memoized
def _h_in_p(n: int) -> tuple[tuple[Partition, RatQT], ...]:
    if n < 0:
        return ()
    return tuple((lam, RatQT(1, z_lambda(lam))) for lam in partitions_of(n))


def h_in_p(n: int) -> PSum:
    """Complete homogeneous h_n = sum over lam |- n of p_lam / z_lam."""
    return dict(_h_in_p(n))


def e_in_p(n: int) -> PSum:
    """Elementary e_n = sum of (-1)^(n - l(lam)) p_lam / z_lam."""
    if n < 0:
        return {}
    return {lam: RatQT((-1) ** (n - lam.length), z_lambda(lam)) for lam in partitions_of(n)}


@memoized
def _schur_in_p(lam: Partition) -> tuple[tuple[Partition, RatQT], ...]:
    # Jacobi-Trudi: s_lam = det(h_{lam_i - i + j}).
    ell = lam.length
    if ell == 0:
        return ((Partition(()), ONE),)
    total: PSum = {}
    for perm in permutations(range(ell)):
        sign = Permutation(list(perm)).signature()
        term: PSum = {Partition(()): ONE}
        for i in range(ell):
            index = lam[i] - i + perm[i]
            if index < 0:
                term = {}
                break
            term = ps_mul(term, h_in_p(index))
        if term:
            total = ps_add(total, ps_scale(term, sign))
    return tuple(sorted(total.items(), reverse=True))


def schur_in_p(lam: Partition) -> PSum:
    return dict(_schur_in_p(Partition(lam)))


def dual_schur_in_p(lam: Partition) -> PSum:
    """S_lam(x;t): image of s_lam under p_r -> (1 - t^r) p_r."""
    out: PSum = {}
    for nu, c in schur_in_p(lam).items():
        factor = ONE
        for r in nu:
            factor = factor * (1 - RatQT.t_pow(r))
        out[nu] = c * factor
    return out


# polynomial expansions


@memoized
def _m_poly(lam: Partition, nvars: int) -> MPoly:
    return MPoly(nvars, {tuple(p): 1 for p in multiset_permutations(list(lam.padded(nvars)))})


def monomial_symmetric(lam: Partition, nvars: int) -> MPoly:
    """m_lam in nvars variables: sum of its distinct permutations."""
    lam = Partition(lam)
    if lam.length > nvars:
        raise ValueError(f"m_{lam} needs at least {lam.length} variables, got {nvars}")
    return _m_poly(lam, nvars)


def elementary(k: int, nvars: int) -> MPoly:
    """e_k in nvars variables; zero when k exceeds nvars."""
    if k < 0:
        raise ValueError(f"degree must be non-negative, got {k}")
    if k > nvars:
        return MPoly.zero(nvars)
    return monomial_symmetric(Partition((1,) * k), nvars)


@memoized
def _power_sum_poly(lam: Partition, nvars: int) -> MPoly:
    result = MPoly.constant(nvars, 1)
    for r in lam:
        p_r = MPoly(nvars, {tuple(r if j == i else 0 for j in range(nvars)): 1 for i in range(nvars)})
        result = result * p_r
    return result


def power_sum(lam: Partition, nvars: int) -> MPoly:
    return _power_sum_poly(Partition(lam), nvars)


def psum_to_poly(coeffs: PSum, nvars: int) -> MPoly:
    total = MPoly.zero(nvars)
    for lam, c in coeffs.items():
        total = total + power_sum(lam, nvars).scale(c)
    return total


def m_coefficients(f: MPoly) -> dict[Partition, RatQT]:
    """Coefficients of m_lam in a symmetric f (read at the dominant exponents)."""
    out: dict[Partition, RatQT] = {}
    for exp, c in f.raw_items():
        if all(a >= b for a, b in zip(exp, exp[1:])):
            out[Partition(exp)] = c
    return out


def m_to_poly(coeffs: Mapping[Partition, RatQT], nvars: int) -> MPoly:
    total = MPoly.zero(nvars)
    for lam, c in coeffs.items():
        total = total + monomial_symmetric(lam, nvars).scale(c)
    return total


@memoized
def _p_in_m(lam: Partition, nvars: int) -> tuple[tuple[Partition, RatQT], ...]:
    return tuple(m_coefficients(power_sum(lam, nvars)).items())


@memoized
def _schur_in_m(lam: Partition, nvars: int) -> tuple[tuple[Partition, RatQT], ...]:
    out: dict[Partition, RatQT] = {}
    for nu, c in schur_in_p(lam).items():
        for mu, d in _p_in_m(nu, nvars):
            out[mu] = out.get(mu, ZERO) + c * d
    return tuple((mu, c) for mu, c in out.items() if c)


@memoized
def _e_in_m(lam: Partition, nvars: int) -> tuple[tuple[Partition, RatQT], ...]:
    poly = MPoly.constant(nvars, 1)
    for k in lam:
        poly = poly * elementary(k, nvars)
    return tuple(m_coefficients(poly).items())


def _greedy(
    target: dict[Partition, RatQT],
    element_in_m,
    pick_largest: bool,
) -> dict[Partition, RatQT]:
    """
    Triangular solve: target (m-coefficients) as a combination of basis
    elements. ``element_in_m(lam)`` returns (label, leading coefficient,
    m-expansion) for the basis element whose extreme term is m_lam.
    """
    remainder = dict(target)
    out: dict[Partition, RatQT] = {}
    while remainder:
        lam = (max if pick_largest else min)(remainder, key=_sort_key)
        label, lead, expansion = element_in_m(lam)
        c = remainder[lam] / lead
        out[label] = out.get(label, ZERO) + c
        for mu, d in expansion:
            value = remainder.get(mu, ZERO) - c * d
            if value:
                remainder[mu] = value
            else:
                remainder.pop(mu, None)
        if lam in remainder:
            raise RuntimeError(f"basis conversion failed to eliminate m_{lam}")
    return {l: c for l, c in out.items() if c}


def m_to_p(coeffs: Mapping[Partition, RatQT], nvars: int) -> PSum:
    """m-coefficients to power-sum coefficients (degree must not exceed nvars)."""
    def element(lam: Partition):
        expansion = _p_in_m(lam, nvars)
        return lam, dict(expansion)[lam], expansion

    return _greedy(dict(coeffs), element, pick_largest=False)


def p_to_m(coeffs: PSum, nvars: int) -> dict[Partition, RatQT]:
    out: dict[Partition, RatQT] = {}
    for lam, c in coeffs.items():
        for mu, d in _p_in_m(lam, nvars):
            value = out.get(mu, ZERO) + c * d
            if value:
                out[mu] = value
            else:
                out.pop(mu, None)
    return out


def m_to_schur(coeffs: Mapping[Partition, RatQT], nvars: int) -> dict[Partition, RatQT]:
    def element(lam: Partition):
        return lam, ONE, _schur_in_m(lam, nvars)

    return _greedy(dict(coeffs), element, pick_largest=True)


def m_to_e(coeffs: Mapping[Partition, RatQT], nvars: int) -> dict[Partition, RatQT]:
    def element(lam: Partition):
        label = lam.conjugate()
        return label, ONE, _e_in_m(label, nvars)

    return _greedy(dict(coeffs), element, pick_largest=True)


def _check_degree(f: MPoly, basis: Basis) -> None:
    if f.degree() > f.nvars:
        raise ValueError(
            f"degree {f.degree()} exceeds nvars={f.nvars}; the {basis.value}-basis is not available"
        )


def to_psum(f: MPoly) -> PSum:
    """Power-sum coefficients of a symmetric polynomial of degree <= nvars."""
    if not is_symmetric(f):
        raise ValueError("polynomial is not symmetric")
    _check_degree(f, Basis.P)
    return m_to_p(m_coefficients(f), f.nvars)


def to_basis(f: MPoly, basis: "Basis | str") -> SymExpansion:
    """
    Expand a symmetric polynomial in the requested basis.

    Raises:
        ValueError: If f is not symmetric, or its degree exceeds nvars for the
            p, s and S bases
    """
    basis = Basis.parse(basis)
    if basis in (Basis.MACDONALD_P, Basis.MACDONALD_J):
        from src.macdonald.oracle import to_macdonald_basis

        return to_macdonald_basis(f, basis)
    if not is_symmetric(f):
        raise ValueError("polynomial is not symmetric")

    m = m_coefficients(f)
    if basis == Basis.M:
        return SymExpansion(basis, f.nvars, m)
    if basis == Basis.E:
        return SymExpansion(basis, f.nvars, m_to_e(m, f.nvars))

    _check_degree(f, basis)
    if basis == Basis.P:
        return SymExpansion(basis, f.nvars, m_to_p(m, f.nvars))
    if basis == Basis.SCHUR:
        return SymExpansion(basis, f.nvars, m_to_schur(m, f.nvars))

    # S(x;t): undo the plethystic factor, then read off Schur coefficients.
    pc = m_to_p(m, f.nvars)
    undone: PSum = {}
    for lam, c in pc.items():
        factor = ONE
        for r in lam:
            factor = factor * (1 - RatQT.t_pow(r))
        undone[lam] = c / factor
    return SymExpansion(basis, f.nvars, m_to_schur(p_to_m(undone, f.nvars), f.nvars))


def expand_basis(e: SymExpansion) -> MPoly:
    """
    Polynomial in x_1..x_N represented by a SymExpansion.

    Raises:
        ValueError: If an m-basis label has more parts than nvars
    """
    n = e.nvars
    if e.basis == Basis.M:
        return m_to_poly(e.coeffs, n)
    if e.basis == Basis.E:
        total = MPoly.zero(n)
        for lam, c in e.coeffs.items():
            term = MPoly.constant(n, c)
            for k in lam:
                term = term * elementary(k, n)
            total = total + term
        return total
    if e.basis == Basis.P:
        return psum_to_poly(e.coeffs, n)
    if e.basis == Basis.SCHUR:
        total: PSum = {}
        for lam, c in e.coeffs.items():
            total = ps_add(total, ps_scale(schur_in_p(lam), c))
        return psum_to_poly(total, n)
    if e.basis == Basis.DUAL_SCHUR:
        total = {}
        for lam, c in e.coeffs.items():
            total = ps_add(total, ps_scale(dual_schur_in_p(lam), c))
        return psum_to_poly(total, n)

    from src.macdonald.oracle import expand_macdonald

    return expand_macdonald(e)


def as_psum(e: SymExpansion) -> PSum:
    if e.basis == Basis.P:
        return dict(e.coeffs)
    return to_psum(expand_basis(e))


def scalar_product_qt(a: SymExpansion, b: SymExpansion) -> RatQT:
    """
    (q,t) scalar product: sum over lam of a_lam b_lam z_lam prod (1-q^lam_i)/(1-t^lam_i)
    in the power-sum basis.

    Raises:
        ValueError: If a non-p input has degree above nvars
    """
    return psum_scalar_product(as_psum(a), as_psum(b))


def psum_scalar_product(a: PSum, b: PSum) -> RatQT:
    total = ZERO
    for lam, c in a.items():
        d = b.get(lam)
        if d is None:
            continue
        total = total + c * d * qt_weight(lam)
    return total


@memoized
def qt_weight(lam: Partition) -> RatQT:
    """z_lam * prod (1 - q^lam_i)/(1 - t^lam_i)."""
    w = RatQT.coerce(z_lambda(lam))
    for r in lam:
        w = w * (1 - RatQT.q_pow(r)) / (1 - RatQT.t_pow(r))
    return w
