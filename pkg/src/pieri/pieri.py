"""
Pieri rule for multiplication by e_k in the monic Macdonald basis.

    e_k P_lam = sum over vertical k-strips mu/lam of Psi_{mu/lam} P_mu,
    Psi_{mu/lam} = prod over cells s of lam whose column meets mu/lam and
                   whose row does not, of b_mu(s) / b_lam(s).
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from src.coeff.ratqt import ONE, RatQT
from src.macdonald.oracle import macdonald_coefficients, macdonald_poly
from src.poly.mpoly import MPoly
from src.symfun.bases import elementary, m_coefficients
from src.symfun.partitions import Partition, b_lambda_cell


@dataclass
class PieriExpansion:
    """e_k P_base = sum of terms[mu] P_mu."""

    base: Partition
    k: int
    terms: dict[Partition, RatQT] = field(default_factory=dict)

    def leading(self) -> Optional[Partition]:
        """lam + (1^k) when it is a term, else None."""
        if self.base.length > self.k:
            return None
        mu = self.base.add_column(self.k)
        return mu if mu in self.terms else None

    def items(self) -> list[tuple[Partition, RatQT]]:
        return sorted(self.terms.items(), key=lambda kv: tuple(kv[0]), reverse=True)

    def to_json_dict(self) -> dict:
        entries = []
        for mu, c in self.items():
            num, den = c.to_strings()
            entries.append({"partition": list(mu), "num": num, "den": den})
        return {"base": list(self.base), "k": self.k, "terms": entries}

    def to_text(self) -> str:
        header = f"e_{self.k} P[{self.base}] ="
        if not self.terms:
            return f"{header} 0"
        width = max(len(str(mu)) for mu in self.terms) + 3
        lines = [header]
        for mu, c in self.items():
            label = f"P[{mu}]"
            lines.append(f"  {label:<{width}}  {c}")
        return "\n".join(lines)


def vertical_strips(lam: Partition, k: int) -> list[Partition]:
    """All mu containing lam with mu/lam a vertical strip of k cells."""
    lam = Partition(lam)
    if k < 0:
        raise ValueError(f"strip size must be non-negative, got {k}")
    rows = lam.length + k
    padded = lam.padded(rows)
    out = []
    for chosen in combinations(range(rows), k):
        mu = list(padded)
        for r in chosen:
            mu[r] += 1
        if all(a >= b for a, b in zip(mu, mu[1:])):
            out.append(Partition(mu))
    return sorted(out, reverse=True)


def _strip_cells(lam: Partition, mu: Partition) -> list[tuple[int, int]]:
    if not mu.contains_partition(lam):
        raise ValueError(f"{mu} does not contain {lam}")
    cells = []
    for r in range(1, mu.length + 1):
        gap = mu.part(r) - lam.part(r)
        if gap > 1:
            raise ValueError(f"{mu}/{lam} is not a vertical strip (row {r} grows by {gap})")
        if gap == 1:
            cells.append((r, mu.part(r)))
    return cells


def pieri_coefficient(lam: Partition, mu: Partition) -> RatQT:
    """
    Psi_{mu/lam}.

    Raises:
        ValueError: If mu/lam is not a vertical strip
    """
    lam, mu = Partition(lam), Partition(mu)
    strip = _strip_cells(lam, mu)
    columns = {c for _, c in strip}
    rows = {r for r, _ in strip}
    result = ONE
    for r, c in lam.cells():
        if c in columns and r not in rows:
            result = result * b_lambda_cell(mu, (r, c)) / b_lambda_cell(lam, (r, c))
    return result


def pieri_expand(lam: Partition, k: int, nvars: Optional[int] = None) -> PieriExpansion:
    """
    Combinatorial expansion of e_k P_lam.

    With ``nvars`` given, terms P_mu that vanish in nvars variables
    (l(mu) > nvars) are dropped.
    """
    lam = Partition(lam)
    terms = {}
    for mu in vertical_strips(lam, k):
        if nvars is not None and mu.length > nvars:
            continue
        terms[mu] = pieri_coefficient(lam, mu)
    return PieriExpansion(lam, k, terms)


def pieri_oracle(lam: Partition, k: int, nvars: int) -> PieriExpansion:
    """
    e_k P_lam expanded in the P basis by polynomial multiplication and a
    triangular solve against the Gram-Schmidt table.

    The product is formed in max(nvars, |lam| + k) variables and restricted
    to l(mu) <= nvars afterwards.
    """
    lam = Partition(lam)
    if lam.length > nvars:
        raise ValueError(f"partition {lam} has more than {nvars} parts")
    wide = max(nvars, lam.size + k)
    product: MPoly = elementary(k, wide) * macdonald_poly(lam, wide, monic=True)
    coeffs = macdonald_coefficients(m_coefficients(product), wide, monic=True)
    return PieriExpansion(lam, k, {mu: c for mu, c in coeffs.items() if mu.length <= nvars})


def leading_column_structure(expansion: PieriExpansion) -> bool:
    """
    For l(base) <= k: the term lam + (1^k) is present and every other mu has
    mu_{k+1} = 1.
    """
    lam, k = expansion.base, expansion.k
    if lam.length > k:
        raise ValueError(f"structure check needs l(lam) <= k, got {lam} and k={k}")
    leading = lam.add_column(k)
    if leading not in expansion.terms:
        return False
    return all(mu.part(k + 1) == 1 for mu in expansion.terms if mu != leading)
