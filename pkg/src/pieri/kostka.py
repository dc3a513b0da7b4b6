"""
(q,t)-Kostka coefficients.

J_lam = sum over mu |- n of K_{lam mu}(q,t) S_mu(x;t), where S_mu(x;t) is the
Schur function under p_r -> (1 - t^r) p_r. Each J_lam comes from the B3
Rodrigues formula in N = n variables; the transition is solved exactly in
the power-sum basis.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from src.coeff.ratqt import ZERO, RatQT
from src.creation.operators import CreationVariant, rodrigues
from src.pieri.linalg import SingularMatrixError, bareiss_solve
from src.symfun.bases import Basis, SymExpansion, dual_schur_in_p, to_psum
from src.symfun.partitions import Partition, partitions_of
from src.utils.logger import Logger
from src.utils.parallel import ordered_map


def dual_schur_St(mu: Partition, N: int) -> SymExpansion:
    """
    S_mu(x;t) in the power-sum basis.

    Raises:
        ValueError: If |mu| > N
    """
    mu = Partition(mu)
    if mu.size > N:
        raise ValueError(f"degree {mu.size} exceeds N={N}")
    return SymExpansion(Basis.P, N, dual_schur_in_p(mu))


@dataclass
class KostkaMatrix:
    """Rows lam, columns mu, both in reverse-lex order."""

    degree: int
    partitions: list[Partition]
    entries: dict[tuple[Partition, Partition], RatQT] = field(default_factory=dict)

    def entry(self, lam: Partition, mu: Partition) -> RatQT:
        return self.entries.get((Partition(lam), Partition(mu)), ZERO)

    def rows(self) -> list[list[RatQT]]:
        return [[self.entry(l, m) for m in self.partitions] for l in self.partitions]

    def non_integral(self) -> list[tuple[Partition, Partition]]:
        return [key for key, v in self.entries.items() if not v.is_integral()]

    def is_integral(self) -> bool:
        return not self.non_integral()

    def non_positive(self) -> list[tuple[Partition, Partition]]:
        """Entries with a negative coefficient (reported, never asserted)."""
        bad = []
        for key, v in self.entries.items():
            if not v.is_integral() or any(c < 0 for _, c in v.num):
                bad.append(key)
        return bad

    def specialize(self, q: Union[Fraction, int], t: Union[Fraction, int]) -> list[list[Fraction]]:
        return [[v.evaluate(q, t) for v in row] for row in self.rows()]

    def to_json_dict(self) -> dict:
        rows = []
        for row in self.rows():
            rows.append([str(v) for v in row])
        return {
            "degree": self.degree,
            "partitions": [list(p) for p in self.partitions],
            "rows": rows,
            "integral": self.is_integral(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_text(self) -> str:
        labels = [f"({p})" for p in self.partitions]
        cells = [[str(v) for v in row] for row in self.rows()]
        first = max([len(l) for l in labels] + [1])
        widths = [
            max([len(labels[j])] + [len(row[j]) for row in cells])
            for j in range(len(labels))
        ]
        header = " " * first + "  " + "  ".join(l.ljust(w) for l, w in zip(labels, widths))
        lines = [header.rstrip()]
        for label, row in zip(labels, cells):
            line = label.ljust(first) + "  " + "  ".join(c.ljust(w) for c, w in zip(row, widths))
            lines.append(line.rstrip())
        return "\n".join(lines)


def kostka_matrix(
    n: int,
    variant: CreationVariant = CreationVariant.B3,
    logger: Optional[Logger] = None,
) -> KostkaMatrix:
    """
    Solve J_lam = sum K_{lam mu} S_mu for all lam, mu |- n.

    Raises:
        ValueError: If n is negative
        RuntimeError: If the transition matrix is singular
    """
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    N = max(n, 1)
    parts = list(partitions_of(n))

    def j_in_p(lam: Partition) -> dict[Partition, RatQT]:
        if logger:
            logger.debug("kostka", f"building J_{lam} with {variant.name}")
        return to_psum(rodrigues(lam, N, variant))

    j_rows = ordered_map(j_in_p, parts)
    s_cols = {mu: dual_schur_in_p(mu) for mu in parts}

    A = [[s_cols[mu].get(nu, ZERO) for mu in parts] for nu in parts]
    B = [[j_rows[i].get(nu, ZERO) for i in range(len(parts))] for nu in parts]
    try:
        X = bareiss_solve(A, B)
    except SingularMatrixError as e:
        raise RuntimeError(f"dual Schur transition matrix is singular at n={n}") from e

    entries = {}
    for j, mu in enumerate(parts):
        for i, lam in enumerate(parts):
            if X[j][i]:
                entries[(lam, mu)] = X[j][i]
    return KostkaMatrix(n, parts, entries)
