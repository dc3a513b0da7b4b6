"""
Integer partitions, dominance order and Young-diagram cell statistics.

Cells are (row, col) pairs, 1-based, rows counted top-down and columns
left-right. The arm of a cell counts cells to its east, the leg cells to its
south.
"""

from collections import Counter
from math import factorial, prod
from typing import Iterable, Iterator, Optional

from src.coeff.ratqt import ONE, RatQT

Cell = tuple[int, int]


class Partition(tuple):
    """
    Weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction so (2, 1, 0) == (2, 1).
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """
        Parse comma-separated parts; the empty string is the empty partition.

        Raises:
            ValueError: On non-integer parts or a non-decreasing sequence
        """
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = [int(piece) for piece in text.split(",")]
        except ValueError as e:
            raise ValueError(f"invalid partition {text!r}") from e
        if any(p <= 0 for p in parts):
            raise ValueError(f"invalid partition {text!r}: parts must be positive")
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """lambda_i (1-based), zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"partition {self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> "Partition":
        if not self:
            return Partition(())
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def cells(self) -> list[Cell]:
        return [(r, c) for r, p in enumerate(self, start=1) for c in range(1, p + 1)]

    def __contains__(self, cell: object) -> bool:
        if not (isinstance(cell, tuple) and len(cell) == 2):
            return super().__contains__(cell)
        r, c = cell
        return 1 <= r <= len(self) and 1 <= c <= self[r - 1]

    def contains_partition(self, other: "Partition") -> bool:
        """True iff the diagram of ``other`` fits inside this one."""
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def add_column(self, k: int) -> "Partition":
        """lambda + (1^k); requires length <= k."""
        if len(self) > k:
            raise ValueError(f"cannot add a column of height {k} to {self}")
        return Partition(p + 1 for p in self.padded(k))

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def partitions_of(n: int, max_length: Optional[int] = None, max_part: Optional[int] = None) -> Iterator[Partition]:
    """
    Partitions of n in reverse-lexicographic order, (n) first.

    Args:
        n: Size
        max_length: Optional bound on the number of parts
        max_part: Optional bound on the largest part
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative number: {n}")
    bound = n if max_part is None else max_part
    length = n if max_length is None else max_length
    if n == 0:
        yield Partition(())
        return
    if length == 0:
        return
    for first in range(min(n, bound), 0, -1):
        for rest in partitions_of(n - first, length - 1, first):
            yield Partition((first,) + tuple(rest))


def dominance_leq(mu: Partition, lam: Partition) -> Optional[bool]:
    """
    Dominance comparison mu <= lam.

    Returns:
        True if mu <= lam, False if lam < mu, None if incomparable (different
        sizes, or neither dominates the other)
    """
    mu, lam = Partition(mu), Partition(lam)
    if mu.size != lam.size:
        return None
    n = max(len(mu), len(lam))
    ps_mu = ps_lam = 0
    mu_below = lam_below = True
    for i in range(1, n + 1):
        ps_mu += mu.part(i)
        ps_lam += lam.part(i)
        if ps_mu > ps_lam:
            mu_below = False
        if ps_lam > ps_mu:
            lam_below = False
    if mu_below:
        return True
    if lam_below:
        return False
    return None


def arm_leg(lam: Partition, cell: Cell) -> tuple[int, int]:
    """
    Arm (cells east) and leg (cells south) of a cell of lam.

    Raises:
        ValueError: If the cell lies outside the diagram
    """
    lam = Partition(lam)
    if cell not in lam:
        raise ValueError(f"cell {cell} is outside the diagram of {lam}")
    row, col = cell
    return lam[row - 1] - col, lam.conjugate()[col - 1] - row


def z_lambda(lam: Partition) -> int:
    return prod(i**m * factorial(m) for i, m in Partition(lam).multiplicities().items())


def c_lambda(lam: Partition) -> RatQT:
    """Product over cells of (1 - q^arm t^(leg+1))."""
    lam = Partition(lam)
    result = ONE
    for cell in lam.cells():
        a, l = arm_leg(lam, cell)
        result = result * (1 - RatQT.monomial(1, a, l + 1))
    return result


def b_lambda_cell(lam: Partition, cell: Cell) -> RatQT:
    """(1 - q^a t^(l+1)) / (1 - q^(a+1) t^l) for a cell of lam, 1 outside."""
    lam = Partition(lam)
    if cell not in lam:
        return ONE
    a, l = arm_leg(lam, cell)
    return (1 - RatQT.monomial(1, a, l + 1)) / (1 - RatQT.monomial(1, a + 1, l))
