"""
Polynomials in a formal parameter (X or u) with MPoly coefficients.
"""

from dataclasses import dataclass, field
from typing import Iterator, Union

from src.coeff.ratqt import RatQT, Scalar
from src.poly.mpoly import MPoly


@dataclass(frozen=True)
class ParamPolyResult:
    """
    Output of a generating-function operator: entry r is the coefficient of
    the r-th power of the formal parameter.

    Trailing zero entries are kept as produced (an operator product of
    length l always yields l + 1 entries) but ignored by equality.
    """

    nvars: int
    coeffs: tuple[MPoly, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        for c in self.coeffs:
            if c.nvars != self.nvars:
                raise ValueError("all entries of a ParamPolyResult must share nvars")

    @classmethod
    def from_list(cls, coeffs: list[MPoly]) -> "ParamPolyResult":
        if not coeffs:
            raise ValueError("cannot infer nvars from an empty coefficient list")
        return cls(coeffs[0].nvars, tuple(coeffs))

    def trimmed(self) -> "ParamPolyResult":
        coeffs = list(self.coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        return ParamPolyResult(self.nvars, tuple(coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[MPoly]:
        return iter(self.coeffs)

    def __getitem__(self, power: int) -> MPoly:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return MPoly.zero(self.nvars)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ParamPolyResult):
            return NotImplemented
        return self.nvars == other.nvars and self.trimmed().coeffs == other.trimmed().coeffs

    def __hash__(self) -> int:
        return hash((self.nvars, self.trimmed().coeffs))

    def substitute_sign(self) -> "ParamPolyResult":
        """Replace the parameter by its negative (X -> -X)."""
        return ParamPolyResult(
            self.nvars,
            tuple(c if r % 2 == 0 else -c for r, c in enumerate(self.coeffs)),
        )

    def evaluate(self, value: Scalar) -> MPoly:
        """Sum of value^r * entry_r."""
        value = RatQT.coerce(value)
        total = MPoly.zero(self.nvars)
        power: Union[RatQT, int] = 1
        for c in self.coeffs:
            total = total + c.scale(power)
            power = value * power
        return total

    def scale_entries(self, scalars: list[Scalar]) -> "ParamPolyResult":
        """Multiply entry r by scalars[r] (missing scalars count as zero)."""
        out = []
        for r, c in enumerate(self.coeffs):
            out.append(c.scale(scalars[r]) if r < len(scalars) else MPoly.zero(self.nvars))
        return ParamPolyResult(self.nvars, tuple(out))
