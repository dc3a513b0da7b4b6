"""
Macdonald q-difference operators and their eigenvalues.

The r-th operator on a set of variables V (all of x_1..x_N by default) is

    M^r f = t^((j-r)r + r(r-1)/2) * sum over I in V, |I| = r, of
            A_I * prod_{i in I} tau_i f,
    A_I   = prod_{i in I, k in V-I} (x_i - t^-1 x_k) / (x_i - x_k),

with j = |V|. Each A_I is rational, the sum is polynomial on symmetric
input. The sum is computed over the common denominator (the Vandermonde
product of V) and divided out exactly once at the end.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from src.coeff.qseries import elementary_symmetric
from src.coeff.ratqt import ONE, RatQT
from src.hecke.operators import HeckeContext, IndexSet, T_INV, multiply_linear
from src.poly.mpoly import MPoly, apply_shift, exact_divide_linear, is_symmetric
from src.poly.series import ParamPolyResult
from src.symfun.partitions import Partition
from src.utils.cache import memoized
from src.utils.parallel import ordered_map


def _linear(nvars: int, form: dict[int, RatQT]) -> MPoly:
    return multiply_linear(MPoly.constant(nvars, 1), form)


def _variable_set(nvars: int, variables: Optional[Sequence[int]]) -> tuple[int, ...]:
    if variables is None:
        return tuple(range(1, nvars + 1))
    return IndexSet.of(nvars, variables).elems


@dataclass(frozen=True)
class ATilde:
    """
    Coefficient A_I of the Macdonald operator as a rational expression
    numerator / denominator in x.
    """

    nvars: int
    index_set: tuple[int, ...]
    variables: tuple[int, ...]

    def _pairs(self) -> list[tuple[int, int]]:
        others = [k for k in self.variables if k not in self.index_set]
        return [(i, k) for i in self.index_set for k in others]

    def numerator(self) -> MPoly:
        result = MPoly.constant(self.nvars, 1)
        for i, k in self._pairs():
            result = result * _linear(self.nvars, {i: ONE, k: -T_INV})
        return result

    def denominator(self) -> MPoly:
        result = MPoly.constant(self.nvars, 1)
        for i, k in self._pairs():
            result = result * _linear(self.nvars, {i: ONE, k: -ONE})
        return result

    def cleared(self) -> MPoly:
        """A_I times the Vandermonde product over the variable set."""
        return _cleared(self.nvars, self.index_set, self.variables)


@memoized
def _cleared(nvars: int, index_set: tuple[int, ...], variables: tuple[int, ...]) -> MPoly:
    inside = set(index_set)
    sign = 1
    result = MPoly.constant(nvars, 1)
    for i in index_set:
        for k in variables:
            if k in inside:
                continue
            result = result * _linear(nvars, {i: ONE, k: -T_INV})
            if i > k:
                sign = -sign
    for a, b in combinations(variables, 2):
        if (a in inside) == (b in inside):
            result = result * _linear(nvars, {a: ONE, b: -ONE})
    return result if sign == 1 else -result


def A_tilde(I: "IndexSet | Sequence[int]", ctx: HeckeContext, variables: Optional[Sequence[int]] = None) -> ATilde:
    """
    Coefficient function of the Macdonald operator for the subset I.

    Raises:
        ValueError: If I is not inside the variable set
    """
    elems = I.elems if isinstance(I, IndexSet) else IndexSet.of(ctx.nvars, I).elems
    chosen = _variable_set(ctx.nvars, variables)
    if not set(elems) <= set(chosen):
        raise ValueError(f"index set {elems} is not inside the variables {chosen}")
    return ATilde(ctx.nvars, elems, chosen)


def apply_macdonald_r(f: MPoly, r: int, variables: Optional[Sequence[int]] = None) -> MPoly:
    """
    Apply the r-th Macdonald operator, optionally restricted to a subset of
    the variables.

    Args:
        f: Polynomial, symmetric in the chosen variables
        r: Order, 0 <= r <= number of chosen variables
        variables: Indices the operator acts on (default: all)

    Raises:
        ValueError: If r is out of range, or f is not symmetric for a
            full-variable call
        InexactDivisionError: If f is not symmetric in the chosen variables
    """
    chosen = _variable_set(f.nvars, variables)
    j = len(chosen)
    if not 0 <= r <= j:
        raise ValueError(f"operator order {r} out of range 0..{j}")
    if variables is None and not is_symmetric(f):
        raise ValueError("Macdonald operators require a symmetric polynomial")
    if r == 0:
        return f

    def summand(I: tuple[int, ...]) -> MPoly:
        shifted = f
        for i in I:
            shifted = apply_shift(shifted, i, 1)
        return _cleared(f.nvars, I, chosen) * shifted

    total = MPoly.zero(f.nvars)
    for term in ordered_map(summand, list(combinations(chosen, r))):
        total = total + term

    for a, b in combinations(chosen, 2):
        total = exact_divide_linear(total, a, b, ONE)
    return total.scale(RatQT.t_pow((j - r) * r + r * (r - 1) // 2))


def apply_macdonald_genfun(f: MPoly, variables: Optional[Sequence[int]] = None) -> ParamPolyResult:
    """Generating function sum X^r M^r f, returned as [M^0 f, ..., M^j f]."""
    chosen = _variable_set(f.nvars, variables)
    return ParamPolyResult(
        f.nvars,
        tuple(apply_macdonald_r(f, r, variables) for r in range(len(chosen) + 1)),
    )


def eigenvalue_a(lam: Partition, N: int) -> list[RatQT]:
    """
    Coefficients of prod_{i=1..N} (1 + X q^lam_i t^(N-i)).

    Raises:
        ValueError: If lam has more than N parts
    """
    lam = Partition(lam)
    if lam.length > N:
        raise ValueError(f"partition {lam} has more than {N} parts")
    roots = [RatQT.monomial(1, lam.part(i), N - i) for i in range(1, N + 1)]
    return [elementary_symmetric(roots, r) for r in range(N + 1)]
