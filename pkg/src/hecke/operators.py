"""
Affine Hecke algebra realized on polynomials in x_1..x_N.

All operators are concrete linear maps MPoly -> MPoly. Each one is first
evaluated on single monomials (memoized, results are immutable) and then
extended linearly, so repeated application over a computation reuses the
monomial images.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from src.coeff.ratqt import ONE, ZERO, RatQT, Scalar
from src.poly.mpoly import (
    Composition,
    MPoly,
    apply_shift,
    apply_transposition,
    exact_divide_linear,
    transform_monomials,
)
from src.poly.series import ParamPolyResult
from src.utils.cache import memoized

T_INV = RatQT.t_pow(-1)
Q_INV = RatQT.q_pow(-1)


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing set of variable indices inside {1..nvars}."""

    nvars: int
    elems: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = tuple(self.elems)
        object.__setattr__(self, "elems", elems)
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise ValueError(f"index set {elems} must be strictly increasing")
        if elems and not (1 <= elems[0] and elems[-1] <= self.nvars):
            raise ValueError(f"index set {elems} not inside 1..{self.nvars}")

    @classmethod
    def of(cls, nvars: int, elems: Iterable[int]) -> "IndexSet":
        """Build from any iterable of distinct indices."""
        elems = sorted(elems)
        if len(set(elems)) != len(elems):
            raise ValueError(f"index set {elems} has duplicates")
        return cls(nvars, tuple(elems))

    @classmethod
    def full(cls, nvars: int) -> "IndexSet":
        return cls(nvars, tuple(range(1, nvars + 1)))

    def complement(self) -> "IndexSet":
        return IndexSet(self.nvars, tuple(i for i in range(1, self.nvars + 1) if i not in self.elems))

    def union(self, other: "IndexSet") -> "IndexSet":
        return IndexSet.of(self.nvars, set(self.elems) | set(other.elems))

    def issubset(self, other: "IndexSet") -> bool:
        return set(self.elems) <= set(other.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __contains__(self, i: object) -> bool:
        return i in self.elems


@dataclass(frozen=True)
class HeckeContext:
    """Number of variables plus the bounded spanning sets used for checks."""

    nvars: int

    def __post_init__(self) -> None:
        if self.nvars < 1:
            raise ValueError(f"nvars must be at least 1, got {self.nvars}")

    def check_index(self, i: int, low: int = 1, high: int = -1) -> None:
        high = self.nvars - 1 if high < 0 else high
        if not low <= i <= high:
            raise ValueError(f"index {i} out of range {low}..{high}")

    def monomials(self, degree: int) -> list[MPoly]:
        """All monomials of the given total degree, descending lex."""
        return [MPoly.monomial(exp) for exp in compositions(degree, self.nvars)]

    def monomials_up_to(self, max_degree: int) -> list[MPoly]:
        out: list[MPoly] = []
        for d in range(max_degree + 1):
            out.extend(self.monomials(d))
        return out

    def subsets(self, size: int) -> list[IndexSet]:
        """Index sets of the given size in lexicographic order."""
        return [IndexSet(self.nvars, c) for c in combinations(range(1, self.nvars + 1), size)]

    def one(self) -> MPoly:
        return MPoly.constant(self.nvars, 1)


def compositions(degree: int, nparts: int) -> Iterator[Composition]:
    """Weak compositions of ``degree`` into ``nparts`` parts, descending lex."""
    if nparts == 0:
        if degree == 0:
            yield ()
        return
    if nparts == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in compositions(degree - first, nparts - 1):
            yield (first,) + rest


def _extend(f: MPoly, on_monomial: Callable[[Composition], MPoly]) -> MPoly:
    out: dict[Composition, RatQT] = {}
    for exp, coeff in f.raw_items():
        image = on_monomial(exp)
        for e, c in image.raw_items():
            value = out.get(e, ZERO) + coeff * c
            if value:
                out[e] = value
            else:
                out.pop(e, None)
    return MPoly._raw(f.nvars, out)


def multiply_linear(f: MPoly, form: dict[int, Scalar]) -> MPoly:
    """f times the linear form sum(c_a * x_a)."""
    total = MPoly.zero(f.nvars)
    for a, c in form.items():
        c = RatQT.coerce(c)

        def raise_exp(exp: Composition, a: int = a, c: RatQT = c) -> tuple[Composition, RatQT]:
            e = list(exp)
            e[a - 1] += 1
            return tuple(e), c

        total = total + transform_monomials(f, raise_exp)
    return total


# Weyl group generators


def apply_s0(f: MPoly) -> MPoly:
    """s_0: x_1 -> q*x_N, x_N -> q^-1*x_1."""
    n = f.nvars
    if n < 2:
        raise ValueError("s_0 needs at least two variables")

    def sub(exp: Composition) -> tuple[Composition, RatQT]:
        e = list(exp)
        e[0], e[n - 1] = exp[n - 1], exp[0]
        return tuple(e), RatQT.q_pow(exp[0] - exp[n - 1])

    return transform_monomials(f, sub)


def apply_omega(f: MPoly, power: int = 1) -> MPoly:
    """
    The cyclic element omega (power=1) or its inverse (power=-1).

    omega substitutes x_i -> x_{i-1} for i > 1 and x_1 -> q*x_N.
    """
    n = f.nvars
    if power == 1:
        def sub(exp: Composition) -> tuple[Composition, RatQT]:
            return exp[1:] + exp[:1], RatQT.q_pow(exp[0])
    elif power == -1:
        def sub(exp: Composition) -> tuple[Composition, RatQT]:
            return exp[-1:] + exp[:-1], RatQT.q_pow(-exp[n - 1])
    else:
        raise ValueError(f"omega power must be +1 or -1, got {power}")
    return transform_monomials(f, sub)


def s0_by_composition(f: MPoly) -> MPoly:
    """s_0 rebuilt from shifts and adjacent transpositions."""
    n = f.nvars
    if n < 2:
        raise ValueError("s_0 needs at least two variables")
    g = apply_shift(apply_shift(f, n, -1), 1, 1)
    for i in list(range(1, n)) + list(range(n - 2, 0, -1)):
        g = apply_transposition(g, i)
    return g


def omega_by_composition(f: MPoly) -> MPoly:
    """omega = s_{N-1}...s_1 tau_1, applied right to left."""
    g = apply_shift(f, 1, 1)
    for i in range(1, f.nvars):
        g = apply_transposition(g, i)
    return g


# Hecke generators


@memoized
def _t_monomial(exp: Composition, i: int) -> MPoly:
    f = MPoly.monomial(exp)
    diff = apply_transposition(f, i) - f
    if not diff:
        return f
    quotient = exact_divide_linear(diff, i, i + 1, ONE)
    return f + multiply_linear(quotient, {i: ONE, i + 1: -T_INV})


@memoized
def _t0_monomial(exp: Composition) -> MPoly:
    n = len(exp)
    f = MPoly.monomial(exp)
    diff = apply_s0(f) - f
    if not diff:
        return f
    quotient = exact_divide_linear(diff, n, 1, Q_INV)
    return f + multiply_linear(quotient, {n: ONE, 1: -(T_INV * Q_INV)})


def apply_T(f: MPoly, i: int) -> MPoly:
    """
    Hecke generator T_i = 1 + (x_i - t^-1 x_{i+1})/(x_i - x_{i+1}) (s_i - 1).

    Args:
        f: Polynomial in N variables
        i: Index in 1..N-1
    """
    if not 1 <= i <= f.nvars - 1:
        raise ValueError(f"T index {i} out of range 1..{f.nvars - 1}")
    return _extend(f, lambda exp: _t_monomial(exp, i))


def apply_T0(f: MPoly) -> MPoly:
    """Affine generator T_0, built on s_0 with the divisor x_N - q^-1 x_1."""
    if f.nvars < 2:
        raise ValueError("T_0 needs at least two variables")
    return _extend(f, _t0_monomial)


def apply_T_inv(f: MPoly, i: int) -> MPoly:
    """T_i^-1 = t*T_i - (t - 1); i = 0 selects T_0^-1."""
    t = RatQT.t_pow(1)
    forward = apply_T0(f) if i == 0 else apply_T(f, i)
    return forward.scale(t) - f.scale(t - 1)


@memoized
def _y_monomial(exp: Composition, i: int) -> MPoly:
    n = len(exp)
    g = MPoly.monomial(exp)
    for j in range(i - 1, 0, -1):
        g = apply_T_inv(g, j)
    g = apply_omega(g, 1)
    for j in range(n - 1, i - 1, -1):
        g = apply_T(g, j)
    return g


def apply_Y(f: MPoly, i: int) -> MPoly:
    """
    Dunkl-Cherednik operator Y_i = T_i...T_{N-1} omega T_1^-1...T_{i-1}^-1.
    """
    if not 1 <= i <= f.nvars:
        raise ValueError(f"Y index {i} out of range 1..{f.nvars}")
    return _extend(f, lambda exp: _y_monomial(exp, i))


def _factor_weights(J: Sequence[int]) -> list[tuple[int, RatQT]]:
    # Factor kappa carries t^(l - kappa); the rightmost factor acts first.
    ell = len(J)
    return [(j, RatQT.t_pow(ell - kappa)) for kappa, j in enumerate(J, start=1)][::-1]


def _as_index_tuple(J: "IndexSet | Sequence[int]", nvars: int) -> tuple[int, ...]:
    if isinstance(J, IndexSet):
        if J.nvars != nvars:
            raise ValueError("index set and polynomial disagree on nvars")
        return J.elems
    return IndexSet.of(nvars, J).elems


def apply_YJu(f: MPoly, J: "IndexSet | Sequence[int]", u: Scalar) -> MPoly:
    """
    Y_{J,u} f = (1 - u t^(l-1) Y_{j1}) ... (1 - u Y_{jl}) f.

    Args:
        f: Polynomial
        J: Index set {j1 < ... < jl}
        u: Exact value of the label
    """
    elems = _as_index_tuple(J, f.nvars)
    u = RatQT.coerce(u)
    g = f
    for j, weight in _factor_weights(elems):
        g = g - apply_Y(g, j).scale(u * weight)
    return g


def apply_YJu_as_u_series(f: MPoly, J: "IndexSet | Sequence[int]") -> ParamPolyResult:
    """
    Coefficients c_0..c_l with Y_{J,u} f = sum u^m c_m.

    Always returns exactly |J| + 1 entries, zero entries included.
    """
    elems = _as_index_tuple(J, f.nvars)
    series = [f]
    for j, weight in _factor_weights(elems):
        images = [apply_Y(c, j).scale(weight) for c in series]
        series = [
            (series[m] if m < len(series) else MPoly.zero(f.nvars))
            - (images[m - 1] if m >= 1 else MPoly.zero(f.nvars))
            for m in range(len(series) + 1)
        ]
    return ParamPolyResult(f.nvars, tuple(series))
