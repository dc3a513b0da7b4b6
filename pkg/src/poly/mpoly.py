"""
Sparse multivariate polynomials in x_1..x_N over Q(q,t).

An MPoly is a map from exponent vectors (compositions of fixed length N) to
non-zero RatQT coefficients. Values are immutable; every operator in the
package builds new polynomials from the primitive motions defined here:
adjacent transposition, q-shift of one variable and exact division by a
linear form x_a - c*x_b.
"""

from typing import Callable, Iterable, Iterator, Mapping, Optional, Union

from src.coeff.ratqt import ONE, ZERO, RatQT, Scalar

Composition = tuple[int, ...]


class InexactDivisionError(ArithmeticError):
    """Raised when a polynomial division leaves a non-zero remainder."""


def _check_composition(exp: Iterable[int], nvars: int) -> Composition:
    exp = tuple(int(e) for e in exp)
    if len(exp) != nvars:
        raise ValueError(f"exponent {exp} does not have length {nvars}")
    if any(e < 0 for e in exp):
        raise ValueError(f"exponent {exp} has a negative entry")
    return exp


class MPoly:
    """
    Immutable polynomial in ``nvars`` variables with RatQT coefficients.

    Arithmetic between polynomials of different arity raises ValueError;
    there is no implicit embedding.
    """

    __slots__ = ("_nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Iterable[int], Scalar]] = None):
        if nvars < 0:
            raise ValueError(f"nvars must be non-negative, got {nvars}")
        self._nvars = nvars
        clean: dict[Composition, RatQT] = {}
        for exp, coeff in (terms or {}).items():
            exp = _check_composition(exp, nvars)
            value = clean.get(exp, ZERO) + RatQT.coerce(coeff)
            if value:
                clean[exp] = value
            else:
                clean.pop(exp, None)
        self._terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Composition, RatQT]) -> "MPoly":
        obj = object.__new__(cls)
        obj._nvars = nvars
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: Scalar = 1) -> "MPoly":
        value = RatQT.coerce(value)
        return cls._raw(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: Scalar = 1) -> "MPoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MPoly":
        """The coordinate x_i (1-based)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls._raw(nvars, {tuple(exp): ONE})

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> dict[Composition, RatQT]:
        """Copy of the term map in canonical (descending lex) order."""
        return dict(self.items())

    def items(self) -> list[tuple[Composition, RatQT]]:
        return sorted(self._terms.items(), reverse=True)

    def raw_items(self):
        """Term pairs in storage order (no sorting)."""
        return self._terms.items()

    def coefficient(self, exp: Iterable[int]) -> RatQT:
        return self._terms.get(tuple(exp), ZERO)

    def __iter__(self) -> Iterator[Composition]:
        return iter(sorted(self._terms, reverse=True))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(exp) for exp in self._terms), default=-1)

    def homogeneous_part(self, degree: int) -> "MPoly":
        return MPoly._raw(
            self._nvars, {e: c for e, c in self._terms.items() if sum(e) == degree}
        )

    def map_coefficients(self, fn: Callable[[RatQT], RatQT]) -> "MPoly":
        out: dict[Composition, RatQT] = {}
        for exp, coeff in self._terms.items():
            value = fn(coeff)
            if value:
                out[exp] = value
        return MPoly._raw(self._nvars, out)

    # arithmetic

    def _same_arity(self, other: "MPoly") -> None:
        if other._nvars != self._nvars:
            raise ValueError(
                f"cannot combine polynomials in {self._nvars} and {other._nvars} variables"
            )

    def _lift(self, other: object) -> Optional["MPoly"]:
        if isinstance(other, MPoly):
            self._same_arity(other)
            return other
        try:
            return MPoly.constant(self._nvars, RatQT.coerce(other))
        except TypeError:
            return None

    def __add__(self, other: object) -> "MPoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            value = out.get(exp, ZERO) + coeff
            if value:
                out[exp] = value
            else:
                out.pop(exp, None)
        return MPoly._raw(self._nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: object) -> "MPoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "MPoly":
        return (-self) + other

    def scale(self, factor: Scalar) -> "MPoly":
        factor = RatQT.coerce(factor)
        if not factor:
            return MPoly.zero(self._nvars)
        if factor.is_one():
            return self
        return MPoly._raw(self._nvars, {e: c * factor for e, c in self._terms.items()})

    def __mul__(self, other: object) -> "MPoly":
        if not isinstance(other, MPoly):
            try:
                return self.scale(RatQT.coerce(other))
            except TypeError:
                return NotImplemented
        self._same_arity(other)
        out: dict[Composition, RatQT] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                value = out.get(exp, ZERO) + c1 * c2
                if value:
                    out[exp] = value
                else:
                    out.pop(exp, None)
        return MPoly._raw(self._nvars, out)

    def __rmul__(self, other: object) -> "MPoly":
        try:
            return self.scale(RatQT.coerce(other))
        except TypeError:
            return NotImplemented

    def __truediv__(self, other: Scalar) -> "MPoly":
        return self.scale(1 / RatQT.coerce(other))

    def __pow__(self, exponent: int) -> "MPoly":
        if exponent < 0:
            raise ValueError("MPoly only supports non-negative powers")
        result = MPoly.constant(self._nvars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MPoly):
            return self._nvars == other._nvars and self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self == MPoly.constant(self._nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._nvars, frozenset(self._terms.items())))

    # serialization

    def to_json_dict(self) -> dict:
        """JSON form: nvars plus terms in canonical monomial order."""
        terms = []
        for exp, coeff in self.items():
            num, den = coeff.to_strings()
            terms.append({"exp": list(exp), "num": num, "den": den})
        return {"nvars": self._nvars, "terms": terms}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "MPoly":
        nvars = int(data["nvars"])
        terms = {}
        for term in data["terms"]:
            terms[tuple(term["exp"])] = RatQT.from_strings(term["num"], term.get("den", "1"))
        return cls(nvars, terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exp, coeff in self.items():
            monomial = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exp) if e
            )
            if not monomial:
                pieces.append(f"({coeff})")
            elif coeff.is_one():
                pieces.append(monomial)
            else:
                pieces.append(f"({coeff})*{monomial}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"MPoly(nvars={self._nvars}, {str(self)})"


def as_mpoly(value: Union[MPoly, Scalar], nvars: int) -> MPoly:
    if isinstance(value, MPoly):
        if value.nvars != nvars:
            raise ValueError(f"expected a polynomial in {nvars} variables, got {value.nvars}")
        return value
    return MPoly.constant(nvars, value)


def _check_index(i: int, low: int, high: int, what: str) -> None:
    if not low <= i <= high:
        raise ValueError(f"{what} index {i} out of range {low}..{high}")


def transform_monomials(
    f: MPoly,
    fn: Callable[[Composition], tuple[Composition, RatQT]],
) -> MPoly:
    """
    Apply a monomial substitution: each x^e becomes weight * x^e'.

    ``fn`` maps e to (e', weight). Used for every linear substitution of
    variables (transpositions, shifts, s_0, omega).
    """
    out: dict[Composition, RatQT] = {}
    for exp, coeff in f._terms.items():
        new_exp, weight = fn(exp)
        value = coeff if weight is ONE else coeff * weight
        total = out.get(new_exp, ZERO) + value
        if total:
            out[new_exp] = total
        else:
            out.pop(new_exp, None)
    return MPoly._raw(f.nvars, out)


def apply_transposition(f: MPoly, i: int) -> MPoly:
    """s_i: swap the exponents of x_i and x_{i+1}."""
    _check_index(i, 1, f.nvars - 1, "transposition")

    def swap(exp: Composition) -> tuple[Composition, RatQT]:
        e = list(exp)
        e[i - 1], e[i] = e[i], e[i - 1]
        return tuple(e), ONE

    return transform_monomials(f, swap)


def apply_shift(f: MPoly, i: int, power: int = 1) -> MPoly:
    """tau_i^power: x_i -> q^power * x_i."""
    _check_index(i, 1, f.nvars, "shift")
    if power == 0:
        return f
    return transform_monomials(f, lambda exp: (exp, RatQT.q_pow(power * exp[i - 1])))


def exact_divide_linear(f: MPoly, a: int, b: int, c: Scalar = 1) -> MPoly:
    """
    Quotient of f by (x_a - c*x_b).

    Terms are grouped by the exponents of the other variables together with
    the total degree in (x_a, x_b); each group is a homogeneous binary form
    and is divided by synthetic division.

    Raises:
        InexactDivisionError: If the remainder is not zero
    """
    _check_index(a, 1, f.nvars, "variable")
    _check_index(b, 1, f.nvars, "variable")
    if a == b:
        raise ValueError("divisor variables must differ")
    c = RatQT.coerce(c)

    groups: dict[tuple[Composition, int], dict[int, RatQT]] = {}
    for exp, coeff in f._terms.items():
        rest = tuple(e for k, e in enumerate(exp) if k not in (a - 1, b - 1))
        d = exp[a - 1] + exp[b - 1]
        groups.setdefault((rest, d), {})[exp[a - 1]] = coeff

    out: dict[Composition, RatQT] = {}
    for (rest, d), coeffs in groups.items():
        # p_i = q_{i-1} - c*q_i, solved from the top power of x_a down.
        carry = ZERO
        for i in range(d, 0, -1):
            carry = coeffs.get(i, ZERO) + c * carry if carry else coeffs.get(i, ZERO)
            if carry:
                exp = list(rest)
                lo, hi = sorted((a - 1, b - 1))
                exp.insert(lo, 0)
                exp.insert(hi, 0)
                exp[a - 1] = i - 1
                exp[b - 1] = d - i
                out[tuple(exp)] = carry
        remainder = coeffs.get(0, ZERO) + c * carry
        if remainder:
            raise InexactDivisionError(
                f"x{a} - ({c})*x{b} does not divide the polynomial"
            )
    return MPoly._raw(f.nvars, out)


def exact_divide(f: MPoly, i: int) -> MPoly:
    """Quotient of f by (x_i - x_{i+1})."""
    _check_index(i, 1, f.nvars - 1, "division")
    return exact_divide_linear(f, i, i + 1, ONE)


def is_symmetric(f: MPoly) -> bool:
    """True iff f is fixed by every adjacent transposition."""
    return all(apply_transposition(f, i) == f for i in range(1, f.nvars))
