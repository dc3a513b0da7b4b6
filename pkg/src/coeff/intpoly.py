"""
Integer-coefficient polynomials in the two parameters q and t.

The ring itself is sympy's sparse ``ZZ[q,t]``; this module adds the canonical
string form used by every serializer and a parser for the same grammar.
"""

import re
from fractions import Fraction
from typing import Iterator, Union

from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement, ring

QT_RING, Q_GEN, T_GEN = ring("q,t", ZZ)

Exponent = tuple[int, int]

_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_FACTOR_RE = re.compile(r"^(?:(\d+)|([qt])(?:\^(\d+))?)$")


def _as_element(value: Union["IntPolyQT", PolyElement, int]) -> PolyElement:
    if isinstance(value, IntPolyQT):
        return value.element
    if isinstance(value, PolyElement):
        if value.ring != QT_RING:
            raise ValueError("polynomial belongs to a different ring")
        return value
    if isinstance(value, int):
        return QT_RING(value)
    raise TypeError(f"cannot convert {type(value).__name__} to IntPolyQT")


def format_element(poly: PolyElement) -> str:
    """
    Render a ZZ[q,t] element in canonical (ascending lexicographic) order.

    Args:
        poly: Ring element

    Returns:
        String such as ``1 - q*t + q^2*t^3``
    """
    if not poly:
        return "0"

    pieces: list[str] = []
    for (dq, dt), coeff in sorted(poly.items()):
        coeff = int(coeff)
        factors = []
        if dq:
            factors.append("q" if dq == 1 else f"q^{dq}")
        if dt:
            factors.append("t" if dt == 1 else f"t^{dt}")
        magnitude = abs(coeff)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(magnitude)] + factors)

        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(pieces)


def parse_element(text: str) -> PolyElement:
    """
    Parse the canonical polynomial grammar back into a ring element.

    Terms may appear in any order; repeated monomials are summed.

    Raises:
        ValueError: On any token outside the grammar
    """
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty polynomial string")

    terms: dict[Exponent, int] = {}
    position = 0
    for match in _TERM_RE.finditer(compact):
        if match.start() != position:
            raise ValueError(f"malformed polynomial: {text!r}")
        position = match.end()
        sign = -1 if match.group(1) == "-" else 1
        coeff = 1
        dq = dt = 0
        for factor in match.group(2).split("*"):
            token = _FACTOR_RE.match(factor)
            if token is None:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            number, gen, power = token.groups()
            if number is not None:
                coeff *= int(number)
            elif gen == "q":
                dq += int(power) if power else 1
            else:
                dt += int(power) if power else 1
        terms[(dq, dt)] = terms.get((dq, dt), 0) + sign * coeff
    if position != len(compact):
        raise ValueError(f"malformed polynomial: {text!r}")

    return QT_RING.from_dict({exp: c for exp, c in terms.items() if c})


def evaluate_element(poly: PolyElement, q: Fraction, t: Fraction) -> Fraction:
    """Evaluate a ring element at exact rational q and t."""
    total = Fraction(0)
    for (dq, dt), coeff in poly.items():
        total += int(coeff) * q**dq * t**dt
    return total


class IntPolyQT:
    """
    Immutable polynomial in q, t with integer coefficients.

    No zero coefficient is ever stored; iteration and printing use the
    canonical lexicographic order on (deg_q, deg_t).
    """

    __slots__ = ("_element",)

    def __init__(self, value: Union["IntPolyQT", PolyElement, int] = 0):
        self._element = _as_element(value)

    @classmethod
    def from_terms(cls, terms: dict[Exponent, int]) -> "IntPolyQT":
        """Build from a map (deg_q, deg_t) -> integer coefficient."""
        for dq, dt in terms:
            if dq < 0 or dt < 0:
                raise ValueError("IntPolyQT exponents must be non-negative")
        return cls(QT_RING.from_dict({exp: c for exp, c in terms.items() if c}))

    @classmethod
    def parse(cls, text: str) -> "IntPolyQT":
        return cls(parse_element(text))

    @property
    def element(self) -> PolyElement:
        return self._element

    @property
    def terms(self) -> dict[Exponent, int]:
        return {exp: int(c) for exp, c in sorted(self._element.items())}

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self.terms.items())

    def is_zero(self) -> bool:
        return not self._element

    def leading_coefficient(self) -> int:
        """Coefficient of the largest monomial in canonical order."""
        if not self._element:
            return 0
        return int(self._element.LC)

    def evaluate(self, q: Fraction, t: Fraction) -> Fraction:
        return evaluate_element(self._element, Fraction(q), Fraction(t))

    def __add__(self, other: Union["IntPolyQT", int]) -> "IntPolyQT":
        return IntPolyQT(self._element + _as_element(other))

    __radd__ = __add__

    def __sub__(self, other: Union["IntPolyQT", int]) -> "IntPolyQT":
        return IntPolyQT(self._element - _as_element(other))

    def __rsub__(self, other: Union["IntPolyQT", int]) -> "IntPolyQT":
        return IntPolyQT(_as_element(other) - self._element)

    def __mul__(self, other: Union["IntPolyQT", int]) -> "IntPolyQT":
        return IntPolyQT(self._element * _as_element(other))

    __rmul__ = __mul__

    def __neg__(self) -> "IntPolyQT":
        return IntPolyQT(-self._element)

    def __pow__(self, exponent: int) -> "IntPolyQT":
        if exponent < 0:
            raise ValueError("IntPolyQT only supports non-negative powers")
        return IntPolyQT(self._element**exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolyQT):
            return self._element == other._element
        if isinstance(other, int):
            return self._element == QT_RING(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset((exp, int(c)) for exp, c in self._element.items()))

    def __str__(self) -> str:
        return format_element(self._element)

    def __repr__(self) -> str:
        return f"IntPolyQT({str(self)!r})"
