"""
Exact elements of the rational function field Q(q,t).

Every RatQT is kept in canonical form: numerator and denominator coprime in
ZZ[q,t] (integer content included) and the denominator's leading
coefficient positive. Equality is therefore a structural comparison.
"""

import math
from fractions import Fraction
from typing import Union

from sympy.polys.rings import PolyElement

from src.coeff.intpoly import (
    QT_RING,
    IntPolyQT,
    evaluate_element,
    format_element,
    parse_element,
)

_ZERO_EL = QT_RING.zero
_ONE_EL = QT_RING.one

Scalar = Union["RatQT", IntPolyQT, Fraction, int]


def _element(value: Union[IntPolyQT, PolyElement, int]) -> PolyElement:
    if isinstance(value, IntPolyQT):
        return value.element
    if isinstance(value, PolyElement):
        return value
    return QT_RING(value)


def _reduce(num: PolyElement, den: PolyElement) -> tuple[PolyElement, PolyElement]:
    """Bring num/den into canonical form."""
    if not den:
        raise ZeroDivisionError("division by zero in Q(q,t)")
    if not num:
        return _ZERO_EL, _ONE_EL
    if den == _ONE_EL:
        return num, den

    if len(den) == 1:
        # Monomial denominators (powers of q and t) dominate the workload.
        ((dq, dt), dc), = den.items()
        dc = int(dc)
        num_items = [(exp, int(c)) for exp, c in num.items()]
        common = math.gcd(dc, *(c for _, c in num_items))
        shift_q = min([dq] + [exp[0] for exp, _ in num_items])
        shift_t = min([dt] + [exp[1] for exp, _ in num_items])
        sign = -1 if dc < 0 else 1
        scale = common * sign
        if scale != 1 or shift_q or shift_t:
            num = QT_RING.from_dict(
                {(a - shift_q, b - shift_t): c // scale for (a, b), c in num_items}
            )
            den = QT_RING.from_dict({(dq - shift_q, dt - shift_t): dc // scale})
        return num, den

    _, num, den = num.cofactors(den)
    if den.LC < 0:
        num, den = -num, -den
    return num, den


class RatQT:
    """
    Immutable element of Q(q,t).

    Supports ``+ - * /`` and integer ``**`` (negative powers included), mixed
    freely with ``int``, ``Fraction`` and ``IntPolyQT`` operands.
    """

    __slots__ = ("_num", "_den")

    def __init__(
        self,
        num: Union[IntPolyQT, PolyElement, int] = 0,
        den: Union[IntPolyQT, PolyElement, int] = 1,
    ):
        self._num, self._den = _reduce(_element(num), _element(den))

    @classmethod
    def _raw(cls, num: PolyElement, den: PolyElement) -> "RatQT":
        """Wrap an already canonical pair without reducing."""
        obj = object.__new__(cls)
        obj._num = num
        obj._den = den
        return obj

    @classmethod
    def coerce(cls, value: Scalar) -> "RatQT":
        """Convert any supported scalar to a RatQT."""
        if isinstance(value, RatQT):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a valid coefficient")
        if isinstance(value, int):
            return cls._raw(QT_RING(value), _ONE_EL)
        if isinstance(value, IntPolyQT):
            return cls._raw(value.element, _ONE_EL)
        if isinstance(value, Fraction):
            return cls(value.numerator, value.denominator)
        raise TypeError(f"cannot convert {type(value).__name__} to RatQT")

    @classmethod
    def monomial(cls, coeff: int, dq: int, dt: int) -> "RatQT":
        """coeff * q^dq * t^dt with possibly negative exponents."""
        num = QT_RING.from_dict({(max(dq, 0), max(dt, 0)): coeff}) if coeff else _ZERO_EL
        den = QT_RING.from_dict({(max(-dq, 0), max(-dt, 0)): 1})
        return cls(num, den)

    @classmethod
    def q_pow(cls, n: int) -> "RatQT":
        return cls.monomial(1, n, 0)

    @classmethod
    def t_pow(cls, n: int) -> "RatQT":
        return cls.monomial(1, 0, n)

    @classmethod
    def parse(cls, text: str) -> "RatQT":
        """Parse ``num`` or ``(num)/(den)``."""
        text = text.strip()
        if "/" in text:
            num_text, _, den_text = text.partition("/")
            return cls(parse_element(num_text.strip().strip("()")),
                       parse_element(den_text.strip().strip("()")))
        return cls(parse_element(text))

    @classmethod
    def from_strings(cls, num: str, den: str = "1") -> "RatQT":
        return cls(parse_element(num), parse_element(den))

    @property
    def num(self) -> IntPolyQT:
        return IntPolyQT(self._num)

    @property
    def den(self) -> IntPolyQT:
        return IntPolyQT(self._den)

    def to_strings(self) -> tuple[str, str]:
        return format_element(self._num), format_element(self._den)

    def is_zero(self) -> bool:
        return not self._num

    def is_one(self) -> bool:
        return self._num == _ONE_EL and self._den == _ONE_EL

    def is_integral(self) -> bool:
        """True iff the value lies in ZZ[q,t]."""
        return self._den == _ONE_EL

    def evaluate(self, q: Union[Fraction, int], t: Union[Fraction, int]) -> Fraction:
        """
        Specialize q and t to exact rationals.

        Raises:
            ZeroDivisionError: If the denominator vanishes at (q, t)
        """
        q, t = Fraction(q), Fraction(t)
        den = evaluate_element(self._den, q, t)
        if den == 0:
            raise ZeroDivisionError(f"denominator {format_element(self._den)} vanishes")
        return evaluate_element(self._num, q, t) / den

    # arithmetic

    def __add__(self, other: Scalar) -> "RatQT":
        try:
            other = RatQT.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        if self._den == other._den:
            if self._den == _ONE_EL:
                return RatQT._raw(self._num + other._num, _ONE_EL)
            return RatQT._raw(*_reduce(self._num + other._num, self._den))
        return RatQT._raw(*_reduce(
            self._num * other._den + other._num * self._den,
            self._den * other._den,
        ))

    __radd__ = __add__

    def __neg__(self) -> "RatQT":
        return RatQT._raw(-self._num, self._den)

    def __sub__(self, other: Scalar) -> "RatQT":
        try:
            other = RatQT.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "RatQT":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "RatQT":
        try:
            other = RatQT.coerce(other)
        except TypeError:
            return NotImplemented
        if not self._num or not other._num:
            return ZERO
        if self._den == _ONE_EL and other._den == _ONE_EL:
            return RatQT._raw(self._num * other._num, _ONE_EL)
        return RatQT._raw(*_reduce(self._num * other._num, self._den * other._den))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "RatQT":
        try:
            other = RatQT.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._num:
            raise ZeroDivisionError("division by zero in Q(q,t)")
        return RatQT._raw(*_reduce(self._num * other._den, self._den * other._num))

    def __rtruediv__(self, other: Scalar) -> "RatQT":
        return RatQT.coerce(other) / self

    def __pow__(self, exponent: int) -> "RatQT":
        if exponent >= 0:
            return RatQT._raw(self._num**exponent, self._den**exponent)
        if not self._num:
            raise ZeroDivisionError("zero raised to a negative power")
        return RatQT._raw(*_reduce(self._den**-exponent, self._num**-exponent))

    def inverse(self) -> "RatQT":
        return self**-1

    # comparison and display

    def __bool__(self) -> bool:
        return bool(self._num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatQT):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, IntPolyQT, Fraction)) and not isinstance(other, bool):
            return self == RatQT.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((
            frozenset((exp, int(c)) for exp, c in self._num.items()),
            frozenset((exp, int(c)) for exp, c in self._den.items()),
        ))

    def __str__(self) -> str:
        num, den = self.to_strings()
        if den == "1":
            return num
        return f"({num})/({den})"

    def __repr__(self) -> str:
        return f"RatQT({str(self)!r})"


ZERO = RatQT._raw(_ZERO_EL, _ONE_EL)
ONE = RatQT._raw(_ONE_EL, _ONE_EL)
Q = RatQT._raw(QT_RING.from_dict({(1, 0): 1}), _ONE_EL)
T = RatQT._raw(QT_RING.from_dict({(0, 1): 1}), _ONE_EL)
