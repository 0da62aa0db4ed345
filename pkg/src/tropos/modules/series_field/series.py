"""Quotients of generalized polynomials: the ordered valued field K.

``SeriesRat`` pairs are normalized (monomial factor divided out, denominator
monic with minimal exponent 0, common factors cancelled in the sympy ring).
Equality is decided by cross-multiplication and the hash reads the valuation
and leading coefficient, so both hold for unreduced pairs too. The order is
the one of the real closed field of Puiseux series: ``f > 0`` iff the leading
coefficient of ``f`` is positive.
"""

import re
from enum import Enum
from fractions import Fraction
from tokenize import TokenError
from typing import Any, Union

from sympy import Basic, Symbol, SympifyError
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    rationalize,
    standard_transformations,
)

from tropos.errors import DivisionByZeroError, ParseError
from tropos.modules.trop_core import NEG_INF, TropScalar

from .genpoly import GenPoly, reduce_fraction

Operand = Union["SeriesRat", Fraction, int]


class Sign(str, Enum):
    """Sign of a field element."""

    POSITIVE = "positive"
    ZERO = "zero"
    NEGATIVE = "negative"


class SeriesRat:
    """An exact element ``num / den`` of K."""

    __slots__ = ("num", "den")

    num: GenPoly
    den: GenPoly

    def __init__(
        self, num: GenPoly | Fraction | int = 0, den: GenPoly | Fraction | int = 1
    ) -> None:
        num_poly = num if isinstance(num, GenPoly) else GenPoly.constant(num)
        den_poly = den if isinstance(den, GenPoly) else GenPoly.constant(den)
        if den_poly.is_zero:
            raise DivisionByZeroError("SeriesRat with zero denominator")
        reduced_num, reduced_den = reduce_fraction(num_poly, den_poly)
        object.__setattr__(self, "num", reduced_num)
        object.__setattr__(self, "den", reduced_den)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("SeriesRat is immutable")

    def __reduce__(self) -> tuple[type["SeriesRat"], tuple[GenPoly, GenPoly]]:
        return (SeriesRat, (self.num, self.den))

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def monomial(cls, coefficient: Fraction | int, exponent: Fraction | int = 0) -> "SeriesRat":
        """``coefficient * t^exponent``."""
        return cls(GenPoly.monomial(coefficient, exponent))

    @classmethod
    def t_power(cls, exponent: TropScalar) -> "SeriesRat":
        """The cross-section ``y -> t^y``, sending -inf to 0."""
        if exponent is NEG_INF:
            return cls(0)
        return cls(GenPoly.monomial(1, exponent))  # type: ignore[arg-type]

    # ------------------------------------------------------------------
    # Properties
    # ------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def valuation(self) -> TropScalar:
        """``val(num) - val(den)``; -inf for zero."""
        if self.num.is_zero:
            return NEG_INF
        return self.num.valuation - self.den.valuation  # type: ignore[operator]

    @property
    def sign(self) -> Sign:
        # den has leading coefficient 1
        s = self.num.sign
        if s > 0:
            return Sign.POSITIVE
        if s < 0:
            return Sign.NEGATIVE
        return Sign.ZERO

    @property
    def is_positive(self) -> bool:
        return self.num.sign > 0

    @property
    def is_nonnegative(self) -> bool:
        return self.num.sign >= 0

    @property
    def leading_coefficient(self) -> Fraction:
        return self.num.leading_coefficient

    def evaluate(self, t: Fraction | int) -> Fraction:
        """Substitute a rational for t (integer exponents only)."""
        denominator = self.den.evaluate(t)
        if denominator == 0:
            raise DivisionByZeroError(f"Denominator vanishes at t = {t}")
        return self.num.evaluate(t) / denominator

    # ------------------------------------------------------------------
    # Field operations
    # ------------------------------------------------------------------

    @staticmethod
    def _coerce(other: Any) -> "SeriesRat | None":
        if isinstance(other, SeriesRat):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return SeriesRat(Fraction(other))
        return None

    def __add__(self, other: Operand) -> "SeriesRat":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.den == rhs.den:
            return SeriesRat(self.num + rhs.num, self.den)
        return SeriesRat(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)

    __radd__ = __add__

    def __neg__(self) -> "SeriesRat":
        return SeriesRat(-self.num, self.den)

    def __sub__(self, other: Operand) -> "SeriesRat":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Operand) -> "SeriesRat":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Operand) -> "SeriesRat":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return SeriesRat(self.num * rhs.num, self.den * rhs.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> "SeriesRat":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs.is_zero:
            raise DivisionByZeroError("Division by zero in the series field")
        return SeriesRat(self.num * rhs.den, self.den * rhs.num)

    def __rtruediv__(self, other: Operand) -> "SeriesRat":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    def __pow__(self, exponent: int) -> "SeriesRat":
        if exponent < 0:
            return SeriesRat(1) / (self ** -exponent)
        result = SeriesRat(1)
        for _ in range(exponent):
            result = result * self
        return result

    # ------------------------------------------------------------------
    # Equality and order
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.den == rhs.den:
            return self.num == rhs.num
        return self.num * rhs.den == rhs.num * self.den

    def __hash__(self) -> int:
        return hash((self.valuation, self.leading_coefficient))

    def __lt__(self, other: Operand) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (rhs - self).is_positive

    def __le__(self, other: Operand) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (rhs - self).is_nonnegative

    def __gt__(self, other: Operand) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).is_positive

    def __ge__(self, other: Operand) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).is_nonnegative

    # ------------------------------------------------------------------
    # Formatting
    # ------------------------------------------------------------------

    def __str__(self) -> str:
        if self.den == GenPoly.constant(1):
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"SeriesRat({str(self)!r})"


def valuation(a: SeriesRat) -> TropScalar:
    """Valuation of a field element; -inf for zero."""
    return a.valuation


def sign_of(a: SeriesRat) -> Sign:
    """Sign of a field element, read from its leading coefficient."""
    return a.sign


# ============================================================================
# Literal parsing
# ============================================================================
#
# Literals are read by sympy with "^" as power, so "t^3/2" is t^3 / 2 and
# fractional exponents need parentheses: "t^(3/2)". Only t takes fractional
# powers; compound groups take integer ones.

_T = Symbol("t", positive=True)
_LITERAL = re.compile(r"[0-9t.\s+\-*/^()]+")
_TRANSFORMATIONS = standard_transformations + (convert_xor, rationalize)


def _fraction(value: Basic) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def _from_expr(expr: Basic, text: str) -> SeriesRat:
    if expr.is_Rational:
        return SeriesRat(_fraction(expr))
    if expr == _T:
        return SeriesRat.monomial(1, 1)
    if expr.is_Add:
        return sum((_from_expr(arg, text) for arg in expr.args), SeriesRat(0))
    if expr.is_Mul:
        product = SeriesRat(1)
        for arg in expr.args:
            product = product * _from_expr(arg, text)
        return product
    if expr.is_Pow:
        base, exponent = expr.args
        if not exponent.is_Rational:
            raise ParseError(f"Exponent {exponent} in series literal {text!r} is not rational")
        power = _fraction(exponent)
        if base == _T:
            return SeriesRat.monomial(1, power)
        if power.denominator != 1:
            raise ParseError(f"Fractional power of a compound expression in {text!r}")
        return _from_expr(base, text) ** int(power)
    raise ParseError(f"Unsupported term {expr} in series literal {text!r}")


def parse_series(value: Any) -> SeriesRat:
    """Parse a series literal such as ``"1 - t^-1"``, ``"2*t^(3/2)"`` or ``"(t+2)/(t)"``.

    Ints and Fractions are accepted as constants.

    Raises:
        ParseError: If the literal is malformed.
    """
    if isinstance(value, SeriesRat):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return SeriesRat(Fraction(value))
    if isinstance(value, float):
        return SeriesRat(Fraction(repr(value)))
    if not isinstance(value, str):
        raise ParseError(f"Cannot parse series literal of type {type(value).__name__}")
    text = value.replace("−", "-").replace("·", "*")
    if not text.strip():
        raise ParseError("Empty series literal")
    if not _LITERAL.fullmatch(text):
        raise ParseError(f"Unexpected character in series literal {value!r}")
    try:
        expr = parse_expr(text, local_dict={"t": _T}, transformations=_TRANSFORMATIONS)
    except (SympifyError, SyntaxError, TokenError, TypeError) as e:
        raise ParseError(f"Malformed series literal {value!r}") from e
    try:
        return _from_expr(expr, value)
    except DivisionByZeroError as e:
        raise ParseError(f"Division by zero in series literal {value!r}") from e
