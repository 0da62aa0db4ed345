"""Max-plus scalars.

A tropical scalar is an exact ``Fraction`` or the bottom element ``NEG_INF``.
``NEG_INF`` is a distinct singleton ordered below every rational, so plain
``max``, ``sorted`` and comparisons work on mixed values.
"""

from collections.abc import Iterable
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Any, Union

from tropos.errors import ParseError

_INF_LITERALS = {"-inf", "-infinity", "−∞", "-∞"}


class NegInf:
    """The tropical zero: absorbing for multiplication, neutral for addition."""

    __slots__ = ()
    _instance: "NegInf | None" = None

    def __new__(cls) -> "NegInf":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self) -> tuple[type["NegInf"], tuple[()]]:
        return (NegInf, ())

    def __repr__(self) -> str:
        return "NEG_INF"

    def __str__(self) -> str:
        return "-inf"

    def __hash__(self) -> int:
        return hash("tropos.NEG_INF")

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        if other is self or _is_rational(other):
            return other is not self
        return NotImplemented

    def __le__(self, other: object) -> bool:
        if other is self or _is_rational(other):
            return True
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if other is self or _is_rational(other):
            return False
        return NotImplemented

    def __ge__(self, other: object) -> bool:
        if other is self or _is_rational(other):
            return other is self
        return NotImplemented


NEG_INF = NegInf()
ZERO = Fraction(0)

TropScalar = Union[Fraction, NegInf]


def _is_rational(value: object) -> bool:
    return isinstance(value, (Fraction, int)) and not isinstance(value, bool)


def is_finite(a: TropScalar) -> bool:
    """True unless ``a`` is ``NEG_INF``."""
    return a is not NEG_INF


def trop_add(a: TropScalar, b: TropScalar) -> TropScalar:
    """Tropical sum: ``max(a, b)``."""
    if a is NEG_INF:
        return b
    if b is NEG_INF:
        return a
    return a if a >= b else b


def trop_mul(a: TropScalar, b: TropScalar) -> TropScalar:
    """Tropical product: ``a + b`` with ``NEG_INF`` absorbing."""
    if a is NEG_INF or b is NEG_INF:
        return NEG_INF
    assert isinstance(a, Fraction) and isinstance(b, Fraction)
    return a + b


def trop_sum(values: Iterable[TropScalar]) -> TropScalar:
    """Tropical sum of many values; ``NEG_INF`` for an empty iterable."""
    result: TropScalar = NEG_INF
    for value in values:
        result = trop_add(result, value)
    return result


def trop_prod(values: Iterable[TropScalar]) -> TropScalar:
    """Tropical product of many values; ``0`` for an empty iterable."""
    result: TropScalar = ZERO
    for value in values:
        if value is NEG_INF:
            return NEG_INF
        result = trop_mul(result, value)
    return result


def finite(a: TropScalar) -> Fraction:
    """Narrow ``a`` to a ``Fraction``.

    Raises:
        ValueError: If ``a`` is ``NEG_INF``.
    """
    if not isinstance(a, Fraction):
        raise ValueError("expected a finite tropical scalar, got -inf")
    return a


def to_scalar(value: Any) -> TropScalar:
    """Parse a tropical scalar exactly.

    Accepts ints, Fractions, Decimals, floats (through their shortest decimal
    representation), and strings such as ``"3"``, ``"-3/2"``, ``"0.25"`` or
    ``"-inf"``.

    Raises:
        ParseError: If the value cannot be read as a rational or ``-inf``.
    """
    if value is NEG_INF:
        return NEG_INF
    if isinstance(value, bool):
        raise ParseError(f"Boolean is not a tropical scalar: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ParseError(f"Non-finite decimal: {value}")
        return Fraction(value)
    if isinstance(value, float):
        if value == float("-inf"):
            return NEG_INF
        if value != value or value == float("inf"):
            raise ParseError(f"Unsupported float: {value}")
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        if text.lower() in _INF_LITERALS:
            return NEG_INF
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            pass
        try:
            return Fraction(Decimal(text))
        except (InvalidOperation, ValueError) as e:
            raise ParseError(f"Cannot parse tropical scalar: {value!r}") from e
    raise ParseError(f"Cannot parse tropical scalar of type {type(value).__name__}")


def format_scalar(a: TropScalar) -> str:
    """Canonical string form: ``"-inf"``, ``"3"`` or ``"-3/2"``."""
    return str(a)
