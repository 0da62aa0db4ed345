"""Generalized polynomials in t with rational coefficients and exponents.

A ``GenPoly`` is a finite sum of ``c * t^e``. Terms are kept as a tuple of
``(exponent, coefficient)`` pairs sorted by decreasing exponent with no zero
coefficient, so structural equality is mathematical equality.
"""

import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from sympy import QQ
from sympy.polys.rings import ring

from tropos.modules.trop_core import NEG_INF, TropScalar

Coefficient = Union[Fraction, int]


@dataclass(frozen=True)
class GenPoly:
    """Exact generalized polynomial; the zero polynomial has no terms."""

    terms: tuple[tuple[Fraction, Fraction], ...] = ()

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_dict(
        cls, mapping: Mapping[Fraction, Fraction] | Iterable[tuple[Fraction, Fraction]]
    ) -> "GenPoly":
        """Build from ``{exponent: coefficient}``, merging and dropping zeros."""
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        merged: dict[Fraction, Fraction] = {}
        for exponent, coefficient in items:
            key = Fraction(exponent)
            merged[key] = merged.get(key, Fraction(0)) + Fraction(coefficient)
        return cls(tuple(sorted(((e, c) for e, c in merged.items() if c != 0), reverse=True)))

    @classmethod
    def monomial(cls, coefficient: Coefficient, exponent: Coefficient = 0) -> "GenPoly":
        if coefficient == 0:
            return cls()
        return cls(((Fraction(exponent), Fraction(coefficient)),))

    @classmethod
    def constant(cls, value: Coefficient) -> "GenPoly":
        return cls.monomial(value, 0)

    # ------------------------------------------------------------------
    # Properties
    # ------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def valuation(self) -> TropScalar:
        """Largest exponent present; -inf for the zero polynomial."""
        return self.terms[0][0] if self.terms else NEG_INF

    @property
    def min_exponent(self) -> Fraction:
        if not self.terms:
            raise ValueError("The zero polynomial has no exponents")
        return self.terms[-1][0]

    @property
    def leading_coefficient(self) -> Fraction:
        return self.terms[0][1] if self.terms else Fraction(0)

    @property
    def sign(self) -> int:
        """Sign of the leading coefficient: 1, 0 or -1."""
        lc = self.leading_coefficient
        return (lc > 0) - (lc < 0)

    def coefficient(self, exponent: Coefficient) -> Fraction:
        key = Fraction(exponent)
        for e, c in self.terms:
            if e == key:
                return c
        return Fraction(0)

    def as_dict(self) -> dict[Fraction, Fraction]:
        return dict(self.terms)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other: "GenPoly") -> "GenPoly":
        if not isinstance(other, GenPoly):
            return NotImplemented
        return GenPoly.from_dict(list(self.terms) + list(other.terms))

    def __neg__(self) -> "GenPoly":
        return GenPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "GenPoly") -> "GenPoly":
        if not isinstance(other, GenPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "GenPoly") -> "GenPoly":
        if not isinstance(other, GenPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return GenPoly()
        return GenPoly.from_dict(
            [(e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms]
        )

    def scale(self, factor: Coefficient) -> "GenPoly":
        if factor == 0:
            return GenPoly()
        return GenPoly(tuple((e, c * factor) for e, c in self.terms))

    def shift(self, exponent: Coefficient) -> "GenPoly":
        """Multiply by ``t^exponent``."""
        return GenPoly(tuple((e + exponent, c) for e, c in self.terms))

    def evaluate(self, t: Coefficient) -> Fraction:
        """Substitute a rational for t; integer exponents only.

        Raises:
            ValueError: If an exponent is not an integer or t is zero with a
                negative exponent present.
        """
        value = Fraction(t)
        total = Fraction(0)
        for e, c in self.terms:
            if e.denominator != 1:
                raise ValueError(f"Cannot evaluate t^{e} at a rational point")
            if value == 0 and e < 0:
                raise ValueError("Negative power of t evaluated at t = 0")
            total += c * value ** int(e)
        return total

    # ------------------------------------------------------------------
    # Formatting
    # ------------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for index, (e, c) in enumerate(self.terms):
            magnitude = abs(c)
            if e == 0:
                body = str(magnitude)
            else:
                power = "t" if e == 1 else f"t^{_format_exponent(e)}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if index == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)


def _format_exponent(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e})"


# ============================================================================
# Common factors
# ============================================================================
#
# Quotients are reduced in the sparse ring Q[s] with s = t^(1/L), L the common
# denominator of all exponents, after shifting both sides to minimal exponent
# 0. Coprime pairs stay coprime under s -> s^k, so the reduced pair does not
# depend on L.

_RING, _ = ring("s", QQ)

# s-degree above which common factors are left in place
GCD_DEGREE_LIMIT = 4096


def common_denominator(*polys: GenPoly) -> int:
    """Least common denominator of all exponents occurring in ``polys``."""
    denominator = 1
    for poly in polys:
        for e, _ in poly.terms:
            denominator = math.lcm(denominator, e.denominator)
    return denominator


def _span(poly: GenPoly, scale: int) -> int:
    return int((poly.terms[0][0] - poly.min_exponent) * scale)


def _to_ring(poly: GenPoly, scale: int) -> Any:
    low = poly.min_exponent
    return _RING.from_dict(
        {(int((e - low) * scale),): QQ(c.numerator, c.denominator) for e, c in poly.terms}
    )


def _from_ring(element: Any, scale: int, low: Fraction) -> GenPoly:
    return GenPoly.from_dict(
        (low + Fraction(k, scale), Fraction(int(c.numerator), int(c.denominator)))
        for (k,), c in element.terms()
    )


def reduce_fraction(num: GenPoly, den: GenPoly) -> tuple[GenPoly, GenPoly]:
    """Normalize ``num / den``.

    The common monomial factor is always divided out and the denominator made
    monic with minimal exponent 0. The polynomial gcd is cancelled as well
    unless either side spans more than ``GCD_DEGREE_LIMIT`` powers of s.

    Raises:
        ZeroDivisionError: If ``den`` is zero.
    """
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    if num.is_zero:
        return GenPoly(), GenPoly.constant(1)
    if den.is_monomial:
        ((e, c),) = den.terms
        return num.shift(-e).scale(1 / c), GenPoly.constant(1)

    scale = common_denominator(num, den)
    shift = num.min_exponent - den.min_exponent
    if max(_span(num, scale), _span(den, scale)) > GCD_DEGREE_LIMIT:
        num, den = num.shift(-den.min_exponent), den.shift(-den.min_exponent)
    else:
        _, f, g = _to_ring(num, scale).cofactors(_to_ring(den, scale))
        num, den = _from_ring(f, scale, shift), _from_ring(g, scale, Fraction(0))
    lead = den.leading_coefficient
    return num.scale(1 / lead), den.scale(1 / lead)
