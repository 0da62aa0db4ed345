"""Tropical characteristic polynomials and eigenvalues.

The tropical characteristic polynomial of an n x n matrix is
``f_A(x) = max_k (a_k + (n - k) x)`` where ``a_k`` is the largest weight of a
k x k principal minor. Its eigenvalues are the slopes of the Newton polygon
of the coefficients; the same routine gives the valuations of the roots of a
series polynomial, which is how the two spectra are compared.
"""

import itertools
import logging
import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from tropos.config import enumeration_cap, get_settings, minor_cap
from tropos.errors import CapExceeded, DimensionError, InconsistentData, NotTP
from tropos.types import CcEeReport, EigenvalueRecord

from .positivity import is_tn_trop, is_tp_trop
from .series_field import SeriesMatrix, SeriesRat, det_series, random_positive_lift
from .trop_core import (
    NEG_INF,
    ZERO,
    TropMatrix,
    TropScalar,
    finite,
    format_scalar,
    permanent_assignment,
    trop_mul,
    trop_prod,
    trop_sum,
)

logger = logging.getLogger("tropos.spectral")

Point = tuple[int, Fraction]


# ============================================================================
# Types
# ============================================================================


@dataclass(frozen=True)
class TropCharPoly:
    """Coefficients ``a_0 .. a_n``; ``a_k`` multiplies ``x^(n-k)``."""

    coeffs: tuple[TropScalar, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise DimensionError("A characteristic polynomial needs at least a_0")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: TropScalar) -> TropScalar:
        """``f_A(x) = max_k (a_k + (n - k) x)``."""
        n = self.degree
        return trop_sum(
            trop_mul(a, trop_prod([x] * (n - k))) for k, a in enumerate(self.coeffs)
        )

    def to_strings(self) -> list[str]:
        return [format_scalar(a) for a in self.coeffs]


@dataclass(frozen=True)
class EigenSpectrum:
    """Eigenvalues with multiplicities, largest first and -inf last."""

    eigenvalues: tuple[tuple[TropScalar, int], ...]

    @property
    def size(self) -> int:
        return sum(m for _, m in self.eigenvalues)

    def values(self) -> list[TropScalar]:
        """Eigenvalues repeated by multiplicity, in nonincreasing order."""
        return [value for value, m in self.eigenvalues for _ in range(m)]

    def to_records(self) -> list[EigenvalueRecord]:
        return [
            EigenvalueRecord(value=format_scalar(v), multiplicity=m) for v, m in self.eigenvalues
        ]


# ============================================================================
# Newton polygons
# ============================================================================


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _points(coeffs: Sequence[TropScalar]) -> list[Point]:
    """Finite points ``(n - j, c_j)`` sorted by abscissa."""
    n = len(coeffs) - 1
    return sorted((n - j, finite(c)) for j, c in enumerate(coeffs) if c is not NEG_INF)


def _upper_hull(points: list[Point]) -> list[Point]:
    hull: list[Point] = []
    for p in points:
        # Collinear points are dropped so that equal slopes merge into one segment
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) >= 0:
            hull.pop()
        hull.append(p)
    return hull


def newton_slopes(coeffs: Sequence[TropScalar]) -> EigenSpectrum:
    """Corners of ``x -> max_j (c_j + (n - j) x)`` with multiplicities.

    The points ``(n - j, c_j)`` span an upper concave hull; a hull segment
    from abscissa k1 to k2 contributes the value ``(y1 - y2) / (k2 - k1)``
    with multiplicity ``k2 - k1``. If the smallest finite abscissa is
    ``k > 0``, -inf is a corner of multiplicity k.

    Raises:
        InconsistentData: If the leading coefficient ``c_0`` is -inf.
    """
    if not coeffs or coeffs[0] is NEG_INF:
        raise InconsistentData("Leading coefficient must be finite")
    hull = _upper_hull(_points(coeffs))
    result: list[tuple[TropScalar, int]] = []
    for (k1, y1), (k2, y2) in zip(hull[:-1], hull[1:], strict=True):
        result.append(((y1 - y2) / (k2 - k1), k2 - k1))
    result.sort(key=lambda item: item[0], reverse=True)
    lowest = hull[0][0]
    if lowest > 0:
        result.append((NEG_INF, lowest))
    return EigenSpectrum(tuple(result))


def is_active(p: TropCharPoly, k: int) -> bool:
    """``a_k`` attains ``f_A`` somewhere, i.e. ``(n - k, a_k)`` lies on the upper hull."""
    a = p.coeffs[k]
    if a is NEG_INF:
        return False
    n = p.degree
    x = n - k
    hull = _upper_hull(_points(p.coeffs))
    for (k1, y1), (k2, y2) in zip(hull[:-1], hull[1:], strict=True):
        if k1 <= x <= k2:
            return a >= y1 + (y2 - y1) * (x - k1) / (k2 - k1)
    return any(point == (x, a) for point in hull)


# ============================================================================
# Tropical side
# ============================================================================


def char_poly_trop(A: TropMatrix, cap: int | None = None) -> TropCharPoly:
    """Tropical characteristic polynomial of a square matrix.

    For TN^trop matrices every principal minor is attained by the identity,
    so ``a_k`` is the sum of the k largest diagonal entries. Otherwise every
    principal submatrix is solved as an assignment problem.

    Raises:
        DimensionError: If ``A`` is not square.
        CapExceeded: If the general path is needed and n exceeds the cap.
    """
    if not A.is_square:
        raise DimensionError(f"Characteristic polynomial needs a square matrix, got {A.shape}")
    n = A.rows
    if is_tn_trop(A).tn_trop:
        diagonal = sorted(A.diagonal_entries(), reverse=True)
        coeffs = [trop_prod(diagonal[:k]) for k in range(n + 1)]
        logger.debug("Characteristic polynomial from the sorted diagonal")
        return TropCharPoly(tuple(coeffs))

    limit = enumeration_cap(cap)
    if n > limit:
        raise CapExceeded(n, limit, "principal submatrix enumeration")
    coeffs = [ZERO]
    for k in range(1, n + 1):
        coeffs.append(
            trop_sum(
                permanent_assignment(A.submatrix(subset, subset))
                for subset in itertools.combinations(range(n), k)
            )
        )
    return TropCharPoly(tuple(coeffs))


def tropical_eigenvalues(p: TropCharPoly) -> EigenSpectrum:
    """Corners of ``f_A`` with multiplicities summing to n."""
    return newton_slopes(p.coeffs)


def factored_char_poly_value(diagonal: Sequence[TropScalar], x: TropScalar) -> TropScalar:
    """``sum_i max(x, d_i)``: the product of the linear factors ``x ⊕ d_i``."""
    return trop_prod(trop_sum((x, d)) for d in diagonal)


def weakly_majorized(lower: Sequence[TropScalar], upper: Sequence[TropScalar]) -> bool:
    """Every prefix sum of ``sorted(lower)`` is at most the one of ``sorted(upper)``."""
    if len(lower) != len(upper):
        raise DimensionError("Majorization compares sequences of equal length")
    small = sorted(lower, reverse=True)
    large = sorted(upper, reverse=True)
    return all(
        trop_prod(small[:k]) <= trop_prod(large[:k]) for k in range(1, len(small) + 1)
    )


# ============================================================================
# Series side
# ============================================================================


def char_poly_series(M: SeriesMatrix, cap: int | None = None) -> list[SeriesRat]:
    """``alpha_0 .. alpha_n``: sums of the k x k principal minors, ``alpha_0 = 1``.

    The characteristic polynomial is ``sum_k (-1)^k alpha_k lambda^(n-k)``.

    Raises:
        DimensionError: If ``M`` is not square.
        CapExceeded: If n exceeds the minor cap.
    """
    if not M.is_square:
        raise DimensionError(f"Characteristic polynomial needs a square matrix, got {M.shape}")
    n = M.rows
    limit = minor_cap(cap)
    if n > limit:
        raise CapExceeded(n, limit, "principal minor enumeration")
    alphas = [SeriesRat(1)]
    for k in range(1, n + 1):
        total = SeriesRat(0)
        for subset in itertools.combinations(range(n), k):
            total = total + det_series(M.submatrix(subset, subset))
        alphas.append(total)
    return alphas


def eigen_valuations_via_newton(alphas: Sequence[SeriesRat]) -> EigenSpectrum:
    """Valuations of the roots of ``sum_k (-1)^k alpha_k lambda^(n-k)``.

    Raises:
        InconsistentData: If ``alpha_0 = 0``.
    """
    return newton_slopes([a.valuation for a in alphas])


def verify_cc_ee(
    A: TropMatrix, lift: SeriesMatrix | None = None, seed: int | None = None
) -> CcEeReport:
    """Compare the characteristic polynomial of a positive lift with the tropical one.

    For ``A`` in TP^trop every principal minor of a positive lift has a
    leading term of positive sign, so ``val(alpha_k) = a_k`` and the Newton
    slopes are the tropical eigenvalues.

    Args:
        A: Square TP^trop matrix.
        lift: Lift of ``A`` to use; by default a seeded random positive lift.
        seed: Seed for the random lift; defaults to the configured seed.

    Raises:
        NotTP: If ``A`` is not TP^trop.
        InconsistentData: If ``lift`` does not have valuation ``A``.
    """
    if not A.is_square:
        raise DimensionError(f"Spectral comparison needs a square matrix, got {A.shape}")
    if not is_tp_trop(A).tp_trop:
        raise NotTP("Valuation of the characteristic polynomial is only controlled on TP^trop")
    if lift is None:
        rng = random.Random(get_settings().seed if seed is None else seed)
        lift = random_positive_lift(A, rng)
    elif lift.valuation() != A:
        raise InconsistentData("The given lift does not have the input as valuation")

    poly = char_poly_trop(A)
    alphas = char_poly_series(lift)
    checks = [a.valuation == c for a, c in zip(alphas, poly.coeffs, strict=True)]
    newton = eigen_valuations_via_newton(alphas)
    slopes_match = newton == tropical_eigenvalues(poly)
    passed = all(checks) and slopes_match
    logger.debug(f"Characteristic polynomial comparison: checks={checks} slopes={slopes_match}")
    return CcEeReport(
        lift=lift.to_lists(),
        series_coefficients=[str(a) for a in alphas],
        coefficient_checks=checks,
        newton_eigenvalues=newton.to_records(),
        slopes_match=slopes_match,
        passed=passed,
    )
