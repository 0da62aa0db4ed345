"""Matrices over the series field: determinants, lifts and positivity tests."""

import itertools
import logging
import random
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from tropos.config import minor_cap
from tropos.errors import CapExceeded, DimensionError, InconsistentData
from tropos.modules.trop_core import NEG_INF, TropMatrix, permutation_sign

from .series import SeriesRat, parse_series

logger = logging.getLogger("tropos.series_field")


@dataclass(frozen=True)
class SeriesMatrix:
    """Dense n x m matrix of ``SeriesRat`` entries, 0-based indices."""

    entries: tuple[tuple[SeriesRat, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise DimensionError("A series matrix needs at least one row and one column")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise DimensionError("Ragged series matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Any]]) -> "SeriesMatrix":
        """Build from nested iterables of SeriesRat, numbers or series literals."""
        return cls(tuple(tuple(parse_series(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "SeriesMatrix":
        return cls(
            tuple(tuple(SeriesRat(1 if i == j else 0) for j in range(n)) for i in range(n))
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> SeriesRat:
        i, j = index
        return self.entries[i][j]

    def submatrix(self, row_set: Sequence[int], col_set: Sequence[int]) -> "SeriesMatrix":
        return SeriesMatrix(tuple(tuple(self.entries[i][j] for j in col_set) for i in row_set))

    def transpose(self) -> "SeriesMatrix":
        return SeriesMatrix(tuple(zip(*self.entries, strict=True)))

    def __matmul__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        if self.cols != other.rows:
            raise DimensionError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        columns = other.transpose().entries
        return SeriesMatrix(
            tuple(
                tuple(
                    sum((a * b for a, b in zip(row, col, strict=True)), SeriesRat(0))
                    for col in columns
                )
                for row in self.entries
            )
        )

    def valuation(self) -> TropMatrix:
        """Entrywise valuation."""
        return TropMatrix(tuple(tuple(v.valuation for v in row) for row in self.entries))

    def evaluate(self, t: Fraction | int) -> list[list[Fraction]]:
        return [[v.evaluate(t) for v in row] for row in self.entries]

    def to_lists(self) -> list[list[str]]:
        return [[str(v) for v in row] for row in self.entries]


def valuation_matrix(M: SeriesMatrix) -> TropMatrix:
    """Entrywise valuation of a series matrix."""
    return M.valuation()


# ============================================================================
# Determinants
# ============================================================================


def det_series(M: SeriesMatrix) -> SeriesRat:
    """Exact determinant by Bareiss fraction-free elimination with row swaps.

    Raises:
        DimensionError: If ``M`` is not square.
    """
    if not M.is_square:
        raise DimensionError(f"Determinant needs a square matrix, got {M.rows}x{M.cols}")
    n = M.rows
    a = [list(row) for row in M.entries]
    sign = 1
    previous = SeriesRat(1)
    for k in range(n - 1):
        if a[k][k].is_zero:
            pivot_row = next((r for r in range(k + 1, n) if not a[r][k].is_zero), None)
            if pivot_row is None:
                return SeriesRat(0)
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / previous
        previous = pivot
    result = a[n - 1][n - 1]
    return result if sign == 1 else -result


def det_laplace(M: SeriesMatrix) -> SeriesRat:
    """Determinant as a signed sum over permutations; the oracle for ``det_series``."""
    if not M.is_square:
        raise DimensionError(f"Determinant needs a square matrix, got {M.rows}x{M.cols}")
    total = SeriesRat(0)
    for perm in itertools.permutations(range(M.rows)):
        term = SeriesRat(permutation_sign(perm))
        for i, j in enumerate(perm):
            term = term * M.entries[i][j]
            if term.is_zero:
                break
        total = total + term
    return total


def iter_minors(M: SeriesMatrix) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All pairs (I, J) of equal-size index sets, by size then lexicographically."""
    for size in range(1, min(M.rows, M.cols) + 1):
        for row_set in itertools.combinations(range(M.rows), size):
            for col_set in itertools.combinations(range(M.cols), size):
                yield row_set, col_set


# ============================================================================
# Lifts
# ============================================================================


def canonical_lift(A: TropMatrix) -> SeriesMatrix:
    """Entrywise monomial lift ``t^A[i][j]``, with -inf lifted to 0."""
    return SeriesMatrix(tuple(tuple(SeriesRat.t_power(v) for v in row) for row in A.entries))


def hadamard_lift(A: TropMatrix, B: SeriesMatrix) -> SeriesMatrix:
    """Hadamard product ``B * t^A`` (entries ``B[i][j] * t^A[i][j]``).

    Raises:
        DimensionError: If the shapes differ.
    """
    if A.shape != B.shape:
        raise DimensionError(f"Shapes differ: {A.shape} vs {B.shape}")
    return SeriesMatrix(
        tuple(
            tuple(b * SeriesRat.t_power(a) for a, b in zip(row_a, row_b, strict=True))
            for row_a, row_b in zip(A.entries, B.entries, strict=True)
        )
    )


def tn2c_threshold(n: int, m: int) -> Fraction:
    """Bound C above which every n x m matrix in TN_{2,C} is totally nonnegative.

    ``max(1, (min(n, m) - 1)^2)``.
    """
    return Fraction(max(1, (min(n, m) - 1) ** 2))


def tn2c_constant(n: int, m: int) -> Fraction:
    """Constant C of the Vandermonde matrix used for Hadamard lifts.

    ``max(1, (max(n, m) - 1)^2)``.

    A Hadamard lift of an n x m TN^trop matrix by B is totally nonnegative for
    B in TN_{2,(n-1)^2}, n the row count. Taking the larger side covers the
    transpose as well, and TN_{2,C} only shrinks as C grows, so the result
    also stays above ``tn2c_threshold(n, m)``.
    """
    return Fraction(max(1, (max(n, m) - 1) ** 2))


def vandermonde_tp2c(
    n: int, m: int, C: Fraction | int, base: Fraction | int | None = None
) -> SeriesMatrix:
    """Constant Vandermonde matrix ``V[i][j] = base^(i*j)`` lying in TP_{2,C}.

    Every 2x2 minor ratio is at least ``base``; the default base is ``C + 1``.

    Raises:
        InconsistentData: If ``C < 1`` or ``base <= C``.
    """
    constant = Fraction(C)
    if constant < 1:
        raise InconsistentData(f"TP_(2,C) needs C >= 1, got {constant}")
    ratio = constant + 1 if base is None else Fraction(base)
    if ratio <= constant:
        raise InconsistentData(f"Vandermonde base {ratio} must exceed C = {constant}")
    return SeriesMatrix(
        tuple(tuple(SeriesRat(ratio ** (i * j)) for j in range(m)) for i in range(n))
    )


def random_positive_lift(
    A: TropMatrix, rng: random.Random, max_numerator: int = 9, max_denominator: int = 4
) -> SeriesMatrix:
    """Lift with entries ``b * t^A[i][j]`` for random small positive rationals b."""
    coefficients = SeriesMatrix(
        tuple(
            tuple(
                SeriesRat(Fraction(rng.randint(1, max_numerator), rng.randint(1, max_denominator)))
                for _ in range(A.cols)
            )
            for _ in range(A.rows)
        )
    )
    return hadamard_lift(A, coefficients)


def adversarial_lift(
    A: TropMatrix, rows: tuple[int, int], cols: tuple[int, int], inflation: int | None = None
) -> SeriesMatrix:
    """Positive lift of ``A`` with a nonpositive 2x2 minor at ``rows x cols``.

    For a minor of ``A`` that is not tropically positive, the anti-diagonal
    coefficients are inflated so that the lifted 2x2 determinant is negative
    (or zero when an anti-diagonal entry lifts to 0). Requires
    ``A[i1][j1] + A[i2][j2] <= A[i1][j2] + A[i2][j1]``.

    Raises:
        InconsistentData: If the chosen minor is tropically positive.
    """
    (i1, i2), (j1, j2) = rows, cols
    diag = [A[i1, j1], A[i2, j2]]
    anti = [A[i1, j2], A[i2, j1]]
    if NEG_INF in anti:
        if NEG_INF not in diag:
            raise InconsistentData("Chosen minor is tropically positive")
    elif NEG_INF not in diag and diag[0] + diag[1] > anti[0] + anti[1]:  # type: ignore[operator]
        raise InconsistentData("Chosen minor is tropically positive")
    factor = SeriesRat(inflation if inflation is not None else 2)
    coefficients = [[SeriesRat(1) for _ in range(A.cols)] for _ in range(A.rows)]
    coefficients[i1][j2] = factor
    coefficients[i2][j1] = factor
    B = SeriesMatrix(tuple(tuple(row) for row in coefficients))
    return hadamard_lift(A, B)


# ============================================================================
# Positivity tests
# ============================================================================


def find_failing_minor(
    M: SeriesMatrix, strict: bool = False, cap: int | None = None
) -> tuple[tuple[int, ...], tuple[int, ...], SeriesRat] | None:
    """First minor that is not positive (strict) or negative (nonstrict).

    Raises:
        CapExceeded: If ``min(n, m)`` exceeds the minor cap.
    """
    limit = minor_cap(cap)
    size = min(M.rows, M.cols)
    if size > limit:
        raise CapExceeded(size, limit, "minor enumeration")
    for row_set, col_set in iter_minors(M):
        value = det_series(M.submatrix(row_set, col_set))
        if (strict and not value.is_positive) or (not strict and not value.is_nonnegative):
            logger.debug(f"Failing minor rows={row_set} cols={col_set}: {value}")
            return row_set, col_set, value
    return None


def is_tn_series(M: SeriesMatrix, strict: bool = False, cap: int | None = None) -> bool:
    """Every minor positive (strict) or nonnegative, by exhaustive enumeration."""
    return find_failing_minor(M, strict, cap) is None


def is_tn2c(M: SeriesMatrix, C: Fraction | int, strict: bool = False) -> bool:
    """``M[i][j] M[k][l] >= C M[i][l] M[k][j]`` for all i < k, j < l (``>`` when strict)."""
    constant = SeriesRat(Fraction(C))
    for i, k in itertools.combinations(range(M.rows), 2):
        for j, c in itertools.combinations(range(M.cols), 2):
            lhs = M[i, j] * M[k, c]
            rhs = constant * M[i, c] * M[k, j]
            if (strict and not lhs > rhs) or (not strict and not lhs >= rhs):
                return False
    return True
