"""Tropical Loewner-Whitney factorization.

A square TN^trop matrix with finite permanent is a max-plus product of
tropical elementary Jacobi matrices. Factors are found constructively: the
matrix is lifted to an invertible totally nonnegative matrix over the series
field, factored there by Neville elimination, and the factor parameters are
replaced by their valuations. The tropical product is always re-checked.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from tropos.errors import (
    FactorIndexError,
    FactorizationMismatch,
    InconsistentData,
    NotInvertible,
    NotTN,
    SingularPermanent,
)
from tropos.types import FactorizationReport, FactorRecord, JacobiKind

from .positivity import is_tn_trop
from .series_field import (
    SeriesMatrix,
    SeriesRat,
    det_series,
    hadamard_lift,
    tn2c_constant,
    vandermonde_tp2c,
)
from .trop_core import (
    NEG_INF,
    TropMatrix,
    TropScalar,
    format_scalar,
    permanent_assignment,
    to_scalar,
)

logger = logging.getLogger("tropos.factorization")


def check_factor_index(kind: JacobiKind, i: int, n: int) -> None:
    """Raise ``FactorIndexError`` unless the factor fits an n x n matrix."""
    bound = n if kind is JacobiKind.DIAG else n - 1
    if not 0 <= i < bound:
        raise FactorIndexError(f"{kind.value}({i}) does not fit a {n}x{n} matrix")


# ============================================================================
# Tropical Jacobi factors
# ============================================================================


@dataclass(frozen=True)
class JacobiFactor:
    """Tropical elementary Jacobi matrix, 0-based wire index ``i``.

    ``Lower(i)`` puts ``a`` at (i+1, i), ``Upper(i)`` at (i, i+1) and
    ``Diag(i)`` at (i, i) of the tropical identity.
    """

    kind: JacobiKind
    i: int
    a: TropScalar

    def __post_init__(self) -> None:
        if self.a is NEG_INF:
            raise InconsistentData(f"{self.kind.value}({self.i}) needs a finite parameter")
        if self.i < 0:
            raise FactorIndexError(f"Negative factor index {self.i}")

    def to_record(self) -> FactorRecord:
        return FactorRecord(kind=self.kind, i=self.i + 1, a=format_scalar(self.a))

    @classmethod
    def from_record(cls, record: FactorRecord) -> "JacobiFactor":
        return cls(record.kind, record.i - 1, to_scalar(record.a))

    def __str__(self) -> str:
        return f"{self.kind.value}({self.i + 1}, {format_scalar(self.a)})"


def jacobi_to_matrix(f: JacobiFactor, n: int) -> TropMatrix:
    """Explicit n x n tropical matrix of a Jacobi factor.

    Raises:
        FactorIndexError: If the factor does not fit an n x n matrix.
    """
    check_factor_index(f.kind, f.i, n)
    rows = [list(r) for r in TropMatrix.identity(n).entries]
    if f.kind is JacobiKind.LOWER:
        rows[f.i + 1][f.i] = f.a
    elif f.kind is JacobiKind.UPPER:
        rows[f.i][f.i + 1] = f.a
    else:
        rows[f.i][f.i] = f.a
    return TropMatrix(tuple(tuple(r) for r in rows))


def multiply_factors(fs: Iterable[JacobiFactor], n: int) -> TropMatrix:
    """Left-to-right max-plus product; the empty product is the tropical identity."""
    result = TropMatrix.identity(n)
    for f in fs:
        result = result @ jacobi_to_matrix(f, n)
    return result


# ============================================================================
# Series Jacobi factors and Neville elimination
# ============================================================================


@dataclass(frozen=True)
class SeriesJacobiFactor:
    """Elementary Jacobi matrix over the series field, same placement as ``JacobiFactor``."""

    kind: JacobiKind
    i: int
    a: SeriesRat

    def to_matrix(self, n: int) -> SeriesMatrix:
        check_factor_index(self.kind, self.i, n)
        rows = [list(r) for r in SeriesMatrix.identity(n).entries]
        if self.kind is JacobiKind.LOWER:
            rows[self.i + 1][self.i] = self.a
        elif self.kind is JacobiKind.UPPER:
            rows[self.i][self.i + 1] = self.a
        else:
            rows[self.i][self.i] = self.a
        return SeriesMatrix(tuple(tuple(r) for r in rows))

    def valuation(self) -> JacobiFactor | None:
        """Tropical factor with parameter ``val(a)``; None when ``a`` is 0."""
        if self.a.is_zero:
            return None
        return JacobiFactor(self.kind, self.i, self.a.valuation)


def multiply_series_factors(fs: Iterable[SeriesJacobiFactor], n: int) -> SeriesMatrix:
    result = SeriesMatrix.identity(n)
    for f in fs:
        result = result @ f.to_matrix(n)
    return result


def _eliminate_lower(a: list[list[SeriesRat]]) -> list[tuple[int, SeriesRat]]:
    """Neville elimination below the diagonal, in place.

    Returns (i, m) pairs in elimination order; row i+1 was reduced by
    ``m * row i``, so the matrix equals the product of ``Lower(i, m)`` in
    that order times the remaining upper triangle.
    """
    n = len(a)
    steps: list[tuple[int, SeriesRat]] = []
    for k in range(n - 1):
        for i in range(n - 1, k, -1):
            below, above = a[i][k], a[i - 1][k]
            if below.is_zero:
                continue
            if above.is_zero:
                raise NotTN(
                    f"Neville elimination breaks down at row {i + 1}, column {k + 1}"
                )
            m = below / above
            if not m.is_positive:
                raise NotTN(f"Negative Neville multiplier {m} at row {i + 1}, column {k + 1}")
            a[i] = [x - m * y for x, y in zip(a[i], a[i - 1], strict=True)]
            steps.append((i - 1, m))
    return steps


def neville_eliminate(M: SeriesMatrix) -> list[SeriesJacobiFactor]:
    """Factor an invertible totally nonnegative series matrix.

    The result is ordered as lower factors (elimination order), then the
    diagonal, then upper factors, and multiplies back to ``M`` exactly.
    Factors with a zero parameter are identities and are omitted, as are
    unit diagonal factors.

    Raises:
        DimensionError: If ``M`` is not square.
        NotInvertible: If ``det(M) = 0``.
        NotTN: If a Neville multiplier or pivot is negative.
    """
    if det_series(M).is_zero:
        raise NotInvertible("Neville factorization needs an invertible matrix")
    n = M.rows
    work = [list(row) for row in M.entries]
    lower = _eliminate_lower(work)

    diagonal = [work[i][i] for i in range(n)]
    for i, d in enumerate(diagonal):
        if d.is_zero:
            raise NotInvertible(f"Zero pivot at position {i + 1}")
        if not d.is_positive:
            raise NotTN(f"Negative pivot {d} at position {i + 1}")

    # U = D * U1 and U1^T is lower unitriangular; eliminate it the same way
    transposed = [
        [work[j][i] / diagonal[j] if j <= i else SeriesRat(0) for j in range(n)]
        for i in range(n)
    ]
    upper = _eliminate_lower(transposed)

    factors = [SeriesJacobiFactor(JacobiKind.LOWER, i, m) for i, m in lower]
    factors += [
        SeriesJacobiFactor(JacobiKind.DIAG, i, d) for i, d in enumerate(diagonal) if d != 1
    ]
    factors += [SeriesJacobiFactor(JacobiKind.UPPER, i, m) for i, m in reversed(upper)]
    logger.debug(
        f"Neville elimination: {len(lower)} lower, {n} diagonal, {len(upper)} upper factors"
    )
    return factors


# ============================================================================
# Tropical factorization
# ============================================================================


def factor_tn(A: TropMatrix) -> list[JacobiFactor]:
    """Factor a TN^trop matrix with finite permanent into tropical Jacobi matrices.

    The Hadamard lift by a Vandermonde matrix in TP_(2,C) is invertible and
    totally nonnegative; its Neville factors have nonnegative parameters, so
    taking valuations commutes with the product.

    Raises:
        DimensionError: If ``A`` is not square.
        NotTN: If ``A`` is not TN^trop.
        SingularPermanent: If ``per(A) = -inf``.
        FactorizationMismatch: If the tropical product differs from ``A``.
    """
    if not is_tn_trop(A).tn_trop:
        raise NotTN("Matrix is not tropically totally nonnegative")
    if permanent_assignment(A) is NEG_INF:
        raise SingularPermanent("Tropical permanent is -inf")
    n = A.rows
    lift = hadamard_lift(A, vandermonde_tp2c(n, n, tn2c_constant(n, n)))
    factors: list[JacobiFactor] = []
    for series_factor in neville_eliminate(lift):
        factor = series_factor.valuation()
        if factor is None:
            continue
        if factor.kind is JacobiKind.DIAG and factor.a == 0:
            continue
        factors.append(factor)

    product = multiply_factors(factors, n)
    if product != A:
        raise FactorizationMismatch(f"Factor product\n{product}\ndiffers from input\n{A}")
    logger.debug(f"Factored {n}x{n} matrix into {len(factors)} Jacobi factors")
    return factors


def factorization_report(fs: Sequence[JacobiFactor], n: int) -> FactorizationReport:
    return FactorizationReport(n=n, factors=[f.to_record() for f in fs])
