"""Shape of tropical totally nonnegative matrices.

Double echelon support patterns, and the staircase decomposition of finite
Monge matrices into a lineality part ``u_i + v_j`` plus a nonnegative
combination of elementary staircase matrices ``L^(i,j)``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from tropos.errors import DimensionError, InfiniteEntry, NegativeCoefficient, NotMonge
from tropos.types import StaircaseReport

from .trop_core import NEG_INF, TropMatrix, format_scalar

logger = logging.getLogger("tropos.monge_structure")

BoolPattern = tuple[tuple[bool, ...], ...]


# ============================================================================
# Double echelon patterns
# ============================================================================


def support_pattern(A: TropMatrix) -> BoolPattern:
    """Boolean pattern: True where the entry is finite."""
    return tuple(tuple(v is not NEG_INF for v in row) for row in A.entries)


def row_runs(pattern: BoolPattern) -> list[tuple[int, int] | None]:
    """First and last True column of each row, or None for an all-False row."""
    runs: list[tuple[int, int] | None] = []
    for row in pattern:
        columns = [j for j, cell in enumerate(row) if cell]
        runs.append((columns[0], columns[-1]) if columns else None)
    return runs


def is_double_echelon_pattern(pattern: BoolPattern) -> bool:
    """Contiguous runs per row with nondecreasing starts and ends; empty rows skipped."""
    previous: tuple[int, int] | None = None
    for row, run in zip(pattern, row_runs(pattern), strict=True):
        if run is None:
            continue
        start, end = run
        if not all(row[start : end + 1]):
            return False
        if previous is not None and (start < previous[0] or end < previous[1]):
            return False
        previous = run
    return True


def is_double_echelon(A: TropMatrix) -> bool:
    """``A`` has a double echelon support pattern."""
    return is_double_echelon_pattern(support_pattern(A))


# ============================================================================
# Staircase decomposition
# ============================================================================


@dataclass(frozen=True)
class StaircaseDecomposition:
    """``A[i][j] = u[i] + v[j] + sum lam[k][l] * L^(k+1,l+1)[i][j]``.

    ``lam[k][l]`` (0-based) is the coefficient of the elementary staircase
    whose block of ones starts at row k+1, column l+1.
    """

    u: tuple[Fraction, ...]
    v: tuple[Fraction, ...]
    lam: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n, m = len(self.u), len(self.v)
        if n == 0 or m == 0:
            raise DimensionError("Offsets must be nonempty")
        if len(self.lam) != n - 1 or any(len(row) != m - 1 for row in self.lam):
            raise DimensionError(f"Staircase coefficients must form a {n - 1}x{m - 1} grid")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.u), len(self.v))

    def to_report(self) -> StaircaseReport:
        return StaircaseReport(
            u=[format_scalar(x) for x in self.u],
            v=[format_scalar(x) for x in self.v],
            lam=[[format_scalar(x) for x in row] for row in self.lam],
        )


def elementary_staircase(n: int, m: int, i: int, j: int) -> TropMatrix:
    """``L^(i,j)`` with 0-based corner (i, j), 1 <= i < n, 1 <= j < m."""
    if not (1 <= i < n and 1 <= j < m):
        raise DimensionError(f"Staircase corner ({i},{j}) out of range for {n}x{m}")
    return TropMatrix(
        tuple(
            tuple(Fraction(1) if t >= i and s >= j else Fraction(0) for s in range(m))
            for t in range(n)
        )
    )


def consecutive_monge_defects(A: TropMatrix) -> list[list[Fraction]]:
    """``A[i][j] + A[i-1][j-1] - A[i-1][j] - A[i][j-1]`` for i, j >= 1.

    Raises:
        InfiniteEntry: If ``A`` has a -inf entry.
    """
    if not A.is_finite:
        raise InfiniteEntry("Monge defects need a finite matrix")
    return [
        [
            A.finite_entry(i, j) + A.finite_entry(i - 1, j - 1)
            - A.finite_entry(i - 1, j) - A.finite_entry(i, j - 1)
            for j in range(1, A.cols)
        ]
        for i in range(1, A.rows)
    ]


def staircase_decompose(A: TropMatrix) -> StaircaseDecomposition:
    """Decompose a finite Monge matrix.

    Offsets are pinned by ``u[i] = A[i][0]`` and ``v[j] = A[0][j] - A[0][0]``;
    the residual has zero first row and column, and the staircase
    coefficients are its consecutive Monge defects.

    Raises:
        InfiniteEntry: If ``A`` has a -inf entry.
        NotMonge: If a coefficient is negative.
    """
    lam = consecutive_monge_defects(A)
    for i, row in enumerate(lam):
        for j, value in enumerate(row):
            if value < 0:
                raise NotMonge(
                    f"Consecutive Monge inequality at rows {i + 1},{i + 2} "
                    f"columns {j + 1},{j + 2} fails by {-value}"
                )
    corner = A.finite_entry(0, 0)
    u = tuple(A.finite_entry(i, 0) for i in range(A.rows))
    v = tuple(A.finite_entry(0, j) - corner for j in range(A.cols))
    return StaircaseDecomposition(u=u, v=v, lam=tuple(tuple(row) for row in lam))


def _assemble(d: StaircaseDecomposition) -> TropMatrix:
    n, m = d.shape
    # Prefix sums over the coefficient grid: S[i][j] = sum of lam[k][l] for k < i, l < j
    residual = [[Fraction(0)] * m for _ in range(n)]
    for i in range(1, n):
        for j in range(1, m):
            residual[i][j] = (
                d.lam[i - 1][j - 1] + residual[i - 1][j] + residual[i][j - 1]
                - residual[i - 1][j - 1]
            )
    return TropMatrix(
        tuple(tuple(d.u[i] + d.v[j] + residual[i][j] for j in range(m)) for i in range(n))
    )


def staircase_reconstruct(d: StaircaseDecomposition) -> TropMatrix:
    """``u_i + v_j + sum lam L``; the result is TN^trop.

    Raises:
        NegativeCoefficient: If a staircase coefficient is negative.
    """
    for row in d.lam:
        for value in row:
            if value < 0:
                raise NegativeCoefficient(f"Staircase coefficient {value} is negative")
    return _assemble(d)


def staircase_scaling(
    d: StaircaseDecomposition,
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Tropical diagonals ``(D, D')`` with ``D ⊙ A ⊙ D'`` the staircase part of ``A``."""
    return tuple(-x for x in d.u), tuple(-x for x in d.v)


def single_violation_matrix(n: int, m: int, i: int, j: int) -> TropMatrix:
    """Matrix violating exactly the consecutive Monge inequality at corner (i, j).

    All staircase coefficients are 1 except ``lam`` at 0-based corner (i, j),
    which is -1.
    """
    if not (1 <= i < n and 1 <= j < m):
        raise DimensionError(f"Corner ({i},{j}) out of range for {n}x{m}")
    lam = tuple(
        tuple(Fraction(-1) if (k, c) == (i, j) else Fraction(1) for c in range(1, m))
        for k in range(1, n)
    )
    zeros_u = tuple(Fraction(0) for _ in range(n))
    zeros_v = tuple(Fraction(0) for _ in range(m))
    return _assemble(StaircaseDecomposition(u=zeros_u, v=zeros_v, lam=lam))

