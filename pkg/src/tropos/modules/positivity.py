"""Tropical positivity classes.

Membership in TP^trop, TN^trop and their 2x2 truncations is decided from
2x2 minors alone: for finite matrices the consecutive solid minors suffice,
for matrices with -inf entries every 2x2 minor is checked. The brute-force
oracle classifies every minor from the definitions instead.
"""

import itertools
import logging
from collections.abc import Iterator, Sequence
from fractions import Fraction

from tropos.config import enumeration_cap
from tropos.errors import CapExceeded, DimensionError, InconsistentData, InfiniteEntry
from tropos.types import MinorWitness, PositivityClass, PositivityReport

from .trop_core import (
    NEG_INF,
    MinorClass,
    TropMatrix,
    TropScalar,
    classify_2x2,
    classify_minor,
    finite,
    format_scalar,
    is_diag_dominant,
    permanent_assignment,
    permanent_bruteforce,
    to_scalar,
)
from .trop_core.cycle_mean import principal_dominance_bruteforce

logger = logging.getLogger("tropos.positivity")

Minor = tuple[tuple[int, ...], tuple[int, ...]]


# ============================================================================
# 2x2 minors
# ============================================================================


def _iter_2x2(A: TropMatrix, consecutive: bool) -> Iterator[tuple[Minor, MinorClass]]:
    """2x2 minors in lexicographic (rows, cols) order."""
    if consecutive:
        row_pairs: Iterator[tuple[int, int]] = ((i, i + 1) for i in range(A.rows - 1))
        col_pairs: list[tuple[int, int]] = [(j, j + 1) for j in range(A.cols - 1)]
    else:
        row_pairs = itertools.combinations(range(A.rows), 2)
        col_pairs = list(itertools.combinations(range(A.cols), 2))
    for i1, i2 in row_pairs:
        for j1, j2 in col_pairs:
            minor = classify_2x2(A[i1, j1], A[i1, j2], A[i2, j1], A[i2, j2])
            yield ((i1, i2), (j1, j2)), minor


def _is_tn2(A: TropMatrix) -> bool:
    consecutive = A.is_finite
    return all(minor.is_nonnegative for _, minor in _iter_2x2(A, consecutive))


def _is_tp2(A: TropMatrix) -> bool:
    return A.is_finite and all(minor.is_positive for _, minor in _iter_2x2(A, True))


def _witness(rows: Sequence[int], cols: Sequence[int], minor: MinorClass) -> MinorWitness:
    return MinorWitness(
        rows=[i + 1 for i in rows],
        cols=[j + 1 for j in cols],
        tag=minor.tag,
        weight=format_scalar(minor.weight),
    )


def _find_witness(A: TropMatrix, requested: PositivityClass) -> MinorWitness | None:
    if requested is PositivityClass.TP:
        for i in range(A.rows):
            for j in range(A.cols):
                if A[i, j] is NEG_INF:
                    return _witness((i,), (j,), classify_minor(A, (i,), (j,)))
        for (rows, cols), minor in _iter_2x2(A, consecutive=False):
            if not minor.is_positive:
                return _witness(rows, cols, minor)
        return None
    for (rows, cols), minor in _iter_2x2(A, consecutive=False):
        if not minor.is_nonnegative:
            return _witness(rows, cols, minor)
    return None


def _dominance_flags(A: TropMatrix, cap: int | None) -> tuple[bool | None, bool | None]:
    if not A.is_square:
        return None, None
    try:
        dd = is_diag_dominant(A, strict=False, cap=cap)
        ndd = is_diag_dominant(A, strict=True, cap=cap)
    except CapExceeded:
        logger.debug("Dominance flags skipped: principal enumeration exceeds the cap")
        return None, None
    return dd, ndd


def classify_matrix(
    A: TropMatrix, requested: PositivityClass = PositivityClass.TN, cap: int | None = None
) -> PositivityReport:
    """All positivity flags of ``A``, with a witness if the requested class fails."""
    tn2 = _is_tn2(A)
    tp2 = _is_tp2(A)
    dd, ndd = _dominance_flags(A, cap)
    failed = not (tp2 if requested is PositivityClass.TP else tn2)
    report = PositivityReport(
        tp_trop=tp2,
        tn_trop=tn2,
        tp2=tp2,
        tn2=tn2,
        dd=dd,
        ndd=ndd,
        requested=requested,
        witness=_find_witness(A, requested) if failed else None,
    )
    logger.debug(f"Classified {A.rows}x{A.cols} matrix: {report.flags()}")
    return report


def is_tp_trop(A: TropMatrix, cap: int | None = None) -> PositivityReport:
    """Tropical total positivity.

    ``A`` is TP^trop iff it is finite and every consecutive solid 2x2 minor
    is strictly Monge: ``A[i][j] + A[i+1][j+1] > A[i][j+1] + A[i+1][j]``.
    """
    return classify_matrix(A, PositivityClass.TP, cap)


def is_tn_trop(A: TropMatrix, cap: int | None = None) -> PositivityReport:
    """Tropical total nonnegativity.

    Finite matrices: consecutive solid 2x2 minors are Monge. With -inf
    entries the consecutive reduction fails, so all 2x2 minors are checked.
    """
    return classify_matrix(A, PositivityClass.TN, cap)


def is_jacobi_semigroup_member(A: TropMatrix) -> bool:
    """``A`` is square, TN^trop and has a finite permanent."""
    return (
        A.is_square
        and is_tn_trop(A).tn_trop
        and permanent_assignment(A) is not NEG_INF
    )


# ============================================================================
# Initial and solid minors
# ============================================================================


def initial_minors(rows: int, cols: int) -> list[Minor]:
    """The ``rows * cols`` initial minors, 0-based.

    The minor for position (i, j) is the largest solid minor with bottom-right
    corner (i, j); it borders the top or the left edge.
    """
    result: list[Minor] = []
    for i in range(rows):
        for j in range(cols):
            size = min(i, j) + 1
            result.append(
                (tuple(range(i - size + 1, i + 1)), tuple(range(j - size + 1, j + 1)))
            )
    return result


def is_tp_trop_via_initial(A: TropMatrix, cap: int | None = None) -> bool:
    """TP^trop test reading only the initial minors.

    Raises:
        InfiniteEntry: If ``A`` has a -inf entry.
    """
    if not A.is_finite:
        raise InfiniteEntry("Initial-minor criterion needs a finite matrix")
    for rows, cols in initial_minors(A.rows, A.cols):
        minor = classify_minor(A, rows, cols, cap)
        if not minor.is_positive:
            logger.debug(f"Initial minor rows={rows} cols={cols} is {minor.tag.value}")
            return False
    return True


def solid_minor_permanents(A: TropMatrix) -> list[list[TropScalar]]:
    """Grid of permanents of the consecutive solid 2x2 minors, (n-1) x (m-1)."""
    return [
        [
            permanent_bruteforce(A.submatrix((i, i + 1), (j, j + 1))).weight
            for j in range(A.cols - 1)
        ]
        for i in range(A.rows - 1)
    ]


def reconstruct_from_solid_minors(
    first_row: Sequence[object],
    first_col: Sequence[object],
    solid: Sequence[Sequence[object]],
) -> TropMatrix:
    """Rebuild the TN^trop matrix with given border and solid 2x2 permanents.

    Uses ``A[i][j] = M[i-1][j-1] - A[i-1][j-1]``, which holds because the
    identity is optimal in every solid minor of a TN^trop matrix.

    Args:
        first_row: Row 1 (length m).
        first_col: Column 1 (length n); its first entry must equal ``first_row[0]``.
        solid: (n-1) x (m-1) grid of solid 2x2 permanents.

    Raises:
        DimensionError: If the shapes disagree.
        InconsistentData: If inputs are infinite or no TN^trop matrix has this data.
    """
    row = [to_scalar(v) for v in first_row]
    col = [to_scalar(v) for v in first_col]
    grid = [[to_scalar(v) for v in line] for line in solid]
    n, m = len(col), len(row)
    if n == 0 or m == 0:
        raise DimensionError("Border vectors must be nonempty")
    if len(grid) != n - 1 or any(len(line) != m - 1 for line in grid):
        raise DimensionError(f"Solid minor grid must be {n - 1}x{m - 1}")
    values = row + col + [v for line in grid for v in line]
    if any(v is NEG_INF for v in values):
        raise InconsistentData("Reconstruction needs finite data")
    if row[0] != col[0]:
        raise InconsistentData(f"Corner mismatch: row gives {row[0]}, column gives {col[0]}")

    entries: list[list[Fraction]] = [[finite(v) for v in row]]
    for i in range(1, n):
        current = [finite(col[i])]
        for j in range(1, m):
            current.append(finite(grid[i - 1][j - 1]) - entries[i - 1][j - 1])
        entries.append(current)
    A = TropMatrix(tuple(tuple(r) for r in entries))

    if solid_minor_permanents(A) != grid:
        raise InconsistentData("Reconstructed matrix does not reproduce the solid minors")
    if not is_tn_trop(A).tn_trop:
        raise InconsistentData("Solid minor data is not realized by a TN^trop matrix")
    return A


# ============================================================================
# Brute-force oracle
# ============================================================================


def bruteforce_class_oracle(
    A: TropMatrix, requested: PositivityClass = PositivityClass.TN, cap: int | None = None
) -> PositivityReport:
    """Classify every minor from the definitions, independent of the 2x2 reductions.

    Raises:
        CapExceeded: If ``min(n, m)`` exceeds the enumeration cap.
    """
    limit = enumeration_cap(cap)
    size = min(A.rows, A.cols)
    if size > limit:
        raise CapExceeded(size, limit, "minor classification")

    tp = tn = tp2 = tn2 = True
    witness: MinorWitness | None = None
    for k in range(1, size + 1):
        for rows in itertools.combinations(range(A.rows), k):
            for cols in itertools.combinations(range(A.cols), k):
                minor = classify_minor(A, rows, cols, cap)
                fails = (
                    not minor.is_positive
                    if requested is PositivityClass.TP
                    else not minor.is_nonnegative
                )
                if fails and witness is None:
                    witness = _witness(rows, cols, minor)
                if not minor.is_positive:
                    tp = False
                    if k <= 2:
                        tp2 = False
                if not minor.is_nonnegative:
                    tn = False
                    if k <= 2:
                        tn2 = False

    dd: bool | None = None
    ndd: bool | None = None
    if A.is_square:
        dd = principal_dominance_bruteforce(A, strict=False, cap=cap)
        ndd = principal_dominance_bruteforce(A, strict=True, cap=cap)
    return PositivityReport(
        tp_trop=tp, tn_trop=tn, tp2=tp2, tn2=tn2, dd=dd, ndd=ndd, requested=requested,
        witness=witness,
    )
