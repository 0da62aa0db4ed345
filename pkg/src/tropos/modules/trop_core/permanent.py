"""Tropical permanents and sign classification of tropical minors.

``permanent_bruteforce`` enumerates S_n and reports every maximizing
permutation with its parity. ``permanent_assignment`` solves the same
optimal assignment problem in O(n^3) with an exact Hungarian method.
"""

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from tropos.config import enumeration_cap
from tropos.errors import CapExceeded, DimensionError
from tropos.types import MinorTag

from .matrix import TropMatrix
from .scalar import NEG_INF, ZERO, TropScalar

logger = logging.getLogger("tropos.permanent")


# ============================================================================
# Permutations
# ============================================================================


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of 0..n-1 via its cycle decomposition.

    Returns:
        +1 for even permutations, -1 for odd ones.
    """
    n = len(perm)
    visited = [False] * n
    num_cycles = 0
    for i in range(n):
        if visited[i]:
            continue
        num_cycles += 1
        j = i
        while not visited[j]:
            visited[j] = True
            j = perm[j]
    return 1 if (n - num_cycles) % 2 == 0 else -1


@dataclass(frozen=True)
class OptimalPermutation:
    """A maximum-weight permutation: row i is matched with column ``perm[i]``."""

    perm: tuple[int, ...]
    sign: int

    @property
    def is_even(self) -> bool:
        return self.sign == 1


@dataclass(frozen=True)
class PermanentResult:
    """Tropical permanent together with all maximizing permutations."""

    weight: TropScalar
    maximizers: tuple[OptimalPermutation, ...]


def _require_square(A: TropMatrix) -> int:
    if not A.is_square:
        raise DimensionError(f"Permanent needs a square matrix, got {A.rows}x{A.cols}")
    return A.rows


# ============================================================================
# Permanents
# ============================================================================


def permanent_bruteforce(A: TropMatrix, cap: int | None = None) -> PermanentResult:
    """Tropical permanent by enumeration of S_n.

    Args:
        A: Square tropical matrix.
        cap: Largest admissible n; defaults to the configured enumeration cap.

    Returns:
        The permanent and every maximizing permutation; the maximizer list is
        empty exactly when the permanent is -inf.

    Raises:
        DimensionError: If ``A`` is not square.
        CapExceeded: If ``n`` exceeds the cap.
    """
    n = _require_square(A)
    limit = enumeration_cap(cap)
    if n > limit:
        raise CapExceeded(n, limit, "permanent enumeration")

    best: TropScalar = NEG_INF
    winners: list[tuple[int, ...]] = []
    rows = A.entries
    for perm in itertools.permutations(range(n)):
        total = ZERO
        for i, j in enumerate(perm):
            value = rows[i][j]
            if value is NEG_INF:
                break
            total += value  # type: ignore[operator]
        else:
            if best is NEG_INF or total > best:
                best = total
                winners = [perm]
            elif total == best:
                winners.append(perm)

    return PermanentResult(
        weight=best,
        maximizers=tuple(OptimalPermutation(p, permutation_sign(p)) for p in winners),
    )


def _hungarian_max(weights: list[list[Fraction]]) -> list[int]:
    """Maximum-weight perfect matching on a dense square matrix of Fractions.

    Kuhn-Munkres with row/column potentials, run as minimization on the
    negated weights. Returns ``assignment[i] = column`` for every row.
    """
    n = len(weights)
    cost = [[-w for w in row] for row in weights]

    # 1-indexed arrays, index 0 is the virtual column
    u = [ZERO] * (n + 1)
    v = [ZERO] * (n + 1)
    p = [0] * (n + 1)
    way = [0] * (n + 1)

    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv: list[Fraction | None] = [None] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta: Fraction | None = None
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                current_min = minv[j]
                if current_min is None or cur < current_min:
                    minv[j] = cur
                    way[j] = j0
                candidate = minv[j]
                assert candidate is not None
                if delta is None or candidate < delta:
                    delta = candidate
                    j1 = j
            assert delta is not None
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    slack = minv[j]
                    if slack is not None:
                        minv[j] = slack - delta
            j0 = j1
            if p[j0] == 0:
                break
        # Flip the augmenting path
        while True:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
            if j0 == 0:
                break

    assignment = [-1] * n
    for j in range(1, n + 1):
        assignment[p[j] - 1] = j - 1
    return assignment


def optimal_assignment(A: TropMatrix) -> tuple[TropScalar, tuple[int, ...] | None]:
    """Optimal assignment value and one optimal permutation.

    -inf entries are forbidden edges. They are replaced by a penalty so low
    that any assignment using one weighs less than every assignment avoiding
    them; if the optimum still uses a penalty edge no finite matching exists.

    Returns:
        ``(weight, perm)``, or ``(NEG_INF, None)`` if every permutation
        meets a -inf entry.
    """
    n = _require_square(A)
    finite_values = [v for row in A.entries for v in row if isinstance(v, Fraction)]
    if not finite_values:
        return NEG_INF, None
    lo, hi = min(finite_values), max(finite_values)
    penalty = lo - (hi - lo) * n - 1

    weights = [
        [v if isinstance(v, Fraction) else penalty for v in row] for row in A.entries
    ]
    assignment = _hungarian_max(weights)
    if any(A.entries[i][j] is NEG_INF for i, j in enumerate(assignment)):
        return NEG_INF, None
    total = sum((weights[i][j] for i, j in enumerate(assignment)), ZERO)
    return total, tuple(assignment)


def permanent_assignment(A: TropMatrix) -> TropScalar:
    """Tropical permanent as an optimal assignment problem.

    Args:
        A: Square tropical matrix; -inf entries are forbidden edges.

    Returns:
        The permanent; -inf when no perfect matching on finite entries exists.

    Raises:
        DimensionError: If ``A`` is not square.
    """
    weight, _ = optimal_assignment(A)
    return weight


# ============================================================================
# Minor classification
# ============================================================================


@dataclass(frozen=True)
class MinorClass:
    """Classification of a tropical minor by the parities of its optimal permutations."""

    tag: MinorTag
    weight: TropScalar

    @property
    def is_positive(self) -> bool:
        return self.tag is MinorTag.TROP_POSITIVE

    @property
    def is_nonnegative(self) -> bool:
        """Tropically nonnegative: anything but TropNegative."""
        return self.tag is not MinorTag.TROP_NEGATIVE


def classify_permanent(result: PermanentResult) -> MinorClass:
    """Derive the minor class from a brute-force permanent."""
    if result.weight is NEG_INF:
        return MinorClass(MinorTag.BOTTOM, NEG_INF)
    has_even = any(m.is_even for m in result.maximizers)
    has_odd = any(not m.is_even for m in result.maximizers)
    if has_even and has_odd:
        tag = MinorTag.SIGN_SINGULAR
    elif has_even:
        tag = MinorTag.TROP_POSITIVE
    else:
        tag = MinorTag.TROP_NEGATIVE
    return MinorClass(tag, result.weight)


def classify_minor(
    A: TropMatrix,
    row_set: Sequence[int],
    col_set: Sequence[int],
    cap: int | None = None,
) -> MinorClass:
    """Classify the tropical minor ``A[I, J]``.

    Index sets are sorted before extraction. The empty minor is TropPositive
    with weight 0.

    Raises:
        DimensionError: If ``|I| != |J|`` or an index is out of range.
        CapExceeded: If the minor is larger than the enumeration cap.
    """
    if len(row_set) != len(col_set):
        raise DimensionError(
            f"Minor index sets differ in size: {len(row_set)} rows, {len(col_set)} columns"
        )
    if not row_set:
        return MinorClass(MinorTag.TROP_POSITIVE, ZERO)
    sub = A.submatrix(sorted(row_set), sorted(col_set))
    return classify_permanent(permanent_bruteforce(sub, cap))


def classify_2x2(a: TropScalar, b: TropScalar, c: TropScalar, d: TropScalar) -> MinorClass:
    """Closed-form classification of the minor ``[[a, b], [c, d]]``."""
    diag = NEG_INF if a is NEG_INF or d is NEG_INF else a + d  # type: ignore[operator]
    anti = NEG_INF if b is NEG_INF or c is NEG_INF else b + c  # type: ignore[operator]
    if diag is NEG_INF and anti is NEG_INF:
        return MinorClass(MinorTag.BOTTOM, NEG_INF)
    if anti is NEG_INF or (diag is not NEG_INF and diag > anti):
        return MinorClass(MinorTag.TROP_POSITIVE, diag)
    if diag is NEG_INF or anti > diag:
        return MinorClass(MinorTag.TROP_NEGATIVE, anti)
    return MinorClass(MinorTag.SIGN_SINGULAR, diag)
