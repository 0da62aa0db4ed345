"""Maximal cycle means and tropical diagonal dominance.

``max_cycle_mean`` runs Karp's dynamic program over walks of fixed length.
``enumerate_cycle_means`` lists every elementary cycle through networkx and
serves as the oracle in tests.
"""

import itertools
import logging
from fractions import Fraction

import networkx as nx

from tropos.config import enumeration_cap
from tropos.errors import CapExceeded, DimensionError

from .matrix import TropMatrix
from .permanent import permanent_bruteforce
from .scalar import NEG_INF, TropScalar, finite, trop_mul

logger = logging.getLogger("tropos.cycle_mean")


def _require_square(A: TropMatrix) -> int:
    if not A.is_square:
        raise DimensionError(f"Expected a square matrix, got {A.rows}x{A.cols}")
    return A.rows


def max_cycle_mean(A: TropMatrix) -> TropScalar:
    """Maximal cycle mean of the weighted digraph of ``A`` (Karp).

    Edge ``i -> j`` carries weight ``A[i][j]``; -inf entries are absent edges.
    ``D_k(v)`` is the heaviest walk with exactly k edges ending at v, starting
    anywhere, and the answer is ``max_v min_k (D_n(v) - D_k(v)) / (n - k)``.

    Returns:
        The maximal mean over elementary cycles, or -inf if the graph is acyclic.

    Raises:
        DimensionError: If ``A`` is not square.
    """
    n = _require_square(A)
    rows = A.entries
    walks: list[list[TropScalar]] = [[Fraction(0)] * n]
    for _ in range(n):
        prev = walks[-1]
        current: list[TropScalar] = []
        for v in range(n):
            best: TropScalar = NEG_INF
            for u in range(n):
                candidate = trop_mul(prev[u], rows[u][v])
                if candidate is not NEG_INF and (best is NEG_INF or candidate > best):
                    best = candidate
            current.append(best)
        walks.append(current)

    result: TropScalar = NEG_INF
    for v in range(n):
        top = walks[n][v]
        if top is NEG_INF:
            continue
        worst: Fraction | None = None
        for k in range(n):
            base = walks[k][v]
            if base is NEG_INF:
                continue
            ratio = (top - base) / (n - k)  # type: ignore[operator]
            if worst is None or ratio < worst:
                worst = ratio
        if worst is not None and (result is NEG_INF or worst > result):
            result = worst
    logger.debug(f"Maximal cycle mean of {n}x{n} matrix: {result}")
    return result


def weighted_digraph(A: TropMatrix) -> nx.DiGraph:
    """Digraph with an edge i -> j of attribute ``weight`` for every finite entry."""
    n = _require_square(A)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    for i in range(n):
        for j in range(n):
            value = A[i, j]
            if value is not NEG_INF:
                graph.add_edge(i, j, weight=value)
    return graph


def enumerate_cycle_means(A: TropMatrix) -> list[tuple[tuple[int, ...], Fraction]]:
    """Every elementary cycle with its mean weight, self-loops included."""
    graph = weighted_digraph(A)
    means: list[tuple[tuple[int, ...], Fraction]] = []
    for cycle in nx.simple_cycles(graph):
        nodes = tuple(cycle)
        total = sum(
            (graph[u][w]["weight"] for u, w in zip(nodes, nodes[1:] + nodes[:1], strict=True)),
            Fraction(0),
        )
        means.append((nodes, total / len(nodes)))
    return means


def max_cycle_mean_bruteforce(A: TropMatrix) -> TropScalar:
    """Maximal cycle mean by explicit cycle enumeration."""
    means = [mean for _, mean in enumerate_cycle_means(A)]
    return max(means) if means else NEG_INF


# ============================================================================
# Diagonal dominance
# ============================================================================


def is_strictly_dominated(A: TropMatrix, cap: int | None = None) -> bool:
    """Identity is the unique optimal permutation of ``A`` (single matrix, no submatrices)."""
    result = permanent_bruteforce(A, cap)
    identity = tuple(range(A.rows))
    return (
        result.weight is not NEG_INF
        and len(result.maximizers) == 1
        and result.maximizers[0].perm == identity
    )


def _is_dominated(A: TropMatrix, cap: int | None = None) -> bool:
    result = permanent_bruteforce(A, cap)
    if result.weight is NEG_INF:
        return True
    identity = tuple(range(A.rows))
    return any(m.perm == identity for m in result.maximizers)


def principal_dominance_bruteforce(
    A: TropMatrix, strict: bool = False, cap: int | None = None
) -> bool:
    """Diagonal dominance of every principal submatrix by enumeration."""
    n = A.rows
    limit = enumeration_cap(cap)
    if n > limit:
        raise CapExceeded(n, limit, "principal submatrix enumeration")
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            sub = A.submatrix(subset, subset)
            if strict and size >= 2:
                if not is_strictly_dominated(sub, cap):
                    return False
            elif not _is_dominated(sub, cap):
                return False
    return True


def is_diag_dominant(A: TropMatrix, strict: bool = False, cap: int | None = None) -> bool:
    """Tropical (strict) diagonal dominance of every principal submatrix.

    With a finite diagonal the entries are normalized to ``A[i][j] - A[i][i]``
    with the diagonal removed; every principal submatrix is dominated iff no
    cycle of the normalized graph has positive weight, strictly iff every
    cycle has negative weight. Otherwise principal submatrices are enumerated
    up to the cap; in the strict case a principal submatrix of size >= 2 must
    have a finite permanent attained only by the identity.

    Raises:
        DimensionError: If ``A`` is not square.
        CapExceeded: If enumeration is needed and n exceeds the cap.
    """
    n = _require_square(A)
    diagonal = A.diagonal_entries()
    if all(d is not NEG_INF for d in diagonal):
        offsets = [finite(d) for d in diagonal]
        normalized = TropMatrix(
            tuple(
                tuple(
                    NEG_INF if i == j or A[i, j] is NEG_INF else A.finite_entry(i, j) - offsets[i]
                    for j in range(n)
                )
                for i in range(n)
            )
        )
        mean = max_cycle_mean(normalized)
        if mean is NEG_INF:
            return True
        return bool(mean < 0) if strict else bool(mean <= 0)
    logger.debug("Diagonal has -inf entries; enumerating principal submatrices")
    return principal_dominance_bruteforce(A, strict, cap)
