"""Plucker coordinates, the block embedding and the Stiefel map.

A k x (n-k) matrix B is embedded as ``[identity | reversed B]`` (with
alternating row signs over the series field) and sent to the vector of
maximal minors of the embedding. Every minor of B reappears as one
coordinate, which makes the map invertible on its image.
"""

import itertools
import logging
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any

from tropos.errors import DimensionError, InfiniteEntry, MalformedVector, NotTN
from tropos.types import CoordinateMismatch, PluckerReport, StiefelInversionReport

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
    finite,
    format_scalar,
    permanent_assignment,
    to_scalar,
)

logger = logging.getLogger("tropos.grassmannian")

Subset = tuple[int, ...]


def k_subsets(k: int, n: int) -> list[Subset]:
    """0-based k-subsets of range(n) in lexicographic order."""
    return list(itertools.combinations(range(n), k))


def format_subset(subset: Iterable[int]) -> str:
    """1-based key used in documents: ``(0, 2) -> "1,3"``."""
    return ",".join(str(i + 1) for i in subset)


def parse_subset(key: str) -> Subset:
    """Inverse of ``format_subset``."""
    try:
        return tuple(sorted(int(part) - 1 for part in key.split(",")))
    except ValueError as e:
        raise MalformedVector(f"Bad subset key {key!r}") from e


def _check_shape(k: int, n: int, size: int) -> None:
    if not 0 <= k <= n:
        raise DimensionError(f"Plucker vectors need 0 <= k <= n, got k={k}, n={n}")
    if size != comb(n, k):
        raise MalformedVector(f"Expected {comb(n, k)} coordinates for k={k}, n={n}, got {size}")


# ============================================================================
# Plucker vectors
# ============================================================================


@dataclass(frozen=True)
class PluckerVector:
    """Tropical Plucker vector, coordinates in lexicographic subset order."""

    k: int
    n: int
    values: tuple[TropScalar, ...]

    def __post_init__(self) -> None:
        _check_shape(self.k, self.n, len(self.values))

    @classmethod
    def from_mapping(cls, k: int, n: int, coords: Mapping[Subset, Any]) -> "PluckerVector":
        """Build from a 0-based subset -> value mapping.

        Raises:
            MalformedVector: If a coordinate is missing or unexpected.
        """
        subsets = k_subsets(k, n)
        extra = set(coords) - set(subsets)
        if extra:
            raise MalformedVector(f"Unexpected subsets: {sorted(extra)}")
        missing = [s for s in subsets if s not in coords]
        if missing:
            raise MalformedVector(f"Missing coordinates: {[format_subset(s) for s in missing]}")
        return cls(k, n, tuple(to_scalar(coords[s]) for s in subsets))

    def subsets(self) -> list[Subset]:
        return k_subsets(self.k, self.n)

    def items(self) -> Iterator[tuple[Subset, TropScalar]]:
        return zip(self.subsets(), self.values, strict=True)

    def __getitem__(self, subset: Subset) -> TropScalar:
        return self.values[self.subsets().index(tuple(sorted(subset)))]

    def normalized(self) -> "PluckerVector":
        """Shift so that the lexicographically first finite coordinate is 0.

        Raises:
            MalformedVector: If every coordinate is -inf.
        """
        pivot = next((v for v in self.values if v is not NEG_INF), None)
        if pivot is None:
            raise MalformedVector("Plucker vector has no finite coordinate")
        offset = finite(pivot)
        return PluckerVector(
            self.k,
            self.n,
            tuple(NEG_INF if v is NEG_INF else finite(v) - offset for v in self.values),
        )

    def projectively_equal(self, other: "PluckerVector") -> bool:
        """Equal up to a global additive constant, with the same -inf support."""
        if (self.k, self.n) != (other.k, other.n):
            return False
        return self.normalized() == other.normalized()

    def to_report(self) -> PluckerReport:
        return PluckerReport(
            k=self.k,
            n=self.n,
            coords={format_subset(s): format_scalar(v) for s, v in self.items()},
        )

    def __str__(self) -> str:
        return "(" + " : ".join(format_scalar(v) for v in self.values) + ")"


@dataclass(frozen=True)
class SeriesPluckerVector:
    """Plucker vector over the series field."""

    k: int
    n: int
    values: tuple[SeriesRat, ...]

    def __post_init__(self) -> None:
        _check_shape(self.k, self.n, len(self.values))

    def subsets(self) -> list[Subset]:
        return k_subsets(self.k, self.n)

    def valuation(self) -> PluckerVector:
        return PluckerVector(self.k, self.n, tuple(v.valuation for v in self.values))

    @property
    def is_positive(self) -> bool:
        return all(v.is_positive for v in self.values)

    def to_report(self) -> PluckerReport:
        return PluckerReport(
            k=self.k,
            n=self.n,
            coords={
                format_subset(s): str(v)
                for s, v in zip(self.subsets(), self.values, strict=True)
            },
        )


def plucker_trop(A: TropMatrix) -> PluckerVector:
    """Tropical permanents of all maximal minors of a k x n matrix.

    Raises:
        DimensionError: If ``k > n``.
    """
    k, n = A.shape
    if k > n:
        raise DimensionError(f"Plucker coordinates need k <= n, got {k}x{n}")
    rows = tuple(range(k))
    return PluckerVector(
        k, n, tuple(permanent_assignment(A.submatrix(rows, s)) for s in k_subsets(k, n))
    )


def plucker_series(M: SeriesMatrix) -> SeriesPluckerVector:
    """Exact maximal minors of a k x n series matrix.

    Raises:
        DimensionError: If ``k > n``.
    """
    k, n = M.shape
    if k > n:
        raise DimensionError(f"Plucker coordinates need k <= n, got {k}x{n}")
    rows = tuple(range(k))
    return SeriesPluckerVector(
        k, n, tuple(det_series(M.submatrix(rows, s)) for s in k_subsets(k, n))
    )


# ============================================================================
# Block embedding and the Stiefel map
# ============================================================================


def iota_trop(B: TropMatrix) -> TropMatrix:
    """``[tropical identity | B with rows reversed]``, a k x (k + m) matrix."""
    k = B.rows
    identity = TropMatrix.identity(k).entries
    return TropMatrix(tuple(identity[r] + B.row(k - 1 - r) for r in range(k)))


def iota_series(B: SeriesMatrix) -> SeriesMatrix:
    """``[identity | signed reversed B]``: row r carries ``(-1)^(k-1-r) * B[k-1-r]``."""
    k = B.rows
    identity = SeriesMatrix.identity(k).entries
    rows = []
    for r in range(k):
        sign = 1 if (k - 1 - r) % 2 == 0 else -1
        rows.append(identity[r] + tuple(v * sign for v in B.entries[k - 1 - r]))
    return SeriesMatrix(tuple(rows))


def minor_subset(k: int, rows: Sequence[int], cols: Sequence[int]) -> Subset:
    """Coordinate of the embedding carrying the minor of B on ``rows x cols``.

    Row i of B lives in row ``k-1-i`` of the embedding and column j in column
    ``k+j``, so the subset is ``([k] minus {k-1-i}) ∪ {k+j}``.
    """
    removed = {k - 1 - i for i in rows}
    return tuple(sorted([c for c in range(k) if c not in removed] + [k + j for j in cols]))


def stiefel_index(k: int, i: int, j: int) -> Subset:
    """Subset whose coordinate equals the entry ``B[i][j]``."""
    return minor_subset(k, (i,), (j,))


def stiefel_trop(B: TropMatrix) -> PluckerVector:
    return plucker_trop(iota_trop(B))


def stiefel_series(B: SeriesMatrix) -> SeriesPluckerVector:
    return plucker_series(iota_series(B))


@dataclass(frozen=True)
class StiefelInversion:
    """Result of inverting the Stiefel map on a tropical Plucker vector."""

    candidate: TropMatrix
    mismatch: tuple[Subset, TropScalar, TropScalar] | None = None
    reason: str | None = None

    @property
    def in_image(self) -> bool:
        return self.reason is None

    def to_report(self) -> StiefelInversionReport:
        mismatch = None
        if self.mismatch is not None:
            subset, given, computed = self.mismatch
            mismatch = CoordinateMismatch(
                subset=[i + 1 for i in subset],
                given=format_scalar(given),
                computed=format_scalar(computed),
            )
        return StiefelInversionReport(
            in_image=self.in_image,
            candidate=self.candidate.to_lists(),
            mismatch=mismatch,
            reason=self.reason,
        )


def invert_stiefel(p: PluckerVector) -> StiefelInversion:
    """Recover B with ``stiefel_trop(B) ~ p`` and B in TN^trop, or explain why none exists.

    The vector is normalized by its ``[k]`` coordinate; the candidate is read
    off the ``k(n-k)`` coordinates that carry single entries, and every
    coordinate is then recomputed from it.

    Raises:
        MalformedVector: If ``k`` is not strictly between 0 and n, or the
            ``[k]`` coordinate or an entry coordinate is -inf.
    """
    k, n = p.k, p.n
    if not 0 < k < n:
        raise MalformedVector(f"Stiefel inversion needs 0 < k < n, got k={k}, n={n}")
    pivot = p[tuple(range(k))]
    if pivot is NEG_INF:
        raise MalformedVector("Coordinate of the subset [k] is -inf")
    offset = finite(pivot)
    q = {s: NEG_INF if v is NEG_INF else finite(v) - offset for s, v in p.items()}

    entries: list[list[Fraction]] = []
    for i in range(k):
        row = []
        for j in range(n - k):
            subset = stiefel_index(k, i, j)
            value = q[subset]
            if value is NEG_INF:
                raise MalformedVector(f"Entry coordinate {format_subset(subset)} is -inf")
            row.append(finite(value))
        entries.append(row)
    candidate = TropMatrix(tuple(tuple(r) for r in entries))

    for subset, computed in stiefel_trop(candidate).items():
        given = q[subset]
        if given != computed:
            logger.debug(
                f"Coordinate {format_subset(subset)}: given {given}, recomputed {computed}"
            )
            return StiefelInversion(
                candidate, (subset, given, computed), "coordinate mismatch"
            )
    if not is_tn_trop(candidate).tn_trop:
        return StiefelInversion(candidate, None, "candidate is not Monge")
    return StiefelInversion(candidate)


def certify_positive_image(B: TropMatrix) -> bool:
    """Check that ``stiefel_trop(B)`` is the valuation of a positive Plucker vector.

    Uses the Hadamard lift of B by a Vandermonde matrix in TP_(2,C), which is
    totally positive for finite Monge B.

    Raises:
        InfiniteEntry: If B has a -inf entry.
        NotTN: If B is not Monge.
    """
    if not B.is_finite:
        raise InfiniteEntry("Positive image certificate needs a finite matrix")
    if not is_tn_trop(B).tn_trop:
        raise NotTN("Positive image certificate needs a Monge matrix")
    constant = tn2c_constant(*B.shape)
    lift = hadamard_lift(B, vandermonde_tp2c(B.rows, B.cols, constant))
    vector = stiefel_series(lift)
    certified = vector.is_positive and vector.valuation() == stiefel_trop(B)
    logger.debug(f"Positive image certificate for {B.rows}x{B.cols} matrix: {certified}")
    return certified

