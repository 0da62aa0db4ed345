"""Dense max-plus matrices."""

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from tropos.errors import DimensionError

from .scalar import NEG_INF, ZERO, TropScalar, format_scalar, to_scalar, trop_mul, trop_sum


@dataclass(frozen=True)
class TropMatrix:
    """An n x m matrix over R ∪ {-inf}.

    Entries are stored row-major as a tuple of row tuples. Indices are 0-based.
    """

    entries: tuple[tuple[TropScalar, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise DimensionError("A tropical matrix needs at least one row and one column")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise DimensionError(
                    f"Ragged matrix: expected rows of length {width}, got {len(row)}"
                )

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Any]]) -> "TropMatrix":
        """Build a matrix from nested iterables of anything ``to_scalar`` accepts."""
        return cls(tuple(tuple(to_scalar(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "TropMatrix":
        """The tropical identity: 0 on the diagonal, -inf elsewhere."""
        return cls(tuple(tuple(ZERO if i == j else NEG_INF for j in range(n)) for i in range(n)))

    @classmethod
    def constant(cls, n: int, m: int, value: TropScalar = ZERO) -> "TropMatrix":
        return cls(tuple(tuple(value for _ in range(m)) for _ in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[TropScalar]) -> "TropMatrix":
        """Tropical diagonal matrix with the given diagonal."""
        n = len(values)
        return cls(
            tuple(tuple(values[i] if i == j else NEG_INF for j in range(n)) for i in range(n))
        )

    # ------------------------------------------------------------------
    # Shape and access
    # ------------------------------------------------------------------

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

    @property
    def is_finite(self) -> bool:
        """True iff no entry is -inf."""
        return all(v is not NEG_INF for row in self.entries for v in row)

    def __getitem__(self, index: tuple[int, int]) -> TropScalar:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> tuple[TropScalar, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[TropScalar, ...]:
        return tuple(row[j] for row in self.entries)

    def diagonal_entries(self) -> tuple[TropScalar, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def finite_entry(self, i: int, j: int) -> Fraction:
        """Entry (i, j) narrowed to a Fraction; raises ``ValueError`` on -inf."""
        value = self.entries[i][j]
        if not isinstance(value, Fraction):
            raise ValueError(f"Entry ({i + 1},{j + 1}) is -inf")
        return value

    def submatrix(self, row_set: Sequence[int], col_set: Sequence[int]) -> "TropMatrix":
        """The I x J submatrix, rows and columns taken in the given order."""
        self._check_indices(row_set, self.rows, "row")
        self._check_indices(col_set, self.cols, "column")
        return TropMatrix(tuple(tuple(self.entries[i][j] for j in col_set) for i in row_set))

    @staticmethod
    def _check_indices(indices: Sequence[int], bound: int, what: str) -> None:
        if not indices:
            raise DimensionError(f"Empty {what} index set")
        for i in indices:
            if not 0 <= i < bound:
                raise DimensionError(f"{what.capitalize()} index {i} out of range 0..{bound - 1}")
        if len(set(indices)) != len(indices):
            raise DimensionError(f"Repeated {what} index in {list(indices)}")

    # ------------------------------------------------------------------
    # Algebra
    # ------------------------------------------------------------------

    def transpose(self) -> "TropMatrix":
        return TropMatrix(tuple(zip(*self.entries, strict=True)))

    def map(self, fn: Callable[[TropScalar], TropScalar]) -> "TropMatrix":
        return TropMatrix(tuple(tuple(fn(v) for v in row) for row in self.entries))

    def __matmul__(self, other: "TropMatrix") -> "TropMatrix":
        """Max-plus product."""
        if self.cols != other.rows:
            raise DimensionError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        other_cols = other.transpose().entries
        return TropMatrix(
            tuple(
                tuple(trop_sum(trop_mul(a, b) for a, b in zip(row, col, strict=True))
                      for col in other_cols)
                for row in self.entries
            )
        )

    def scale(
        self, row_offsets: Sequence[TropScalar], col_offsets: Sequence[TropScalar]
    ) -> "TropMatrix":
        """Tropical diagonal scaling ``D ⊙ A ⊙ D'``."""
        if len(row_offsets) != self.rows or len(col_offsets) != self.cols:
            raise DimensionError("Scaling vectors do not match the matrix shape")
        return TropMatrix(
            tuple(
                tuple(trop_mul(trop_mul(row_offsets[i], v), col_offsets[j])
                      for j, v in enumerate(row))
                for i, row in enumerate(self.entries)
            )
        )

    def permute(self, sigma: Sequence[int]) -> "TropMatrix":
        """Simultaneous row and column permutation: ``B[i][j] = A[sigma[i]][sigma[j]]``."""
        if not self.is_square or sorted(sigma) != list(range(self.rows)):
            raise DimensionError("permute needs a square matrix and a permutation of its indices")
        return TropMatrix(tuple(tuple(self.entries[a][b] for b in sigma) for a in sigma))

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_lists(self) -> list[list[str]]:
        """Rows of canonical scalar strings (``"-inf"`` for the bottom element)."""
        return [[format_scalar(v) for v in row] for row in self.entries]

    def __str__(self) -> str:
        cells = self.to_lists()
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)
