"""Error hierarchy for tropos.

Every domain failure derives from ``ValueError`` so that callers which only
catch ``ValueError`` (the CLI, the pipeline) keep handling them uniformly.
Predicates report negative answers as values; operations that need a class
membership (factoring, spectral comparison) raise the matching error.
"""


class TroposError(ValueError):
    """Base class for all tropos errors."""


class DimensionError(TroposError):
    """Shapes do not fit the operation (non-square, mismatched sizes, bad index sets)."""


class CapExceeded(TroposError):
    """An enumeration would exceed the configured size cap."""

    def __init__(self, size: int, cap: int, what: str = "enumeration") -> None:
        super().__init__(f"{what} of size {size} exceeds the configured cap {cap}")
        self.size = size
        self.cap = cap


class InfiniteEntry(TroposError):
    """A finite matrix was required but an entry is -inf."""


class InconsistentData(TroposError):
    """Input data does not describe any admissible object."""


class NotMonge(TroposError):
    """A consecutive Monge inequality fails."""


class NegativeCoefficient(TroposError):
    """A staircase coefficient is negative."""


class NotTN(TroposError):
    """The matrix is not totally nonnegative (tropically or over the series field)."""


class NotTP(TroposError):
    """The matrix is not totally positive (tropically or over the series field)."""


class SingularPermanent(TroposError):
    """The tropical permanent is -inf."""


class NotInvertible(TroposError):
    """The series matrix has zero determinant."""


class FactorizationMismatch(TroposError):
    """The product of computed factors differs from the input; an internal bug."""


class FactorIndexError(TroposError, IndexError):
    """A Jacobi factor index falls outside the matrix size."""


class MalformedVector(TroposError):
    """A Plucker vector is missing coordinates or has an infinite pivot coordinate."""


class ParseError(TroposError):
    """A scalar or series literal could not be parsed."""


class DivisionByZeroError(TroposError, ZeroDivisionError):
    """Division by the zero element of the series field."""


class NotAcyclic(TroposError):
    """A network contains a directed cycle."""


class DocumentError(TroposError):
    """An input document does not match its JSON schema."""
