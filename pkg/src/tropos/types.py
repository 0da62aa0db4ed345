"""Core type definitions for tropos.

Report and configuration types use Pydantic so every result serializes to
JSON the same way. Scalars are carried as canonical strings (``"3/2"``,
``"-inf"``) and every index in a report is 1-based.
"""

from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field


# ============================================================================
# Enums
# ============================================================================


class MinorTag(str, Enum):
    """Sign classes of a tropical minor."""

    TROP_POSITIVE = "TropPositive"
    TROP_NEGATIVE = "TropNegative"
    SIGN_SINGULAR = "SignSingular"
    BOTTOM = "Bottom"


class PositivityClass(str, Enum):
    """Class whose failure a positivity witness explains."""

    TP = "tp"
    TN = "tn"


class JacobiKind(str, Enum):
    """Shapes of elementary Jacobi matrices."""

    LOWER = "Lower"
    UPPER = "Upper"
    DIAG = "Diag"


class LiftStrategy(str, Enum):
    """How a tropical matrix is lifted to the series field."""

    CANONICAL = "canonical"
    HADAMARD = "hadamard"
    RANDOM = "random"


class Command(str, Enum):
    """CLI commands."""

    CLASSIFY = "classify"
    STAIRCASE = "staircase"
    ECHELON = "echelon"
    FACTOR = "factor"
    PRODUCT = "product"
    SPECTRUM = "spectrum"
    PLUCKER = "plucker"
    STIEFEL_INVERT = "stiefel-invert"
    NETWORK_WEIGHT = "network-weight"
    FACTOR_TO_NETWORK = "factor-to-network"
    VERIFY = "verify"


# ============================================================================
# Positivity
# ============================================================================


class MinorWitness(BaseModel):
    """A minor certifying that a positivity class fails."""

    rows: list[int] = Field(description="1-based row indices I")
    cols: list[int] = Field(description="1-based column indices J")
    tag: MinorTag
    weight: str = Field(description="Tropical permanent of the minor")


class PositivityReport(BaseModel):
    """Membership flags for the tropical positivity classes."""

    tp_trop: bool
    tn_trop: bool
    tp2: bool
    tn2: bool
    dd: bool | None = Field(
        default=None, description="Principal diagonal dominance; null for non-square input"
    )
    ndd: bool | None = Field(
        default=None, description="Strict principal diagonal dominance; null for non-square input"
    )
    requested: PositivityClass = PositivityClass.TN
    witness: MinorWitness | None = Field(
        default=None, description="Lexicographically first failing minor of the requested class"
    )

    def flags(self) -> dict[str, bool | None]:
        return {
            "tp_trop": self.tp_trop,
            "tn_trop": self.tn_trop,
            "tp2": self.tp2,
            "tn2": self.tn2,
            "dd": self.dd,
            "ndd": self.ndd,
        }


# ============================================================================
# Structure and factorization
# ============================================================================


class StaircaseReport(BaseModel):
    """Staircase decomposition ``A = u + v + sum lambda_ij L^(i,j)``."""

    u: list[str]
    v: list[str]
    lam: list[list[str]] = Field(
        serialization_alias="lambda",
        description="Coefficients for L^(i,j), i = 2..n, j = 2..m (row-major)"
    )


class EchelonReport(BaseModel):
    """Support pattern and double echelon verdict."""

    pattern: list[list[int]]
    double_echelon: bool


class FactorRecord(BaseModel):
    """A tropical elementary Jacobi factor."""

    kind: JacobiKind
    i: int = Field(ge=1, description="1-based wire index")
    a: str = Field(description="Finite tropical parameter")


class FactorizationReport(BaseModel):
    n: int
    factors: list[FactorRecord]


# ============================================================================
# Spectral
# ============================================================================


class EigenvalueRecord(BaseModel):
    value: str
    multiplicity: int = Field(ge=1)


class CcEeReport(BaseModel):
    """Comparison of a lift's characteristic polynomial with the tropical one."""

    lift: list[list[str]]
    series_coefficients: list[str]
    coefficient_checks: list[bool] = Field(description="val(alpha_k) == a_k for k = 0..n")
    newton_eigenvalues: list[EigenvalueRecord]
    slopes_match: bool
    passed: bool


class SpectrumReport(BaseModel):
    coefficients: list[str] = Field(
        description="a_0..a_n of the tropical characteristic polynomial"
    )
    eigenvalues: list[EigenvalueRecord]
    cc_ee: CcEeReport | None = None


# ============================================================================
# Grassmannian
# ============================================================================


class PluckerReport(BaseModel):
    k: int
    n: int
    coords: dict[str, str] = Field(description="Subset '1,2,...' to coordinate value")


class CoordinateMismatch(BaseModel):
    subset: list[int]
    given: str
    computed: str


class StiefelInversionReport(BaseModel):
    """Outcome of inverting the Stiefel map on a tropical Plucker vector."""

    in_image: bool
    candidate: list[list[str]] | None = None
    mismatch: CoordinateMismatch | None = None
    reason: str | None = None


# ============================================================================
# Verification
# ============================================================================


class ExampleResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerificationReport(BaseModel):
    results: list[ExampleResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[ExampleResult]:
        return [r for r in self.results if not r.passed]


# ============================================================================
# Run configuration
# ============================================================================


class RunConfig(BaseModel):
    """One CLI invocation."""

    command: Command
    inputs: list[Path] = Field(default_factory=list)
    cap: int | None = Field(default=None, ge=1, description="Enumeration cap override")
    seed: int | None = Field(default=None, description="Seed override for randomized lifts")
    lift: LiftStrategy | None = None
    strict: bool = False
    out: Path | None = None


class RunResult(BaseModel):
    """JSON payload and exit status of a run."""

    exit_code: int = 0
    payload: dict[str, Any] = Field(default_factory=dict)
    message: str = ""
