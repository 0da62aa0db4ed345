"""Regression suite of small worked examples with known answers.

Each example returns a list of ``(description, holds)`` pairs; an example
passes when every pair holds and nothing raises.
"""

import logging
import random
from collections.abc import Callable
from fractions import Fraction

from tropos.errors import TroposError
from tropos.types import ExampleResult, JacobiKind, MinorTag, VerificationReport

from .factorization import JacobiFactor, factor_tn, multiply_factors
from .grassmannian import (
    PluckerVector,
    certify_positive_image,
    invert_stiefel,
    iota_series,
    iota_trop,
    plucker_series,
    plucker_trop,
    stiefel_series,
    stiefel_trop,
)
from .monge_structure import is_double_echelon, staircase_decompose, support_pattern
from .networks import example_network, weight_matrix_trop
from .positivity import initial_minors, is_tn_trop, is_tp_trop
from .sampling import random_monge
from .series_field import (
    SeriesMatrix,
    canonical_lift,
    det_series,
    hadamard_lift,
    is_tn2c,
    is_tn_series,
    parse_series,
    random_positive_lift,
    tn2c_constant,
    vandermonde_tp2c,
)
from .spectral import (
    EigenSpectrum,
    char_poly_series,
    char_poly_trop,
    eigen_valuations_via_newton,
    is_active,
    tropical_eigenvalues,
    verify_cc_ee,
)
from .trop_core import TropMatrix, classify_minor, permanent_assignment, to_scalar

logger = logging.getLogger("tropos.worked_examples")

Checks = list[tuple[str, bool]]

EXAMPLES: dict[str, Callable[[], Checks]] = {}


def example(name: str) -> Callable[[Callable[[], Checks]], Callable[[], Checks]]:
    """Register a worked example under ``name``."""

    def register(fn: Callable[[], Checks]) -> Callable[[], Checks]:
        EXAMPLES[name] = fn
        return fn

    return register


def _trop(rows: list[list[object]]) -> TropMatrix:
    return TropMatrix.from_rows(rows)


def _vector(k: int, n: int, values: list[object]) -> PluckerVector:
    return PluckerVector(k, n, tuple(to_scalar(v) for v in values))


def _spectrum(*pairs: tuple[object, int]) -> EigenSpectrum:
    return EigenSpectrum(tuple((to_scalar(v), m) for v, m in pairs))


# ============================================================================
# Spectral
# ============================================================================


@example("char-poly-2x2")
def _char_poly_2x2() -> Checks:
    poly = char_poly_trop(_trop([[2, 1], [1, 2]]))
    return [
        ("coefficients are (0, 2, 4)", poly.coeffs == tuple(map(Fraction, (0, 2, 4)))),
        ("eigenvalue 2 of multiplicity 2", tropical_eigenvalues(poly) == _spectrum((2, 2))),
    ]


@example("series-char-poly-2x2")
def _series_char_poly_2x2() -> Checks:
    alphas = char_poly_series(SeriesMatrix.from_rows([["t^2", "t"], ["t", "t^2"]]))
    expected = [parse_series(s) for s in ("1", "2*t^2", "t^4 - t^2")]
    return [
        ("alpha = (1, 2t^2, t^4 - t^2)", alphas == expected),
        ("valuations are (0, 2, 4)", [a.valuation for a in alphas] == [0, 2, 4]),
        ("root valuations are 2, 2", eigen_valuations_via_newton(alphas) == _spectrum((2, 2))),
    ]


@example("char-poly-outside-tp")
def _char_poly_outside_tp() -> Checks:
    lift = SeriesMatrix.from_rows([["t + 1", "t"], ["1", "1"]])
    alphas = char_poly_series(lift)
    trop_poly = char_poly_trop(lift.valuation())
    newton = _spectrum((1, 1), (-1, 1))
    eigenvalues = _spectrum((1, 1), (0, 1))
    return [
        ("valuation is [[1, 1], [0, 0]]", lift.valuation() == _trop([[1, 1], [0, 0]])),
        ("alpha = (1, t + 2, 1)", alphas == [parse_series(s) for s in ("1", "t + 2", "1")]),
        ("root valuations are 1, -1", eigen_valuations_via_newton(alphas) == newton),
        ("tropical eigenvalues are 1, 0", tropical_eigenvalues(trop_poly) == eigenvalues),
        ("valuation is not TP^trop", not is_tp_trop(lift.valuation()).tp_trop),
    ]


@example("tn-spectrum-is-diagonal")
def _tn_spectrum_is_diagonal() -> Checks:
    A = _trop([[3, 1, 0], [1, 1, 0], [0, 0, 2]])
    poly = char_poly_trop(A)
    return [
        ("matrix is TN^trop", is_tn_trop(A).tn_trop),
        ("coefficients are (0, 3, 5, 6)", poly.coeffs == tuple(map(Fraction, (0, 3, 5, 6)))),
        ("every coefficient is active", all(is_active(poly, k) for k in range(4))),
        ("eigenvalues are the diagonal 3, 2, 1",
         tropical_eigenvalues(poly) == _spectrum((3, 1), (2, 1), (1, 1))),
    ]


@example("valuation-of-difference")
def _valuation_of_difference() -> Checks:
    roots = [parse_series("t^2 + t"), parse_series("t^2 - t")]
    alphas = char_poly_series(SeriesMatrix.from_rows([["t^2", "t"], ["t", "t^2"]]))
    return [
        ("val(t^2 - t) = 2", roots[1].valuation == 2),
        ("t^2 - t is positive", roots[1].is_positive),
        ("t - t^2 is negative with valuation 2",
         not parse_series("t - t^2").is_nonnegative and parse_series("t - t^2").valuation == 2),
        ("roots sum to alpha_1", roots[0] + roots[1] == alphas[1]),
        ("roots multiply to alpha_2", roots[0] * roots[1] == alphas[2]),
    ]


# ============================================================================
# Lifts and positivity
# ============================================================================


@example("positive-lift-of-non-tp-valuation")
def _positive_lift_of_non_tp_valuation() -> Checks:
    M = SeriesMatrix.from_rows([["2*t", "t"], ["1", "1"]])
    return [
        ("lift is totally positive", is_tn_series(M, strict=True)),
        ("valuation is not TP^trop", not is_tp_trop(M.valuation()).tp_trop),
    ]


@example("all-ones-hadamard-lift")
def _all_ones_hadamard_lift() -> Checks:
    A = _trop([[0, 0, "-inf"], [0, 0, 0], ["-inf", 0, 0]])
    det = det_series(canonical_lift(A))
    return [
        ("matrix is TN^trop", is_tn_trop(A).tn_trop),
        ("permanent is 0", permanent_assignment(A) == 0),
        ("canonical lift has determinant -1", det == parse_series("-1")),
    ]


@example("vandermonde-hadamard-lift")
def _vandermonde_hadamard_lift() -> Checks:
    A = _trop([[0, 0, "-inf"], [0, 0, 0], ["-inf", 0, 0]])
    C = tn2c_constant(3, 3)
    V = vandermonde_tp2c(3, 3, C)
    lift = hadamard_lift(A, V)
    expected = SeriesMatrix.from_rows([["1", "1", "0"], ["1", "5", "25"], ["0", "25", "625"]])
    return [
        ("C = 4 and the Vandermonde base is 5", C == 4 and V[1, 1] == parse_series("5")),
        ("Vandermonde factor is in TN_(2,4)", is_tn2c(V, C)),
        ("lift is B * t^A", lift == expected),
        ("lift is totally nonnegative", is_tn_series(lift)),
        ("lift is not totally positive", not is_tn_series(lift, strict=True)),
        ("determinant is 1875", det_series(lift) == parse_series("1875")),
        ("valuation is A", lift.valuation() == A),
    ]


@example("cancelling-lift")
def _cancelling_lift() -> Checks:
    M = SeriesMatrix.from_rows([["1", "1"], ["1 - t^-1", "1 + t^-1"]])
    det = det_series(M)
    return [
        ("determinant is 2t^-1", det == parse_series("2*t^-1")),
        ("valuation of the determinant is -1", det.valuation == -1),
        ("permanent of the valuation is 0", permanent_assignment(M.valuation()) == 0),
    ]


@example("singular-initial-minors")
def _singular_initial_minors() -> Checks:
    A = _trop([[1, 1, 1], [1, 1, 3], [2, 2, 1]])
    initial_ok = all(
        classify_minor(A, rows, cols).is_nonnegative for rows, cols in initial_minors(3, 3)
    )
    witness = is_tn_trop(A).witness
    return [
        ("initial minors are nonnegative", initial_ok),
        ("matrix is not TN^trop", not is_tn_trop(A).tn_trop),
        (
            "bottom-right 2x2 minor is negative",
            classify_minor(A, (1, 2), (1, 2)).tag is MinorTag.TROP_NEGATIVE,
        ),
        ("a witness is reported", witness is not None),
    ]


# ============================================================================
# Structure
# ============================================================================


@example("broken-echelon")
def _broken_echelon() -> Checks:
    A = _trop([[2, "-inf", 2], [2, "-inf", 0]])
    return [
        ("not TN^trop", not is_tn_trop(A).tn_trop),
        ("not double echelon", not is_double_echelon(A)),
    ]


@example("double-echelon-pattern")
def _double_echelon_pattern() -> Checks:
    E = _trop(
        [
            [1, 1, 3, "-inf", "-inf"],
            ["-inf", 2, 1, 2, "-inf"],
            ["-inf", 1, 1, 1, 3],
            ["-inf", "-inf", 1, 1, 1],
        ]
    )
    expected = [[1, 1, 1, 0, 0], [0, 1, 1, 1, 0], [0, 1, 1, 1, 1], [0, 0, 1, 1, 1]]
    pattern = [[int(cell) for cell in row] for row in support_pattern(E)]
    return [
        ("support pattern matches", pattern == expected),
        ("pattern is double echelon", is_double_echelon(E)),
    ]


@example("staircase-3x3")
def _staircase_3x3() -> Checks:
    d = staircase_decompose(_trop([[1, 0, -1], [0, 1, 0], [-1, 0, 1]]))
    return [
        ("u = (1, 0, -1)", d.u == tuple(map(Fraction, (1, 0, -1)))),
        ("v = (0, -1, -2)", d.v == tuple(map(Fraction, (0, -1, -2)))),
        ("coefficients 2 at the two diagonal corners only",
         d.lam == ((Fraction(2), Fraction(0)), (Fraction(0), Fraction(2)))),
    ]


# ============================================================================
# Factorization and networks
# ============================================================================


@example("factor-2x2")
def _factor_2x2() -> Checks:
    A = _trop([[2, 1], [1, 2]])
    factors = factor_tn(A)
    expected = [
        JacobiFactor(JacobiKind.LOWER, 0, Fraction(-1)),
        JacobiFactor(JacobiKind.DIAG, 0, Fraction(2)),
        JacobiFactor(JacobiKind.DIAG, 1, Fraction(2)),
        JacobiFactor(JacobiKind.UPPER, 0, Fraction(-1)),
    ]
    return [
        ("factors are Lower, Diag, Diag, Upper", factors == expected),
        ("product reproduces the matrix", multiply_factors(factors, 2) == A),
    ]


@example("factor-with-infinite-entries")
def _factor_with_infinite_entries() -> Checks:
    A = _trop([[0, 0, "-inf"], [0, 0, 0], ["-inf", 0, 0]])
    return [("product reproduces the matrix", multiply_factors(factor_tn(A), 3) == A)]


@example("planar-network-2x2")
def _planar_network_2x2() -> Checks:
    W = weight_matrix_trop(example_network(6))
    return [
        ("weight matrix is [[1, 3], [4, 6]]", W == _trop([[1, 3], [4, 6]])),
        ("weight matrix is TN^trop", is_tn_trop(W).tn_trop),
    ]


# ============================================================================
# Grassmannian
# ============================================================================


@example("block-embedding-3x2")
def _block_embedding_3x2() -> Checks:
    B = _trop([[0, -2], [0, -1], [0, 0]])
    lifted = SeriesMatrix.from_rows([["1", "t^-2"], ["1", "t^-1"], ["1", "1"]])
    expected = SeriesMatrix.from_rows(
        [
            ["1", "0", "0", "1", "1"],
            ["0", "1", "0", "-1", "-t^-1"],
            ["0", "0", "1", "1", "t^-2"],
        ]
    )
    tropical = _trop(
        [
            [0, "-inf", "-inf", 0, 0],
            ["-inf", 0, "-inf", 0, -1],
            ["-inf", "-inf", 0, 0, -2],
        ]
    )
    return [
        ("series embedding alternates the row signs", iota_series(lifted) == expected),
        ("tropical embedding is [I | reversed B]", iota_trop(B) == tropical),
        ("valuation commutes with the embedding", iota_series(lifted).valuation() == tropical),
    ]


@example("stiefel-3x5")
def _stiefel_3x5() -> Checks:
    B = _trop([[0, -2], [0, -1], [0, 0]])
    lifted = SeriesMatrix.from_rows([["1", "t^-2"], ["1", "t^-1"], ["1", "1"]])
    series_expected = [
        parse_series(s)
        for s in (
            "1", "1", "t^-2", "1", "t^-1", "t^-1 - t^-2", "1", "1", "1 - t^-2", "1 - t^-1",
        )
    ]
    inversion = invert_stiefel(stiefel_trop(B))
    return [
        ("tropical vector matches",
         stiefel_trop(B) == _vector(3, 5, [0, 0, -2, 0, -1, -1, 0, 0, 0, 0])),
        ("series vector matches", list(stiefel_series(lifted).values) == series_expected),
        ("inversion recovers B", inversion.in_image and inversion.candidate == B),
        ("image is certified positive", certify_positive_image(B)),
    ]


@example("stiefel-outside-image")
def _stiefel_outside_image() -> Checks:
    D = _trop([[0, -1, -2, -3], [0, 0, 0, 0]])
    vector = plucker_trop(D)
    lift = plucker_series(canonical_lift(D))
    inversion = invert_stiefel(vector)
    return [
        ("vector is (0:0:0:-1:-1:-2)", vector == _vector(2, 4, [0, 0, 0, -1, -1, -2])),
        ("lifted vector is positive with matching valuation",
         lift.is_positive and lift.valuation() == vector),
        ("vector is outside the Stiefel image", not inversion.in_image),
        ("candidate is [[0, 0], [-1, -1]]", inversion.candidate == _trop([[0, 0], [-1, -1]])),
        ("mismatch at {3,4}: -2 given, -1 recomputed",
         inversion.mismatch == ((2, 3), Fraction(-2), Fraction(-1))),
    ]


# ============================================================================
# Runner
# ============================================================================


def run_worked_examples(names: list[str] | None = None) -> VerificationReport:
    """Run the registered examples (all of them by default)."""
    report = VerificationReport()
    for name in names or list(EXAMPLES):
        try:
            checks = EXAMPLES[name]()
        except TroposError as e:
            report.results.append(ExampleResult(name=name, passed=False, detail=str(e)))
            logger.info(f"   ✗ {name}: {e}")
            continue
        failed = [description for description, holds in checks if not holds]
        report.results.append(
            ExampleResult(name=name, passed=not failed, detail="; ".join(failed))
        )
        logger.info(f"   {'✗' if failed else '✓'} {name}")
    return report



def _sweep_checks(A: TropMatrix, rng: random.Random, cap: int | None) -> Checks:
    n, m = A.shape
    hadamard = hadamard_lift(A, vandermonde_tp2c(n, m, tn2c_constant(n, m)))
    checks = [
        ("Hadamard lift is totally positive", is_tn_series(hadamard, strict=True, cap=cap)),
        ("positive lift is totally positive",
         is_tn_series(random_positive_lift(A, rng), strict=True, cap=cap)),
        ("Stiefel inversion recovers the matrix", invert_stiefel(stiefel_trop(A)).candidate == A),
    ]
    if n == m:
        checks.append(("Jacobi factors multiply back", multiply_factors(factor_tn(A), n) == A))
        checks.append(
            ("lift spectrum matches", verify_cc_ee(A, random_positive_lift(A, rng)).passed)
        )
    return checks


def seeded_sweep(seed: int, cap: int | None = None, samples: int = 20) -> ExampleResult:
    """Seeded checks on random strict Monge matrices up to 3x3.

    Unlike the fixed examples, a ``CapExceeded`` from the minor enumeration
    propagates so that a too small cap surfaces as a usage error.
    """
    rng = random.Random(seed)
    failed: list[str] = []
    for index in range(samples):
        A = random_monge(rng, rng.randint(1, 3), rng.randint(1, 3), strict=True)
        failed += [
            f"sample {index + 1}: {description}"
            for description, holds in _sweep_checks(A, rng, cap)
            if not holds
        ]
    name = f"seeded-sweep-{seed}"
    logger.info(f"   {'✗' if failed else '✓'} {name} ({samples} samples)")
    return ExampleResult(name=name, passed=not failed, detail="; ".join(failed))
