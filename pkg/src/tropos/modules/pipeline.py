"""Command orchestrator.

``run`` loads the input documents of a ``RunConfig``, dispatches to the
module that answers the command and turns the outcome into a ``RunResult``
carrying a JSON payload and an exit code:

    0  success
    1  mathematical negative result (class test fails, not in the image, ...)
    2  usage or parse error
    3  internal verification failure
"""

import json
import logging
import random
from collections.abc import Callable
from typing import Any

from tropos.config import get_settings
from tropos.errors import (
    DocumentError,
    FactorizationMismatch,
    NotInvertible,
    NotMonge,
    NotTN,
    NotTP,
    SingularPermanent,
    TroposError,
)
from tropos.types import (
    Command,
    EchelonReport,
    LiftStrategy,
    PositivityClass,
    RunConfig,
    RunResult,
    SpectrumReport,
)

from .factorization import factor_tn, factorization_report, multiply_factors
from .grassmannian import certify_positive_image, invert_stiefel, plucker_series, plucker_trop
from .matrix_io import (
    factors_from_document,
    is_series_document,
    load_document,
    matrix_from_document,
    matrix_to_document,
    parse_network_document,
    plucker_from_document,
    series_matrix_from_document,
)
from .monge_structure import is_double_echelon, staircase_decompose, support_pattern
from .networks import (
    PlanarNetwork,
    lift_network,
    network_from_jacobi,
    network_to_document,
    weight_matrix_series,
    weight_matrix_trop,
)
from .positivity import classify_matrix
from .series_field import (
    SeriesMatrix,
    canonical_lift,
    hadamard_lift,
    random_positive_lift,
    tn2c_constant,
    vandermonde_tp2c,
)
from .spectral import (
    char_poly_series,
    char_poly_trop,
    eigen_valuations_via_newton,
    tropical_eigenvalues,
    verify_cc_ee,
)
from .trop_core import TropMatrix, format_scalar
from .worked_examples import run_worked_examples, seeded_sweep

logger = logging.getLogger("tropos.pipeline")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

# Errors that answer the question negatively rather than signal bad input
NEGATIVE_ERRORS = (NotMonge, NotTN, NotTP, SingularPermanent, NotInvertible)


def _dump(model: Any) -> dict[str, Any]:
    return dict(model.model_dump(mode="json", by_alias=True))


def _single_input(config: RunConfig) -> Any:
    if len(config.inputs) != 1:
        raise DocumentError(
            f"Command {config.command.value} takes exactly one input file, "
            f"got {len(config.inputs)}"
        )
    path = config.inputs[0]
    logger.info(f"📄 Loading {path}")
    return load_document(path)


def _load_matrix(config: RunConfig) -> TropMatrix:
    A = matrix_from_document(_single_input(config))
    logger.info(f"   ✓ Loaded {A.rows}x{A.cols} matrix")
    return A


def _seed(config: RunConfig) -> int:
    return get_settings().seed if config.seed is None else config.seed


def build_lift(A: TropMatrix, strategy: LiftStrategy, seed: int) -> SeriesMatrix:
    """Lift ``A`` to the series field with the chosen strategy."""
    if strategy is LiftStrategy.CANONICAL:
        return canonical_lift(A)
    if strategy is LiftStrategy.HADAMARD:
        constant = tn2c_constant(A.rows, A.cols)
        return hadamard_lift(A, vandermonde_tp2c(A.rows, A.cols, constant))
    return random_positive_lift(A, random.Random(seed))


def lift_weights(
    network: PlanarNetwork, W: TropMatrix, strategy: LiftStrategy, seed: int
) -> SeriesMatrix:
    """Series weight matrix of ``network`` whose valuation is its tropical weights ``W``.

    Canonical and random strategies lift edge by edge and sum over paths; the
    Hadamard strategy has no edge form and lifts ``W`` itself.
    """
    if strategy is LiftStrategy.HADAMARD:
        return build_lift(W, strategy, seed)
    rng = random.Random(seed) if strategy is LiftStrategy.RANDOM else None
    return weight_matrix_series(lift_network(network, rng))


# ============================================================================
# Command handlers
# ============================================================================


def _classify(config: RunConfig) -> RunResult:
    A = _load_matrix(config)
    requested = PositivityClass.TP if config.strict else PositivityClass.TN
    report = classify_matrix(A, requested, config.cap)
    holds = report.tp_trop if config.strict else report.tn_trop
    logger.info(f"   {'✓' if holds else '✗'} {requested.value}: {holds}")
    return RunResult(
        exit_code=EXIT_OK if holds else EXIT_NEGATIVE,
        payload=_dump(report),
        message=f"Matrix is {'' if holds else 'not '}{requested.value.upper()}^trop",
    )


def _staircase(config: RunConfig) -> RunResult:
    decomposition = staircase_decompose(_load_matrix(config))
    return RunResult(payload=_dump(decomposition.to_report()), message="Staircase decomposition")


def _echelon(config: RunConfig) -> RunResult:
    A = _load_matrix(config)
    pattern = [[int(cell) for cell in row] for row in support_pattern(A)]
    report = EchelonReport(pattern=pattern, double_echelon=is_double_echelon(A))
    return RunResult(
        exit_code=EXIT_OK if report.double_echelon else EXIT_NEGATIVE,
        payload=_dump(report),
        message="Double echelon" if report.double_echelon else "Not double echelon",
    )


def _factor(config: RunConfig) -> RunResult:
    A = _load_matrix(config)
    factors = factor_tn(A)
    logger.info(f"   ✓ {len(factors)} Jacobi factors, product verified")
    return RunResult(
        payload=_dump(factorization_report(factors, A.rows)),
        message=f"{len(factors)} factors",
    )


def _product(config: RunConfig) -> RunResult:
    n, factors = factors_from_document(_single_input(config))
    product = multiply_factors(factors, n)
    return RunResult(payload=matrix_to_document(product), message=f"Product of {len(factors)}")


def _spectrum(config: RunConfig) -> RunResult:
    doc = _single_input(config)
    if is_series_document(doc):
        return _series_spectrum(series_matrix_from_document(doc), config)
    A = matrix_from_document(doc)
    poly = char_poly_trop(A, config.cap)
    spectrum = tropical_eigenvalues(poly)
    cc_ee = None
    if config.lift is not None:
        lift = build_lift(A, config.lift, _seed(config))
        cc_ee = verify_cc_ee(A, lift)
        logger.info(f"   {'✓' if cc_ee.passed else '✗'} Lift coefficients and slopes agree")
    report = SpectrumReport(
        coefficients=poly.to_strings(), eigenvalues=spectrum.to_records(), cc_ee=cc_ee
    )
    failed = cc_ee is not None and not cc_ee.passed
    return RunResult(
        exit_code=EXIT_INTERNAL if failed else EXIT_OK,
        payload=_dump(report),
        message="Spectrum of the lift disagrees" if failed else "Tropical spectrum",
    )


def _series_spectrum(M: SeriesMatrix, config: RunConfig) -> RunResult:
    # Eigenvalue valuations come from the Newton polygon of the coefficients
    alphas = char_poly_series(M, config.cap)
    report = SpectrumReport(
        coefficients=[format_scalar(a.valuation) for a in alphas],
        eigenvalues=eigen_valuations_via_newton(alphas).to_records(),
    )
    payload = _dump(report)
    payload["series_coefficients"] = [str(a) for a in alphas]
    return RunResult(payload=payload, message="Eigenvalue valuations of a series matrix")


def _plucker(config: RunConfig) -> RunResult:
    doc = _single_input(config)
    if is_series_document(doc):
        vector = plucker_series(series_matrix_from_document(doc))
        payload = _dump(vector.valuation().to_report())
        payload["series"] = _dump(vector.to_report())["coords"]
        payload["positive"] = vector.is_positive
        return RunResult(payload=payload, message="Plucker coordinates and their valuations")
    A = matrix_from_document(doc)
    payload = _dump(plucker_trop(A).to_report())
    if config.lift is not None:
        series = plucker_series(build_lift(A, config.lift, _seed(config)))
        payload["series"] = _dump(series.to_report())["coords"]
        payload["positive"] = series.is_positive
    return RunResult(payload=payload, message="Plucker coordinates")


def _stiefel_invert(config: RunConfig) -> RunResult:
    vector = plucker_from_document(_single_input(config))
    inversion = invert_stiefel(vector)
    payload = _dump(inversion.to_report())
    if inversion.in_image:
        payload["certified_positive"] = certify_positive_image(inversion.candidate)
    return RunResult(
        exit_code=EXIT_OK if inversion.in_image else EXIT_NEGATIVE,
        payload=payload,
        message="In the Stiefel image" if inversion.in_image else "Not in the Stiefel image",
    )


def _network_weight(config: RunConfig) -> RunResult:
    doc = _single_input(config)
    if is_series_document(doc):
        series = weight_matrix_series(parse_network_document(doc, series=True))
        return RunResult(payload=matrix_to_document(series), message="Network weight matrix")
    network = parse_network_document(doc)
    W = weight_matrix_trop(network)
    payload = matrix_to_document(W)
    if config.lift is not None:
        payload["series"] = lift_weights(network, W, config.lift, _seed(config)).to_lists()
        payload["lift"] = config.lift.value
    return RunResult(payload=payload, message="Network weight matrix")


def _factor_to_network(config: RunConfig) -> RunResult:
    doc = _single_input(config)
    if isinstance(doc, dict) and "factors" in doc:
        n, factors = factors_from_document(doc)
    else:
        A = matrix_from_document(doc)
        n, factors = A.rows, factor_tn(A)
    network = network_from_jacobi(factors, n)
    return RunResult(
        payload=network_to_document(network), message=f"Ladder network with {len(factors)} stages"
    )


def _verify(config: RunConfig) -> RunResult:
    logger.info("🧪 Running worked examples")
    report = run_worked_examples()
    report.results.append(seeded_sweep(_seed(config), config.cap))
    failures = report.failures
    return RunResult(
        exit_code=EXIT_OK if report.passed else EXIT_INTERNAL,
        payload=_dump(report),
        message=f"{len(report.results) - len(failures)}/{len(report.results)} examples passed",
    )


HANDLERS: dict[Command, Callable[[RunConfig], RunResult]] = {
    Command.CLASSIFY: _classify,
    Command.STAIRCASE: _staircase,
    Command.ECHELON: _echelon,
    Command.FACTOR: _factor,
    Command.PRODUCT: _product,
    Command.SPECTRUM: _spectrum,
    Command.PLUCKER: _plucker,
    Command.STIEFEL_INVERT: _stiefel_invert,
    Command.NETWORK_WEIGHT: _network_weight,
    Command.FACTOR_TO_NETWORK: _factor_to_network,
    Command.VERIFY: _verify,
}


def run(config: RunConfig) -> RunResult:
    """Execute one command.

    Domain errors never escape: they become a payload ``{"error", "message"}``
    with the exit code of their category. When ``config.out`` is set the
    payload is also written there as JSON.
    """
    logger.info(f"🔺 tropos {config.command.value}")
    try:
        result = HANDLERS[config.command](config)
    except FactorizationMismatch as e:
        logger.error(f"   ✗ Internal verification failed: {e}")
        result = _error(e, EXIT_INTERNAL)
    except NEGATIVE_ERRORS as e:
        logger.info(f"   ✗ {e}")
        result = _error(e, EXIT_NEGATIVE)
    except TroposError as e:
        logger.error(f"   ✗ {e}")
        result = _error(e, EXIT_USAGE)

    if config.out is not None:
        config.out.write_text(json.dumps(result.payload, indent=2) + "\n")
        logger.info(f"   ✓ Wrote {config.out}")
    return result


def _error(e: TroposError, code: int) -> RunResult:
    return RunResult(
        exit_code=code,
        payload={"error": type(e).__name__, "message": str(e)},
        message=str(e),
    )
