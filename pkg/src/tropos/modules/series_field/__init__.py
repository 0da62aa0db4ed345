"""Series Field Package - exact arithmetic in the nonarchimedean field K.

K is modeled by quotients of generalized polynomials in t (finite sums of
c * t^e with rational c and e). Provides valuations, signs, lifts of
tropical matrices, exact determinants and total positivity tests.
"""

from .genpoly import GenPoly, common_denominator, reduce_fraction
from .matrix import (
    SeriesMatrix,
    adversarial_lift,
    canonical_lift,
    det_laplace,
    det_series,
    find_failing_minor,
    hadamard_lift,
    is_tn2c,
    is_tn_series,
    iter_minors,
    random_positive_lift,
    tn2c_constant,
    tn2c_threshold,
    valuation_matrix,
    vandermonde_tp2c,
)
from .series import SeriesRat, Sign, parse_series, sign_of, valuation

__all__ = [
    "GenPoly",
    "SeriesMatrix",
    "SeriesRat",
    "Sign",
    "adversarial_lift",
    "canonical_lift",
    "common_denominator",
    "det_laplace",
    "det_series",
    "find_failing_minor",
    "hadamard_lift",
    "is_tn2c",
    "is_tn_series",
    "iter_minors",
    "parse_series",
    "random_positive_lift",
    "reduce_fraction",
    "sign_of",
    "tn2c_constant",
    "tn2c_threshold",
    "valuation",
    "valuation_matrix",
    "vandermonde_tp2c",
]
