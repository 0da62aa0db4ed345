"""Trop Core Package - the max-plus semiring and its matrix primitives.

Scalars, matrices, permanents, minor sign classes and cycle means consumed
by every other module.
"""

from .cycle_mean import (
    enumerate_cycle_means,
    is_diag_dominant,
    is_strictly_dominated,
    max_cycle_mean,
    max_cycle_mean_bruteforce,
    principal_dominance_bruteforce,
    weighted_digraph,
)
from .matrix import TropMatrix
from .permanent import (
    MinorClass,
    MinorTag,
    OptimalPermutation,
    PermanentResult,
    classify_2x2,
    classify_minor,
    classify_permanent,
    optimal_assignment,
    permanent_assignment,
    permanent_bruteforce,
    permutation_sign,
)
from .scalar import (
    NEG_INF,
    ZERO,
    NegInf,
    TropScalar,
    finite,
    format_scalar,
    is_finite,
    to_scalar,
    trop_add,
    trop_mul,
    trop_prod,
    trop_sum,
)

__all__ = [
    "NEG_INF",
    "ZERO",
    "MinorClass",
    "MinorTag",
    "NegInf",
    "OptimalPermutation",
    "PermanentResult",
    "TropMatrix",
    "TropScalar",
    "classify_2x2",
    "classify_minor",
    "classify_permanent",
    "enumerate_cycle_means",
    "finite",
    "format_scalar",
    "is_diag_dominant",
    "is_finite",
    "is_strictly_dominated",
    "max_cycle_mean",
    "max_cycle_mean_bruteforce",
    "optimal_assignment",
    "principal_dominance_bruteforce",
    "permanent_assignment",
    "permanent_bruteforce",
    "permutation_sign",
    "to_scalar",
    "trop_add",
    "trop_mul",
    "trop_prod",
    "trop_sum",
    "weighted_digraph",
]
