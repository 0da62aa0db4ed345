"""Seeded random generators for property checks.

Every generator takes an explicit ``random.Random`` so runs are reproducible
from a single seed.
"""

import random
from fractions import Fraction

from tropos.errors import InconsistentData
from tropos.types import JacobiKind

from .factorization import JacobiFactor, multiply_factors
from .monge_structure import StaircaseDecomposition, staircase_reconstruct
from .series_field import SeriesMatrix, SeriesRat, hadamard_lift
from .trop_core import NEG_INF, TropMatrix, TropScalar


def random_scalar(
    rng: random.Random, lo: int = -5, hi: int = 5, denominators: tuple[int, ...] = (1, 2)
) -> Fraction:
    """Rational with numerator in ``[lo, hi] * d`` for a random denominator d."""
    d = rng.choice(denominators)
    return Fraction(rng.randint(lo * d, hi * d), d)


def random_matrix(
    rng: random.Random,
    n: int,
    m: int,
    neg_inf_prob: float = 0.2,
    lo: int = -5,
    hi: int = 5,
) -> TropMatrix:
    """Unstructured matrix; each entry is -inf with probability ``neg_inf_prob``."""
    entries: list[list[TropScalar]] = [
        [NEG_INF if rng.random() < neg_inf_prob else random_scalar(rng, lo, hi) for _ in range(m)]
        for _ in range(n)
    ]
    return TropMatrix(tuple(tuple(row) for row in entries))


def random_staircase(
    rng: random.Random, n: int, m: int, strict: bool = False, hi: int = 3
) -> StaircaseDecomposition:
    """Random offsets and staircase coefficients, positive when ``strict``."""
    low = 1 if strict else 0
    return StaircaseDecomposition(
        u=tuple(random_scalar(rng) for _ in range(n)),
        v=tuple(random_scalar(rng) for _ in range(m)),
        lam=tuple(
            tuple(Fraction(rng.randint(low * 2, hi * 2), 2) for _ in range(m - 1))
            for _ in range(n - 1)
        ),
    )


def random_monge(rng: random.Random, n: int, m: int, strict: bool = False) -> TropMatrix:
    """Finite Monge matrix (strict Monge, hence TP^trop, when ``strict``)."""
    return staircase_reconstruct(random_staircase(rng, n, m, strict))


def random_jacobi_word(
    rng: random.Random, n: int, length: int, lo: int = -3, hi: int = 3
) -> list[JacobiFactor]:
    """Random sequence of tropical Jacobi factors on n wires."""
    kinds = [JacobiKind.DIAG] if n == 1 else list(JacobiKind)
    word = []
    for _ in range(length):
        kind = rng.choice(kinds)
        bound = n if kind is JacobiKind.DIAG else n - 1
        word.append(JacobiFactor(kind, rng.randrange(bound), random_scalar(rng, lo, hi)))
    return word


def random_tn_trop(rng: random.Random, n: int, length: int | None = None) -> TropMatrix:
    """TN^trop matrix with finite permanent, as a product of random Jacobi factors.

    Short words leave -inf entries away from the diagonal.
    """
    size = rng.randint(0, 2 * n) if length is None else length
    return multiply_factors(random_jacobi_word(rng, n, size), n)


def _require_constant(C: Fraction | int) -> Fraction:
    constant = Fraction(C)
    if constant < 1:
        raise InconsistentData(f"TN_(2,C) needs C >= 1, got {constant}")
    return constant


def _scaled_vandermonde_lift(rng: random.Random, n: int, m: int, base: Fraction) -> SeriesMatrix:
    rows = [SeriesRat(Fraction(rng.randint(1, 6), rng.randint(1, 3))) for _ in range(n)]
    cols = [SeriesRat(Fraction(rng.randint(1, 6), rng.randint(1, 3))) for _ in range(m)]
    scaled = SeriesMatrix(
        tuple(
            tuple(rows[i] * SeriesRat(base ** (i * j)) * cols[j] for j in range(m))
            for i in range(n)
        )
    )
    return hadamard_lift(random_monge(rng, n, m), scaled)


def random_tp2c(rng: random.Random, n: int, m: int, C: Fraction | int) -> SeriesMatrix:
    """Series matrix in TP_(2,C): a Vandermonde matrix perturbed by a Monge exponent.

    Every 2x2 ratio equals ``base^((k-i)(l-j)) * t^e`` with ``e >= 0`` and a
    random base above C; random positive row and column scalings keep the
    ratios unchanged.

    Raises:
        InconsistentData: If ``C < 1``.
    """
    constant = _require_constant(C)
    return _scaled_vandermonde_lift(rng, n, m, constant + Fraction(rng.randint(2, 8), 2))


def random_tn2c(rng: random.Random, n: int, m: int, C: Fraction | int) -> SeriesMatrix:
    """Series matrix in TN_(2,C) with ties.

    Same construction as ``random_tp2c`` with base exactly C: an adjacent 2x2
    ratio equals C wherever the Monge exponent has a zero defect.

    Raises:
        InconsistentData: If ``C < 1``.
    """
    return _scaled_vandermonde_lift(rng, n, m, _require_constant(C))

