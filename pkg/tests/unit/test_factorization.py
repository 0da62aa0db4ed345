"""Unit tests for tropical Jacobi factorization."""

import random
from fractions import Fraction

import pytest

from tropos.errors import (
    DimensionError,
    FactorIndexError,
    InconsistentData,
    NotInvertible,
    NotTN,
    SingularPermanent,
)
from tropos.modules.factorization import (
    JacobiFactor,
    SeriesJacobiFactor,
    factor_tn,
    factorization_report,
    jacobi_to_matrix,
    multiply_factors,
    multiply_series_factors,
    neville_eliminate,
)
from tropos.modules.sampling import random_tn_trop
from tropos.modules.series_field import SeriesMatrix, SeriesRat
from tropos.modules.trop_core import NEG_INF, TropMatrix
from tropos.types import FactorRecord, JacobiKind

LOWER, UPPER, DIAG = JacobiKind.LOWER, JacobiKind.UPPER, JacobiKind.DIAG


def M(rows):
    return TropMatrix.from_rows(rows)


def J(kind, i, a):
    return JacobiFactor(kind, i, Fraction(a))


class TestJacobiFactors:
    """Tests for elementary Jacobi matrices."""

    def test_lower_placement(self):
        """Lower(i) sits just below the diagonal."""
        assert jacobi_to_matrix(J(LOWER, 0, 3), 2) == M([[0, "-inf"], [3, 0]])

    def test_upper_placement(self):
        """Upper(i) sits just above the diagonal."""
        assert jacobi_to_matrix(J(UPPER, 1, -1), 3) == M(
            [[0, "-inf", "-inf"], ["-inf", 0, -1], ["-inf", "-inf", 0]]
        )

    def test_diag_placement(self):
        """Diag(i) replaces a diagonal entry."""
        assert jacobi_to_matrix(J(DIAG, 1, 5), 2) == M([[0, "-inf"], ["-inf", 5]])

    def test_index_out_of_range(self):
        """Lower(n - 1) does not fit an n x n matrix."""
        with pytest.raises(FactorIndexError):
            jacobi_to_matrix(J(LOWER, 1, 0), 2)
        with pytest.raises(FactorIndexError):
            J(DIAG, -1, 0)

    def test_infinite_parameter(self):
        """Parameters must be finite."""
        with pytest.raises(InconsistentData):
            JacobiFactor(LOWER, 0, NEG_INF)

    def test_record_is_one_based(self):
        """Records shift the index and print the parameter canonically."""
        factor = J(LOWER, 0, Fraction(-1, 2))
        record = factor.to_record()
        assert record == FactorRecord(kind=LOWER, i=1, a="-1/2")
        assert JacobiFactor.from_record(record) == factor
        assert str(factor) == "Lower(1, -1/2)"

    def test_empty_product(self):
        """No factors multiply to the identity."""
        assert multiply_factors([], 3) == TropMatrix.identity(3)

    def test_report(self):
        """The report carries n and 1-based records."""
        report = factorization_report([J(UPPER, 0, 2)], 2)
        assert report.n == 2
        assert report.factors[0].i == 1


class TestNeville:
    """Tests for Neville elimination over the series field."""

    def test_constant_matrix(self):
        """[[1, 1], [1, 2]] is Lower(1, 1) times Upper(1, 1)."""
        A = SeriesMatrix.from_rows([[1, 1], [1, 2]])
        factors = neville_eliminate(A)
        assert [(f.kind, f.i, f.a) for f in factors] == [
            (LOWER, 0, SeriesRat(1)),
            (UPPER, 0, SeriesRat(1)),
        ]
        assert multiply_series_factors(factors, 2) == A

    def test_product_is_exact(self):
        """Factors multiply back to the input."""
        A = SeriesMatrix.from_rows([["t^2", "t"], ["t", "2*t^2"]])
        assert multiply_series_factors(neville_eliminate(A), 2) == A

    def test_singular(self):
        """A zero determinant raises NotInvertible."""
        with pytest.raises(NotInvertible):
            neville_eliminate(SeriesMatrix.from_rows([[1, 1], [1, 1]]))

    def test_negative_pivot(self):
        """A negative pivot means the matrix is not TN."""
        with pytest.raises(NotTN):
            neville_eliminate(SeriesMatrix.from_rows([[1, 2], [1, 1]]))

    def test_zero_factor_has_no_valuation(self):
        """A zero parameter has no tropical counterpart."""
        assert SeriesJacobiFactor(LOWER, 0, SeriesRat(0)).valuation() is None
        assert SeriesJacobiFactor(LOWER, 0, SeriesRat.monomial(3, 2)).valuation() == J(
            LOWER, 0, 2
        )


class TestFactorTN:
    """Tests for the tropical factorization."""

    def test_strict_monge(self):
        """[[2, 1], [1, 2]] factors as Lower, Diag, Diag, Upper."""
        factors = factor_tn(M([[2, 1], [1, 2]]))
        assert factors == [J(LOWER, 0, -1), J(DIAG, 0, 2), J(DIAG, 1, 2), J(UPPER, 0, -1)]

    def test_tie(self):
        """Zero diagonal factors are dropped."""
        factors = factor_tn(M([[1, 1], [1, 2]]))
        assert factors == [J(LOWER, 0, 0), J(DIAG, 0, 1), J(DIAG, 1, 2), J(UPPER, 0, 0)]

    def test_identity(self):
        """The identity has the empty factorization."""
        assert factor_tn(TropMatrix.identity(3)) == []

    def test_band_with_infinite_corners(self):
        """-inf corners survive the round trip."""
        A = M([[0, 0, "-inf"], [0, 0, 0], ["-inf", 0, 0]])
        assert multiply_factors(factor_tn(A), 3) == A

    def test_not_tn(self):
        """A heavy antidiagonal is rejected."""
        with pytest.raises(NotTN):
            factor_tn(M([[0, 3], [3, 0]]))

    def test_singular_permanent(self):
        """A -inf permanent is rejected."""
        with pytest.raises(SingularPermanent):
            factor_tn(M([[0, "-inf"], ["-inf", "-inf"]]))

    def test_non_square(self):
        """Rectangles cannot be factored."""
        with pytest.raises(DimensionError):
            factor_tn(M([[2, 1, 0], [1, 2, 1]]))

    def test_random_round_trip(self):
        """Products of random Jacobi words factor back to themselves."""
        rng = random.Random(21)
        for _ in range(60):
            A = random_tn_trop(rng, rng.randint(1, 3))
            assert multiply_factors(factor_tn(A), A.rows) == A

    @pytest.mark.slow
    def test_random_round_trip_at_scale(self):
        """Larger words up to 5x5."""
        rng = random.Random(5)
        for _ in range(500):
            A = random_tn_trop(rng, rng.randint(1, 5))
            assert multiply_factors(factor_tn(A), A.rows) == A
