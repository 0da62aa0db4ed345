"""Unit tests for double echelon patterns and staircase decompositions."""

import random
from fractions import Fraction

import pytest

from tropos.errors import DimensionError, InfiniteEntry, NegativeCoefficient, NotMonge
from tropos.modules.monge_structure import (
    StaircaseDecomposition,
    consecutive_monge_defects,
    elementary_staircase,
    is_double_echelon,
    is_double_echelon_pattern,
    row_runs,
    single_violation_matrix,
    staircase_decompose,
    staircase_reconstruct,
    staircase_scaling,
    support_pattern,
)
from tropos.modules.positivity import is_tn_trop
from tropos.modules.sampling import random_monge, random_tn_trop
from tropos.modules.trop_core import NEG_INF, TropMatrix


def M(rows):
    return TropMatrix.from_rows(rows)


def F(*values):
    return tuple(Fraction(v) for v in values)


class TestDoubleEchelon:
    """Tests for support patterns."""

    def test_support_pattern(self):
        """True marks finite entries."""
        assert support_pattern(M([[0, "-inf"], ["-inf", 1]])) == ((True, False), (False, True))

    def test_row_runs(self):
        """Runs are first and last finite columns; empty rows give None."""
        pattern = ((True, True, False), (False, False, False), (False, True, True))
        assert row_runs(pattern) == [(0, 1), None, (1, 2)]

    def test_printed_pattern(self):
        """The 4x5 band pattern is double echelon."""
        E = M(
            [
                [1, 1, 3, "-inf", "-inf"],
                ["-inf", 2, 1, 2, "-inf"],
                ["-inf", 1, 1, 1, 3],
                ["-inf", "-inf", 1, 1, 1],
            ]
        )
        assert is_double_echelon(E)

    def test_gap_in_row(self):
        """A hole inside a row breaks the pattern."""
        assert not is_double_echelon(M([[2, "-inf", 2], [2, "-inf", 0]]))

    def test_decreasing_start(self):
        """Run starts may not move left going down."""
        assert not is_double_echelon_pattern(((False, True), (True, True)))

    def test_empty_rows_skipped(self):
        """All -inf rows do not constrain the pattern."""
        assert is_double_echelon_pattern(((True, False), (False, False), (True, True)))

    def test_tn_samples_are_double_echelon(self):
        """TN^trop matrices without -inf rows or columns are double echelon."""
        rng = random.Random(17)
        checked = 0
        for _ in range(300):
            A = random_tn_trop(rng, rng.randint(1, 5))
            rows_ok = all(any(v is not NEG_INF for v in A.row(i)) for i in range(A.rows))
            cols_ok = all(any(v is not NEG_INF for v in A.column(j)) for j in range(A.cols))
            if rows_ok and cols_ok:
                checked += 1
                assert is_double_echelon(A)
        assert checked > 0


class TestStaircase:
    """Tests for the staircase decomposition."""

    def test_three_by_three(self):
        """Coefficients 2 at the two diagonal corners only."""
        d = staircase_decompose(M([[1, 0, -1], [0, 1, 0], [-1, 0, 1]]))
        assert d.u == F(1, 0, -1)
        assert d.v == F(0, -1, -2)
        assert d.lam == (F(2, 0), F(0, 2))

    def test_report_uses_lambda_key(self):
        """The coefficient grid serializes as 'lambda'."""
        report = staircase_decompose(M([[2, 1], [1, 2]])).to_report()
        dumped = report.model_dump(by_alias=True)
        assert dumped["lambda"] == [["2"]]
        assert dumped["u"] == ["2", "1"]

    def test_round_trip(self):
        """Reconstruction inverts decomposition on Monge matrices."""
        rng = random.Random(8)
        for _ in range(200):
            A = random_monge(rng, rng.randint(1, 4), rng.randint(1, 4))
            assert staircase_reconstruct(staircase_decompose(A)) == A

    @pytest.mark.slow
    def test_round_trip_at_scale(self):
        """A thousand Monge matrices up to 5x5 survive the round trip."""
        rng = random.Random(17)
        for _ in range(1000):
            A = random_monge(rng, rng.randint(1, 5), rng.randint(1, 5))
            assert staircase_reconstruct(staircase_decompose(A)) == A

    def test_reconstruction_is_tn(self):
        """Nonnegative staircase combinations are TN^trop."""
        rng = random.Random(12)
        for _ in range(50):
            assert is_tn_trop(random_monge(rng, 3, 3)).tn_trop

    def test_not_monge(self):
        """A negative consecutive defect is rejected."""
        with pytest.raises(NotMonge):
            staircase_decompose(M([[0, 1], [1, 0]]))

    def test_infinite_entries(self):
        """Decomposition needs finite entries."""
        with pytest.raises(InfiniteEntry):
            staircase_decompose(M([[0, "-inf"], [0, 0]]))

    def test_negative_coefficient(self):
        """Reconstruction refuses negative coefficients."""
        d = StaircaseDecomposition(u=F(0, 0), v=F(0, 0), lam=(F(-1),))
        with pytest.raises(NegativeCoefficient):
            staircase_reconstruct(d)

    def test_coefficient_grid_shape(self):
        """lam must be (n-1) x (m-1)."""
        with pytest.raises(DimensionError):
            StaircaseDecomposition(u=F(0, 0), v=F(0, 0), lam=(F(1, 1),))

    def test_scaling_removes_offsets(self):
        """D ⊙ A ⊙ D' is the pure staircase part."""
        A = M([[1, 0, -1], [0, 1, 0], [-1, 0, 1]])
        d = staircase_decompose(A)
        pure = StaircaseDecomposition(u=F(0, 0, 0), v=F(0, 0, 0), lam=d.lam)
        staircase = staircase_reconstruct(pure)
        assert A.scale(*staircase_scaling(d)) == staircase
        assert staircase == M([[0, 0, 0], [0, 2, 2], [0, 2, 4]])


class TestElementaryMatrices:
    """Tests for elementary staircases and single violations."""

    def test_elementary_staircase(self):
        """Ones on the lower-right block."""
        assert elementary_staircase(2, 3, 1, 1) == M([[0, 0, 0], [0, 1, 1]])

    def test_elementary_staircase_range(self):
        """The corner must leave a first row and column."""
        with pytest.raises(DimensionError):
            elementary_staircase(2, 2, 0, 1)

    def test_single_violation(self):
        """Exactly one consecutive defect is negative."""
        A = single_violation_matrix(3, 3, 1, 2)
        assert consecutive_monge_defects(A) == [[1, -1], [1, 1]]
        assert not is_tn_trop(A).tn_trop
