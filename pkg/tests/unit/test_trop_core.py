"""Unit tests for the max-plus core."""

import random
from fractions import Fraction

import pytest

from tropos.errors import CapExceeded, DimensionError, ParseError
from tropos.modules.sampling import random_matrix
from tropos.modules.trop_core import (
    NEG_INF,
    MinorTag,
    TropMatrix,
    classify_2x2,
    classify_minor,
    enumerate_cycle_means,
    format_scalar,
    is_diag_dominant,
    max_cycle_mean,
    max_cycle_mean_bruteforce,
    optimal_assignment,
    permanent_assignment,
    permanent_bruteforce,
    permutation_sign,
    principal_dominance_bruteforce,
    to_scalar,
    trop_add,
    trop_mul,
    trop_prod,
    trop_sum,
)


def M(rows):
    return TropMatrix.from_rows(rows)


class TestScalars:
    """Tests for tropical scalars and their parsing."""

    def test_parse_fraction_string(self):
        """'p/q' strings parse exactly."""
        assert to_scalar("-3/2") == Fraction(-3, 2)

    def test_parse_decimal_exactly(self):
        """Decimals parse to exact rationals."""
        assert to_scalar("0.25") == Fraction(1, 4)
        assert to_scalar(0.1) == Fraction(1, 10)

    def test_parse_neg_inf(self):
        """Every spelling of -inf gives the singleton."""
        assert to_scalar("-inf") is NEG_INF
        assert to_scalar(float("-inf")) is NEG_INF

    def test_parse_rejects_booleans(self):
        """Booleans are not scalars."""
        with pytest.raises(ParseError):
            to_scalar(True)

    def test_parse_rejects_garbage(self):
        """Unparseable strings raise ParseError."""
        with pytest.raises(ParseError):
            to_scalar("three")

    def test_format(self):
        """Canonical strings for finite and infinite values."""
        assert format_scalar(Fraction(-3, 2)) == "-3/2"
        assert format_scalar(Fraction(4)) == "4"
        assert format_scalar(NEG_INF) == "-inf"

    def test_neg_inf_is_below_everything(self):
        """NEG_INF sorts below every rational."""
        assert NEG_INF < Fraction(-1000)
        assert sorted([Fraction(1), NEG_INF, Fraction(-2)]) == [NEG_INF, Fraction(-2), Fraction(1)]

    def test_semiring_operations(self):
        """max is addition, + is multiplication, -inf absorbs."""
        assert trop_add(NEG_INF, Fraction(3)) == 3
        assert trop_add(Fraction(1), Fraction(2)) == 2
        assert trop_mul(Fraction(2), NEG_INF) is NEG_INF
        assert trop_mul(Fraction(2), Fraction(3)) == 5
        assert trop_sum([]) is NEG_INF
        assert trop_prod([]) == 0


class TestTropMatrix:
    """Tests for dense tropical matrices."""

    def test_ragged_rows_rejected(self):
        """Rows of different lengths raise DimensionError."""
        with pytest.raises(DimensionError):
            M([[1, 2], [3]])

    def test_identity_is_neutral(self):
        """I @ A == A @ I == A."""
        A = M([[0, 1], [2, 3]])
        assert TropMatrix.identity(2) @ A == A
        assert A @ TropMatrix.identity(2) == A

    def test_product_with_neg_inf(self):
        """Max-plus product skips -inf terms."""
        A = M([[0, "-inf"], [1, 0]])
        assert A @ A == M([[0, "-inf"], [1, 0]])

    def test_product_dimension_mismatch(self):
        """Incompatible shapes raise DimensionError."""
        with pytest.raises(DimensionError):
            M([[1, 2]]) @ M([[1, 2]])

    def test_submatrix_rejects_repeats(self):
        """Repeated indices are not a minor."""
        with pytest.raises(DimensionError):
            M([[1, 2], [3, 4]]).submatrix([0, 0], [0, 1])

    def test_scale(self):
        """Diagonal scaling adds row and column offsets."""
        A = M([[0, 1], [2, 3]])
        scaled = A.scale([Fraction(1), Fraction(0)], [Fraction(0), Fraction(-1)])
        assert scaled == M([[1, 1], [2, 2]])

    def test_to_lists(self):
        """Serialization uses canonical strings."""
        assert M([["1/2", "-inf"]]).to_lists() == [["1/2", "-inf"]]


class TestPermanent:
    """Tests for permanents and minor classification."""

    def test_permutation_sign(self):
        """Transpositions are odd, 3-cycles even."""
        assert permutation_sign((1, 0, 2)) == -1
        assert permutation_sign((1, 2, 0)) == 1
        assert permutation_sign(()) == 1

    def test_unique_even_maximizer(self):
        """Diagonal beats antidiagonal: TropPositive."""
        result = permanent_bruteforce(M([[2, 1], [1, 2]]))
        assert result.weight == 4
        assert [m.perm for m in result.maximizers] == [(0, 1)]
        assert classify_minor(M([[2, 1], [1, 2]]), (0, 1), (0, 1)).tag is MinorTag.TROP_POSITIVE

    def test_tie_reports_all_maximizers(self):
        """Ties between parities are SignSingular."""
        result = permanent_bruteforce(M([[1, 1], [1, 1]]))
        assert len(result.maximizers) == 2
        minor = classify_minor(M([[1, 1], [1, 1]]), (0, 1), (0, 1))
        assert minor.tag is MinorTag.SIGN_SINGULAR
        assert minor.is_nonnegative

    def test_odd_maximizer(self):
        """Antidiagonal wins: TropNegative."""
        minor = classify_minor(M([[0, 3], [3, 0]]), (0, 1), (0, 1))
        assert minor.tag is MinorTag.TROP_NEGATIVE
        assert minor.weight == 6
        assert not minor.is_nonnegative

    def test_bottom_minor(self):
        """An all -inf minor is Bottom."""
        minor = classify_minor(M([["-inf", "-inf"], ["-inf", 0]]), (0, 1), (0, 1))
        assert minor.tag is MinorTag.BOTTOM

    def test_closed_form_2x2(self):
        """classify_2x2 matches brute force on the basic cases."""
        assert classify_2x2(Fraction(2), Fraction(1), Fraction(1), Fraction(2)).is_positive
        assert classify_2x2(NEG_INF, Fraction(1), Fraction(1), Fraction(2)).tag is (
            MinorTag.TROP_NEGATIVE
        )
        assert classify_2x2(NEG_INF, NEG_INF, Fraction(1), Fraction(2)).tag is MinorTag.BOTTOM

    def test_assignment_without_matching(self):
        """No finite perfect matching gives -inf."""
        A = M([[0, "-inf", "-inf"], ["-inf", 0, "-inf"], ["-inf", "-inf", "-inf"]])
        assert permanent_assignment(A) is NEG_INF
        assert optimal_assignment(A) == (NEG_INF, None)

    def test_assignment_finds_permutation(self):
        """The optimal permutation is returned with its weight."""
        weight, perm = optimal_assignment(M([[0, 5, 0], [5, 0, 0], [0, 0, 1]]))
        assert weight == 11
        assert perm == (1, 0, 2)

    def test_assignment_matches_bruteforce(self):
        """Hungarian and enumeration agree on random matrices."""
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randint(1, 5)
            A = random_matrix(rng, n, n, neg_inf_prob=0.3)
            assert permanent_assignment(A) == permanent_bruteforce(A).weight

    def test_non_square_rejected(self):
        """Permanents need square matrices."""
        with pytest.raises(DimensionError):
            permanent_assignment(M([[1, 2]]))

    def test_cap_enforced(self):
        """Enumeration beyond the cap raises CapExceeded."""
        with pytest.raises(CapExceeded):
            permanent_bruteforce(TropMatrix.constant(3, 3), cap=2)


class TestCycleMean:
    """Tests for Karp's algorithm and diagonal dominance."""

    def test_two_cycle_dominates(self):
        """The 2-cycle of mean 2 beats both loops."""
        A = M([[1, 4], [0, -2]])
        assert max_cycle_mean(A) == 2
        assert len(enumerate_cycle_means(A)) == 3

    def test_acyclic_graph(self):
        """No cycle gives -inf."""
        assert max_cycle_mean(M([["-inf", 1], ["-inf", "-inf"]])) is NEG_INF

    def test_karp_matches_enumeration(self):
        """Karp agrees with explicit cycle enumeration."""
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randint(1, 5)
            A = random_matrix(rng, n, n, neg_inf_prob=0.4)
            assert max_cycle_mean(A) == max_cycle_mean_bruteforce(A)

    def test_dominant_diagonal(self):
        """A heavy diagonal is (strictly) dominant."""
        A = M([[2, 1], [1, 2]])
        assert is_diag_dominant(A)
        assert is_diag_dominant(A, strict=True)

    def test_tie_is_dominant_but_not_strict(self):
        """Equal weights dominate only weakly."""
        A = M([[1, 1], [1, 1]])
        assert is_diag_dominant(A)
        assert not is_diag_dominant(A, strict=True)

    def test_heavy_antidiagonal(self):
        """An antidiagonal heavier than the diagonal breaks dominance."""
        assert not is_diag_dominant(M([[0, 3], [3, 0]]))

    def test_cycle_criterion_matches_enumeration(self):
        """The cycle criterion agrees with principal-submatrix enumeration."""
        rng = random.Random(5)
        for _ in range(200):
            n = rng.randint(1, 4)
            A = random_matrix(rng, n, n, neg_inf_prob=0.0)
            for strict in (False, True):
                assert is_diag_dominant(A, strict) == principal_dominance_bruteforce(A, strict)
