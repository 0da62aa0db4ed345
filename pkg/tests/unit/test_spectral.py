"""Unit tests for characteristic polynomials and eigenvalues."""

import random
from fractions import Fraction

import pytest

from tropos.errors import CapExceeded, DimensionError, InconsistentData, NotTP
from tropos.modules.sampling import random_matrix, random_monge, random_tn_trop
from tropos.modules.series_field import (
    SeriesMatrix,
    SeriesRat,
    parse_series,
    random_positive_lift,
)
from tropos.modules.spectral import (
    EigenSpectrum,
    TropCharPoly,
    char_poly_series,
    char_poly_trop,
    eigen_valuations_via_newton,
    factored_char_poly_value,
    is_active,
    newton_slopes,
    tropical_eigenvalues,
    verify_cc_ee,
    weakly_majorized,
)
from tropos.modules.trop_core import NEG_INF, TropMatrix, max_cycle_mean


def M(rows):
    return TropMatrix.from_rows(rows)


def F(*values):
    return tuple(Fraction(v) for v in values)


class TestNewtonSlopes:
    """Tests for Newton polygon corners."""

    def test_collinear_points_merge(self):
        """(0, 2, 4) has the single corner 2 of multiplicity 2."""
        assert newton_slopes(F(0, 2, 4)) == EigenSpectrum(((Fraction(2), 2),))

    def test_two_corners(self):
        """(0, 1, 0) has corners 1 and -1."""
        assert newton_slopes(F(0, 1, 0)).eigenvalues == ((1, 1), (-1, 1))

    def test_neg_inf_tail(self):
        """A -inf constant term gives a -inf eigenvalue."""
        spectrum = newton_slopes((Fraction(0), Fraction(2), NEG_INF))
        assert spectrum.eigenvalues == ((2, 1), (NEG_INF, 1))
        assert spectrum.size == 2

    def test_leading_coefficient_required(self):
        """c_0 = -inf is inconsistent."""
        with pytest.raises(InconsistentData):
            newton_slopes((NEG_INF, Fraction(1)))

    def test_values_and_records(self):
        """Values repeat by multiplicity; records print canonically."""
        spectrum = newton_slopes(F(0, 2, 4))
        assert spectrum.values() == [2, 2]
        records = spectrum.to_records()
        assert (records[0].value, records[0].multiplicity) == ("2", 2)


class TestTropicalPolynomial:
    """Tests for the tropical characteristic polynomial."""

    def test_tn_fast_path(self):
        """TN^trop coefficients are sums of the largest diagonal entries."""
        p = char_poly_trop(M([[1, 1], [0, 0]]))
        assert p.coeffs == F(0, 1, 1)
        assert tropical_eigenvalues(p).values() == [1, 0]

    def test_general_path(self):
        """A heavy antidiagonal needs the assignment solver."""
        A = M([[0, 3], [3, 0]])
        p = char_poly_trop(A)
        assert p.coeffs == F(0, 0, 6)
        spectrum = tropical_eigenvalues(p)
        assert spectrum.values() == [3, 3]
        assert spectrum.values()[0] == max_cycle_mean(A)

    def test_largest_eigenvalue_is_cycle_mean(self):
        """The top corner is the maximum cycle mean."""
        rng = random.Random(13)
        for _ in range(30):
            A = random_monge(rng, 3, 3)
            assert tropical_eigenvalues(char_poly_trop(A)).values()[0] == max_cycle_mean(A)

    def test_tn_spectrum_is_sorted_diagonal(self):
        """For TN^trop matrices every coefficient is active and the eigenvalues are the diagonal."""
        rng = random.Random(19)
        for _ in range(100):
            A = random_tn_trop(rng, rng.randint(1, 4))
            p = char_poly_trop(A)
            assert all(is_active(p, k) for k in range(p.degree + 1) if p.coeffs[k] is not NEG_INF)
            expected = sorted(A.diagonal_entries(), reverse=True)
            assert tropical_eigenvalues(p).values() == expected

    @pytest.mark.slow
    def test_tn_spectrum_at_scale(self):
        """The sorted-diagonal spectrum holds on a thousand words up to 5x5."""
        rng = random.Random(29)
        for _ in range(1000):
            A = random_tn_trop(rng, rng.randint(1, 5))
            p = char_poly_trop(A)
            assert all(is_active(p, k) for k in range(p.degree + 1) if p.coeffs[k] is not NEG_INF)
            assert tropical_eigenvalues(p).values() == sorted(A.diagonal_entries(), reverse=True)

    def test_cap(self):
        """The brute-force path respects the cap."""
        A = M([[0, 3, 0], [3, 0, 0], [0, 0, 0]])
        with pytest.raises(CapExceeded):
            char_poly_trop(A, cap=2)

    def test_non_square(self):
        """Rectangles have no characteristic polynomial."""
        with pytest.raises(DimensionError):
            char_poly_trop(M([[1, 2]]))

    def test_empty_polynomial(self):
        """At least a_0 is required."""
        with pytest.raises(DimensionError):
            TropCharPoly(())

    def test_evaluate(self):
        """f(x) = max_k (a_k + (n - k) x)."""
        p = TropCharPoly(F(0, 1, 1))
        assert p.evaluate(Fraction(0)) == 1
        assert p.evaluate(Fraction(5)) == 10
        assert p.to_strings() == ["0", "1", "1"]

    def test_factored_form(self):
        """For TN^trop the polynomial splits over the diagonal."""
        p = char_poly_trop(M([[1, 1], [0, 0]]))
        for x in F(-2, 0, "1/2", 3):
            assert factored_char_poly_value(F(1, 0), x) == p.evaluate(x)

    def test_active_coefficients(self):
        """A coefficient below the hull is inactive."""
        p = TropCharPoly(F(0, -1, 4))
        assert is_active(p, 0)
        assert not is_active(p, 1)
        assert is_active(p, 2)
        assert not is_active(TropCharPoly((Fraction(0), NEG_INF)), 1)

    def test_weak_majorization(self):
        """Prefix sums of the sorted sequences are compared."""
        assert weakly_majorized(F(1, 0), F(2, 0))
        assert not weakly_majorized(F(2, 0), F(1, 1))
        with pytest.raises(DimensionError):
            weakly_majorized(F(1), F(1, 2))


class TestSeriesSpectrum:
    """Tests for series characteristic polynomials and root valuations."""

    def test_principal_minor_sums(self):
        """alpha = (1, trace, det)."""
        alphas = char_poly_series(SeriesMatrix.from_rows([[1, 1], [1, 2]]))
        assert alphas == [SeriesRat(1), SeriesRat(3), SeriesRat(1)]

    def test_root_valuations(self):
        """lambda^2 - (t + 2) lambda + 1 has roots of valuation 1 and -1."""
        alphas = [SeriesRat(1), parse_series("t + 2"), SeriesRat(1)]
        assert eigen_valuations_via_newton(alphas).values() == [1, -1]

    def test_zero_leading_coefficient(self):
        """alpha_0 = 0 is inconsistent."""
        with pytest.raises(InconsistentData):
            eigen_valuations_via_newton([SeriesRat(0), SeriesRat(1)])

    def test_minor_cap(self):
        """Principal minor enumeration respects the cap."""
        with pytest.raises(CapExceeded):
            char_poly_series(SeriesMatrix.from_rows([[1, 0], [0, 1]]), cap=1)

    def test_root_valuations_are_weakly_majorized(self):
        """Root valuations of any positive lift are majorized by the tropical eigenvalues."""
        rng = random.Random(59)
        for _ in range(40):
            n = rng.randint(1, 3)
            A = random_matrix(rng, n, n)
            alphas = char_poly_series(random_positive_lift(A, rng))
            newton = eigen_valuations_via_newton(alphas).values()
            assert weakly_majorized(newton, tropical_eigenvalues(char_poly_trop(A)).values())


class TestCcEe:
    """Tests for the comparison of both spectra on TP^trop matrices."""

    def test_random_lift_passes(self):
        """A seeded positive lift matches coefficient by coefficient."""
        report = verify_cc_ee(M([[2, 1], [1, 2]]), seed=3)
        assert report.passed
        assert report.coefficient_checks == [True, True, True]
        assert [r.value for r in report.newton_eigenvalues] == ["2"]

    def test_random_tp_matrices(self):
        """Strict Monge samples pass with several seeds."""
        rng = random.Random(6)
        for seed in range(10):
            assert verify_cc_ee(random_monge(rng, 3, 3, strict=True), seed=seed).passed

    def test_given_lift(self):
        """An explicit lift is used when its valuation matches."""
        lift = SeriesMatrix.from_rows([["t^2", "t"], ["t", "t^2"]])
        report = verify_cc_ee(M([[2, 1], [1, 2]]), lift=lift)
        assert report.series_coefficients[2] == "t^4 - t^2"
        assert report.passed

    def test_lift_mismatch(self):
        """A lift of another matrix is rejected."""
        with pytest.raises(InconsistentData):
            verify_cc_ee(M([[2, 1], [1, 2]]), lift=SeriesMatrix.from_rows([[1, 1], [1, 1]]))

    def test_not_tp(self):
        """Sign-singular minors are outside the controlled class."""
        with pytest.raises(NotTP):
            verify_cc_ee(M([[1, 1], [1, 1]]))
