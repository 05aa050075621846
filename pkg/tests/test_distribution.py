import math
from fractions import Fraction

import numpy as np
import pytest

from collector_lab.distribution import (
    closed_form_pmf,
    closed_form_pmf_rude,
    completion_stats,
    dp_numerator_rows,
    dp_pmf,
    float_closed_form,
    float_pmf,
    mean_coupons,
)
from oracles import brute_force_pmf, harmonic_completion_mean


# ---------------------------------------------------------------- exact DP

def test_dp_boundary_row():
    t = dp_pmf(3, 0)
    assert t.p[0][0] == 1
    assert all(t.p[0][k] == 0 for k in range(1, 4))


def test_dp_first_draw_always_new():
    for m in (1, 2, 5, 9):
        assert dp_pmf(m, 1).p[1][1] == 1


def test_dp_two_draws_two_coupons():
    # all 4 sequences over {1,2}: "11" and "22" leave one distinct coupon
    t = dp_pmf(2, 2)
    assert t.p[2][1] == Fraction(1, 2)
    assert t.p[2][2] == Fraction(1, 2)


def test_dp_matches_enumeration():
    for m in range(1, 4):
        t = dp_pmf(m, 6)
        for n in range(7):
            assert list(t.p[n]) == brute_force_pmf(m, n)


def test_dp_numerator_rows_sum_to_m_pow_n():
    for m in (1, 3, 7):
        gen = dp_numerator_rows(m)
        for n in range(12):
            assert sum(next(gen)) == m**n


def test_dp_conservation_and_support():
    for m in range(1, 6):
        t = dp_pmf(m, 10)
        for n in range(11):
            assert sum(t.p[n]) == 1
            for k in range(m + 1):
                inside = (n == 0 and k == 0) or (n >= 1 and 1 <= k <= min(n, m))
                assert (t.p[n][k] > 0) == inside


def test_dp_absorption_monotone_with_geometric_bound():
    for m in (2, 4, 5):
        t = dp_pmf(m, 12)
        prev = Fraction(0)
        for n in range(13):
            assert t.p[n][m] >= prev
            assert 1 - t.p[n][m] <= m * Fraction(m - 1, m) ** n
            prev = t.p[n][m]


# ------------------------------------------------------------ closed forms

def test_closed_form_examples():
    # 27 equiprobable sequences over {1,2,3}; the 6 permutations hit all three
    assert closed_form_pmf(3, 3, 3) == Fraction(2, 9)
    # 8 sequences over {1,2}; 6 contain both coupons
    assert closed_form_pmf(2, 3, 2) == Fraction(3, 4)


def test_closed_form_single_coupon_column():
    for m in (2, 3, 7):
        for n in (1, 2, 5, 9):
            assert closed_form_pmf(m, n, 1) == Fraction(1, m ** (n - 1))


def test_rude_form_examples():
    assert closed_form_pmf_rude(3, 3, 2) == Fraction(2, 3)
    assert closed_form_pmf_rude(2, 2, 2) == Fraction(1, 2)


def test_rude_equals_simplified():
    for m in range(1, 9):
        for n in range(1, 13):
            for k in range(1, m + 1):
                assert closed_form_pmf_rude(m, n, k) == closed_form_pmf(m, n, k)


def test_closed_forms_match_enumeration():
    for m in range(1, 4):
        for n in range(1, 7):
            brute = brute_force_pmf(m, n)
            for k in range(1, m + 1):
                assert closed_form_pmf(m, n, k) == brute[k]


def test_closed_form_domain_errors():
    with pytest.raises(ValueError):
        closed_form_pmf(3, 2, 0)
    with pytest.raises(ValueError):
        closed_form_pmf(3, 2, 4)
    with pytest.raises(ValueError):
        closed_form_pmf(3, 0, 1)
    with pytest.raises(ValueError):
        closed_form_pmf_rude(2, 1, 0)


# ------------------------------------------------------------ float routes

def test_float_pmf_small_values():
    t = float_pmf(2, 2)
    assert abs(t.p[2][2] - 0.5) < 1e-15
    assert float_pmf(1, 5).p[5][1] == 1.0


def test_float_pmf_row_sums_stay_normalized():
    t = float_pmf(50, 5000)
    sums = t.p.sum(axis=1)
    assert np.max(np.abs(sums - 1.0)) <= 1e-12


def test_float_pmf_close_to_exact():
    exact = dp_pmf(10, 50)
    approx = float_pmf(10, 50)
    for n in range(51):
        for k in range(11):
            assert abs(approx.p[n][k] - float(exact.p[n][k])) < 1e-12


def test_float_closed_form_benign_case():
    value, report = float_closed_form(2, 3, 2)
    assert abs(value - 0.75) <= 1e-15
    assert report.cancellation_ratio < 10
    assert report.finite


def test_float_closed_form_trivial_case():
    value, report = float_closed_form(1, 1, 1)
    assert value == 1.0
    assert report.abs_error == 0.0


def test_float_closed_form_collapses_at_large_n():
    # j^n overflows float64 range here; the naive pipeline keeps no digits,
    # while the float DP route stays accurate (checked in the acceptance
    # suite at 1e-10).
    value, report = float_closed_form(20, 400, 20)
    assert report.cancellation_ratio > 1e6
    assert not report.finite
    assert not math.isfinite(value) or report.abs_error > 1e-2
    assert abs(report.exact - 1.0) < 1e-6


# ------------------------------------------------------- derived statistics

def test_mean_coupons_small():
    assert mean_coupons(2, 2) == Fraction(3, 2)
    for m in (1, 2, 5):
        assert mean_coupons(m, 0) == 0
        assert mean_coupons(m, 1) == 1


def test_mean_coupons_identity():
    for m in range(1, 7):
        for n in range(0, 11):
            expected = m * (1 - Fraction(m - 1, m) ** n)
            got = mean_coupons(m, n)
            assert got == expected
            # scaled by m^n this is an integer identity
            assert (got * m**n).denominator == 1


def test_completion_mean_against_harmonic_sums():
    assert abs(completion_stats(1, 1e-9).mean - 1.0) <= 1e-9
    assert abs(completion_stats(2, 1e-9).mean - 3.0) <= 1e-8
    expected10 = float(harmonic_completion_mean(10))
    assert abs(expected10 - 29.28968254) < 5e-9
    assert abs(completion_stats(10, 1e-9).mean - expected10) <= 1e-6


def test_completion_stats_shape():
    stats = completion_stats(4, 1e-8)
    assert stats.mean >= 4
    assert all(q >= 0 for q in stats.pmf)
    assert all(b >= a for a, b in zip(stats.cdf, stats.cdf[1:]))
    assert stats.cdf[-1] > 1 - 1e-7
    assert abs(sum(stats.pmf) - stats.cdf[-1]) < 1e-12
    # truncated survival sum is below the full mean, within the tolerance
    assert stats.mean <= float(harmonic_completion_mean(4)) + 1e-12
