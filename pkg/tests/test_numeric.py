from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from collector_lab.numeric import (
    binomial,
    factorial,
    falling_product,
    format_rational,
    parse_rational,
    pow_rational,
)

rationals = st.fractions(
    min_value=-1000, max_value=1000, max_denominator=10**6
)


def test_binomial_boundary():
    assert binomial(5, 0) == 1
    assert binomial(5, 5) == 1
    assert binomial(0, 0) == 1


def test_binomial_out_of_range_is_zero():
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0


def test_binomial_value():
    # Pascal triangle row 5: 1 5 10 10 5 1
    assert binomial(5, 2) == 10
    assert [binomial(5, k) for k in range(6)] == [1, 5, 10, 10, 5, 1]


def test_falling_product_small():
    assert falling_product(2, 2) == Fraction(1, 2)
    assert falling_product(4, 2) == Fraction(3, 4)
    assert falling_product(4, 2) == Fraction(binomial(4, 2) * factorial(2), 4**2)


def test_falling_product_vanishes_past_m():
    assert falling_product(3, 4) == 0
    assert falling_product(1, 2) == 0


def test_falling_product_matches_binomial_factorial_form():
    # (1 - 0/m)...(1 - (k-1)/m) * m^k == C(m, k) * k! as exact integers.
    for m in range(1, 51):
        for k in range(0, m + 1):
            lhs = falling_product(m, k) * m**k
            assert lhs == binomial(m, k) * factorial(k)


def test_pow_rational():
    assert pow_rational(Fraction(3, 2), 0) == 1
    assert pow_rational(2, 10) == 1024
    assert pow_rational(Fraction(1, 3), 3) == Fraction(1, 27)


def test_canonical_form():
    assert Fraction(2, 4) == Fraction(1, 2)
    assert (Fraction(2, 4).numerator, Fraction(2, 4).denominator) == (1, 2)


def test_serialization_round_trip():
    assert format_rational(Fraction(1, 2)) == "1/2"
    assert format_rational(Fraction(-3, 7)) == "-3/7"
    assert format_rational(Fraction(3)) == "3"
    for s in ("1/2", "-3/7", "3", "0"):
        assert format_rational(parse_rational(s)) == s


@given(a=rationals, b=rationals)
def test_add_mul_round_trip_exact(a, b):
    assert (a + b) - b == a
    if b != 0:
        assert (a * b) / b == a


@given(a=rationals)
def test_pow_zero_is_one(a):
    assert pow_rational(a, 0) == 1
