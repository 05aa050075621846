"""Exact arbitrary-precision scalars.

Ground truth throughout the package is exact rational arithmetic.  Python's
``int`` is already an arbitrary-precision integer and ``fractions.Fraction``
keeps every value in canonical reduced form (positive denominator, gcd 1),
so ``Rational`` is an alias rather than a reimplementation.  Serialization
is the plain ``"num/den"`` string (``"num"`` when the denominator is 1),
which is exactly ``str(Fraction)``.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with C(n, k) = 0 outside 0 <= k <= n."""
    assert n >= 0, "binomial is defined here for n >= 0"
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    assert n >= 0
    return math.factorial(n)


def falling_product(m: int, k: int) -> Fraction:
    """The product (1 - 0/m)(1 - 1/m)...(1 - (k-1)/m), exactly.

    Vanishes for k > m because the factor at h = m is zero.  For k <= m it
    equals C(m, k) * k! / m**k; that identity is checked in the test suite
    against an independent computation, so this function deliberately keeps
    the literal product form.
    """
    assert m >= 1 and k >= 0
    if k > m:
        return ZERO
    acc = ONE
    for h in range(k):
        acc *= Fraction(m - h, m)
    return acc


def pow_rational(base: Fraction | int, e: int) -> Fraction:
    """Exact nonnegative integer power; pow_rational(x, 0) == 1."""
    assert e >= 0
    return Fraction(base) ** e


def format_rational(q: Fraction) -> str:
    """Canonical wire form: "num/den", or "num" when den == 1."""
    return str(q)


def parse_rational(s: str) -> Fraction:
    return Fraction(s)
