"""Moment generating polynomials and the bivariate generating function.

With y standing for e^lambda, the MGF of the distinct-coupon count X_n is
the polynomial g_n(y) = sum_k p(n, k) y^k of degree at most m.  Three
independent constructions are provided:

* ``apply_recurrence``: the one-step operator
  g_n(y) = y * [g_{n-1}(y) + ((1 - y)/m) * g'_{n-1}(y)], applied with
  formal (exact rational) differentiation; iterating it from g_0 = 1 walks
  the whole family.
* ``gn_direct``: the solved form
  g_n(y) = sum_k y^k / m^(n-k) * prod_{h<k}(1 - h/m) * a(n, k) with
  a(n, k) the Stirling numbers of the second kind; the sum stops at
  min(n, m) and the zero tail beyond m is asserted rather than summed.
* ``egf_expand``: the series in x of the closed bivariate form
  G_m(x, y) = [1 - y(1 - e^(x/m))]^m, whose x^n/n! coefficient is g_n(y).
  The exponential is expanded to the truncation order first and the m-th
  power is taken with truncation, so this route never consults the other
  two.

Coefficient-by-coefficient agreement of the three routes is the package's
central cross-check (see ``verification``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .numeric import factorial, falling_product
from .stirling import StirlingTable, stirling_table


@dataclass(frozen=True)
class PolyY:
    """Dense polynomial in y with exact rational coefficients.

    coeffs[k] is the coefficient of y^k; trailing zeros are trimmed on
    construction so equality is plain tuple equality.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        trimmed = list(self.coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in trimmed))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other: "PolyY") -> "PolyY":
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyY(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other: "PolyY") -> "PolyY":
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyY(tuple(self.coeff(i) - other.coeff(i) for i in range(n)))

    def __mul__(self, other: "PolyY") -> "PolyY":
        if not self.coeffs or not other.coeffs:
            return PolyY(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyY(tuple(out))

    def scale(self, c: Fraction | int) -> "PolyY":
        c = Fraction(c)
        return PolyY(tuple(a * c for a in self.coeffs))

    def shift(self, k: int = 1) -> "PolyY":
        """Multiply by y^k."""
        assert k >= 0
        return PolyY((Fraction(0),) * k + self.coeffs)

    def derivative(self) -> "PolyY":
        """Formal derivative with exact coefficients."""
        return PolyY(tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1))

    def eval_exact(self, y: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc

    def eval_float(self, y: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * y + float(c)
        return acc


POLY_ONE = PolyY((Fraction(1),))
POLY_ZERO = PolyY(())


def apply_recurrence(g: PolyY, m: int) -> PolyY:
    """One operator step: y * [g + ((1 - y)/m) * g'].

    Degree grows by at most one, and the leading terms of y*g and
    -(y^2/m)*g' cancel exactly when g has degree m, so inputs of degree
    <= m (the whole g_n family) stay at degree <= m.
    """
    assert m >= 1
    d = g.derivative()
    inner = g + d.scale(Fraction(1, m)) - d.shift(1).scale(Fraction(1, m))
    out = inner.shift(1)
    assert out.degree <= g.degree + 1
    if g.degree <= m:
        assert out.degree <= max(g.degree, m)
    return out


def gn_by_recurrence(m: int, n: int) -> PolyY:
    """g_n by n-fold operator application starting from g_0 = 1."""
    assert m >= 1 and n >= 0
    g = POLY_ONE
    for _ in range(n):
        g = apply_recurrence(g, m)
    return g


def gn_direct(m: int, n: int, table: StirlingTable | None = None) -> PolyY:
    """g_n from the solved form with Stirling coefficients.

    A prefilled StirlingTable with n_max >= n may be passed to amortize
    table construction across many calls.
    """
    assert m >= 1 and n >= 0
    if n == 0:
        return POLY_ONE
    if table is None:
        table = stirling_table(n)
    assert table.n_max >= n
    coeffs = [Fraction(0)] * (min(n, m) + 1)
    prod = Fraction(1)  # prod_{h=0..k-1} (1 - h/m), updated incrementally
    for k in range(1, min(n, m) + 1):
        prod *= Fraction(m - (k - 1), m)
        coeffs[k] = Fraction(table.value(n, k), m ** (n - k)) * prod
    if n > m:
        # The factor (1 - m/m) annihilates every term with k > m; check the
        # first tail term instead of summing an identically zero tail.
        assert falling_product(m, m + 1) == 0
    return PolyY(tuple(coeffs))


@dataclass(frozen=True)
class EgfSeries:
    """Truncated expansion of G_m(x, y): terms[n] is the x^n/n! coefficient."""

    m: int
    order: int
    terms: tuple[PolyY, ...]

    def term(self, n: int) -> PolyY:
        if not 0 <= n <= self.order:
            raise ValueError(f"term index {n} outside truncation order {self.order}")
        return self.terms[n]


def _series_mul(a: list[PolyY], b: list[PolyY], order: int) -> list[PolyY]:
    out = [POLY_ZERO] * (order + 1)
    for i, ai in enumerate(a):
        if ai == POLY_ZERO:
            continue
        for j in range(0, order + 1 - i):
            if b[j] == POLY_ZERO:
                continue
            out[i + j] = out[i + j] + ai * b[j]
    return out


def _series_pow(base: list[PolyY], e: int, order: int) -> list[PolyY]:
    result = [POLY_ONE] + [POLY_ZERO] * order
    acc = list(base)
    while e > 0:
        if e & 1:
            result = _series_mul(result, acc, order)
        e >>= 1
        if e:
            acc = _series_mul(acc, acc, order)
    return result


def egf_expand(m: int, order: int) -> EgfSeries:
    """Expand [1 - y(1 - e^(x/m))]^m as an x-series with PolyY coefficients.

    The bracket is 1 + y * sum_{i>=1} x^i / (m^i i!), truncated at `order`
    in x before the m-th power is taken (also with truncation).  Term n of
    the result is n! times the x^n coefficient, i.e. g_n(y).
    """
    assert m >= 1 and order >= 0
    bracket = [POLY_ONE] + [
        PolyY((Fraction(0), Fraction(1, m**i * factorial(i)))) for i in range(1, order + 1)
    ]
    series = _series_pow(bracket, m, order)
    terms = tuple(series[n].scale(factorial(n)) for n in range(order + 1))
    for term in terms:
        assert term.eval_exact(1) == 1, "series term is not a probability polynomial"
    return EgfSeries(m=m, order=order, terms=terms)


def egf_closed_eval(m: int, x: float, y: float) -> float:
    """Float evaluation of [1 - y(1 - e^(x/m))]^m."""
    assert m >= 1
    return (1.0 - y * (1.0 - math.exp(x / m))) ** m
