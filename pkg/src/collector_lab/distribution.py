"""Distribution of the number of distinct coupons after n uniform draws.

Let X_n be the number of distinct coupon types seen after n draws with
replacement from m equally likely types, and p(n, k) = P(X_n = k).  This
module produces p(n, k) by three algebraically independent routes:

* ``dp_pmf`` / ``dp_numerator_rows``: the one-step master equation
  p(n, k) = p(n-1, k-1) * (m-k+1)/m + p(n-1, k) * k/m.  All terms are
  nonnegative, so this is also the numerically trustworthy float route.
* ``closed_form_pmf_rude``: the unsimplified closed form
  p(n, k) = (1/m^(n-k)) * prod_{h<k}(1 - h/m) * (1/k!) *
            sum_{j=1..k} (-1)^(k-j) C(k, j) j^n.
* ``closed_form_pmf``: the simplified closed form
  p(n, k) = (C(m, k)/m^n) * sum_{j=1..k} (-1)^(k-j) C(k, j) j^n.

The closed forms are stated for n >= 1 and k in [1, m]; k = 0 is the
boundary convention p(0, 0) = 1 and p(n, 0) = 0 for n >= 1, which the DP
route carries automatically.

Exact arithmetic never reduces fractions mid-recurrence: the DP tracks
integer numerators against the implicit denominator m^n, which keeps the
big-integer work linear and makes conservation (row sum == m^n) an integer
identity.  Floating point has two personalities here: the DP recurrence is
forward-stable (no cancellation), while the naive float evaluation of the
alternating closed form loses all significance once j^n outgrows the
result; ``float_closed_form`` instruments exactly that failure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .numeric import binomial, factorial, falling_product


@dataclass(frozen=True)
class DistTable:
    """Exact table p[n][k] for one m, rows n = 0..n_max, columns k = 0..m."""

    m: int
    n_max: int
    p: tuple[tuple[Fraction, ...], ...]

    def row(self, n: int) -> tuple[Fraction, ...]:
        return self.p[n]


@dataclass(frozen=True, eq=False)
class FloatDistTable:
    """Same shape as DistTable with float64 entries from the DP recurrence."""

    m: int
    n_max: int
    p: np.ndarray  # shape (n_max + 1, m + 1)

    def row(self, n: int) -> np.ndarray:
        return self.p[n]


@dataclass(frozen=True)
class CompletionStats:
    """Law of the completion time T = first n with all m types collected.

    cdf[n] = P(T <= n) = p(n, m) and pmf[n] = P(T = n), both truncated once
    the geometric majorant of the missing tail drops below the requested
    tolerance.  mean approximates E[T] = sum_{n>=0} (1 - cdf[n]).
    """

    m: int
    cdf: tuple[float, ...]
    pmf: tuple[float, ...]
    mean: float


@dataclass(frozen=True)
class CancellationReport:
    """Instrumented record of one naive float closed-form evaluation.

    cancellation_ratio is the largest intermediate magnitude of the
    alternating sum (terms and running partial sums) divided by the
    magnitude of the sum itself; it is +inf when any intermediate overflows
    float range or when the sum vanishes, i.e. when the naive pipeline has
    no significant digits left at all.  abs_error compares the naive value
    against the exact rational route.
    """

    m: int
    n: int
    k: int
    value: float
    exact: float
    abs_error: float
    max_abs_term: float
    cancellation_ratio: float
    finite: bool


def dp_numerator_rows(m: int) -> Iterator[list[int]]:
    """Yield integer numerator rows N[k] with p(n, k) = N[k] / m^n.

    Row n is emitted before row n+1 is computed, with O(m) state held; the
    first yield is the boundary row [1, 0, ..., 0] for n = 0.  Multiplying
    the master equation by m^n keeps every step in integer arithmetic:
    N(n, k) = N(n-1, k-1) * (m-k+1) + N(n-1, k) * k.
    """
    assert m >= 1
    row = [1] + [0] * m
    yield list(row)
    while True:
        row = [0] + [row[k - 1] * (m - k + 1) + row[k] * k for k in range(1, m + 1)]
        yield list(row)


def dp_pmf(m: int, n_max: int) -> DistTable:
    """Exact table via the master equation; row sums are verified exactly."""
    assert m >= 1 and n_max >= 0
    rows: list[tuple[Fraction, ...]] = []
    gen = dp_numerator_rows(m)
    denom = 1
    prev_complete = Fraction(0)
    for n in range(n_max + 1):
        nums = next(gen)
        assert sum(nums) == denom, f"row {n} lost probability mass"
        if n >= 1:
            assert nums[0] == 0
        assert all(nums[k] == 0 for k in range(min(n, m) + 1, m + 1))
        row = tuple(Fraction(nk, denom) for nk in nums)
        assert row[m] >= prev_complete, "absorption probability decreased"
        prev_complete = row[m]
        rows.append(row)
        denom *= m
    return DistTable(m=m, n_max=n_max, p=tuple(rows))


def _alternating_power_sum(k: int, n: int) -> int:
    """sum_{j=1..k} (-1)^(k-j) C(k, j) j^n, exactly (counts surjections)."""
    total = 0
    for j in range(1, k + 1):
        term = binomial(k, j) * j**n
        total += term if (k - j) % 2 == 0 else -term
    return total


def _check_closed_form_domain(m: int, n: int, k: int) -> None:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n < 1:
        raise ValueError(f"closed forms are stated for n >= 1, got n={n}")
    if not 1 <= k <= m:
        raise ValueError(f"k must lie in [1, m]=[1, {m}], got k={k}")


def closed_form_pmf(m: int, n: int, k: int) -> Fraction:
    """Simplified closed form C(m, k)/m^n * alternating sum, exact."""
    _check_closed_form_domain(m, n, k)
    p = Fraction(binomial(m, k) * _alternating_power_sum(k, n), m**n)
    assert 0 <= p <= 1
    return p


def closed_form_pmf_rude(m: int, n: int, k: int) -> Fraction:
    """Unsimplified closed form, kept in its literal factored shape.

    The power 1/m^(n-k) is negative-exponent for k > n (where the sum
    vanishes anyway), so it is formed as an exact rational either way.
    """
    _check_closed_form_domain(m, n, k)
    if n >= k:
        power = Fraction(1, m ** (n - k))
    else:
        power = Fraction(m ** (k - n))
    p = power * falling_product(m, k) * Fraction(_alternating_power_sum(k, n), factorial(k))
    assert 0 <= p <= 1
    return p


def _float_step(row: np.ndarray, stay: np.ndarray, up: np.ndarray) -> np.ndarray:
    nxt = row * stay
    nxt[1:] += row[:-1] * up[1:]
    return nxt


def float_pmf(m: int, n_max: int) -> FloatDistTable:
    """DP recurrence in float64; every update is a nonnegative combination."""
    assert m >= 1 and n_max >= 0
    k = np.arange(m + 1)
    stay = k / m
    up = (m - k + 1) / m
    p = np.zeros((n_max + 1, m + 1))
    p[0, 0] = 1.0
    for n in range(1, n_max + 1):
        p[n] = _float_step(p[n - 1], stay, up)
    return FloatDistTable(m=m, n_max=n_max, p=p)


def _float_pow(base: float, e: int) -> float:
    """IEEE-style power: overflow saturates to +inf instead of raising."""
    try:
        return float(base) ** e
    except OverflowError:
        return math.inf


def float_closed_form(m: int, n: int, k: int) -> tuple[float, CancellationReport]:
    """Naive float64 evaluation of the simplified closed form, instrumented.

    The alternating sum is evaluated term by term as C(k, j) * j^n in
    float64 (j ascending), then scaled by C(m, k)/m^n.  Nothing is done to
    rescue precision; the point is to expose where this pipeline fails
    while the float DP route stays accurate.  The returned report carries
    the divergence from the exact rational value.
    """
    _check_closed_form_domain(m, n, k)
    total = 0.0
    max_abs = 0.0
    finite = True
    for j in range(1, k + 1):
        term = binomial(k, j) * _float_pow(j, n)
        if (k - j) % 2 == 1:
            term = -term
        total += term
        max_abs = max(max_abs, abs(term), abs(total))
        if not (math.isfinite(term) and math.isfinite(total)):
            finite = False
    prefactor = binomial(m, k) / _float_pow(m, n)
    value = prefactor * total
    if not math.isfinite(value):
        finite = False
    if finite and total != 0.0:
        ratio = max_abs / abs(total)
    else:
        ratio = math.inf
    exact = float(closed_form_pmf(m, n, k))
    abs_error = abs(value - exact) if math.isfinite(value) else math.inf
    report = CancellationReport(
        m=m,
        n=n,
        k=k,
        value=value,
        exact=exact,
        abs_error=abs_error,
        max_abs_term=max_abs,
        cancellation_ratio=ratio,
        finite=finite,
    )
    return value, report


def mean_coupons(m: int, n: int) -> Fraction:
    """E[X_n] = sum_k k * p(n, k), exactly, from the DP route.

    Equals m * (1 - (1 - 1/m)^n); the test suite checks that identity
    against this summation.
    """
    assert m >= 1 and n >= 0
    gen = dp_numerator_rows(m)
    for _ in range(n):
        next(gen)
    nums = next(gen)
    return Fraction(sum(k * nk for k, nk in enumerate(nums)), m**n)


def completion_stats(m: int, tail_tol: float) -> CompletionStats:
    """Completion-time law from the DP column p(n, m), float backend.

    The survival sum E[T] = sum_n (1 - P(T <= n)) is truncated at the first
    n where the union-bound majorant m * (1 - 1/m)^n falls below
    tail_tol / m; the neglected tail is then at most
    sum_{j>=n} m * (1 - 1/m)^j = m^2 * (1 - 1/m)^n <= tail_tol.
    """
    assert m >= 1
    assert 0.0 < tail_tol < 1.0
    k = np.arange(m + 1)
    stay = k / m
    up = (m - k + 1) / m
    row = np.zeros(m + 1)
    row[0] = 1.0
    decay = 1.0 - 1.0 / m
    cdf: list[float] = []
    survival: list[float] = []
    n = 0
    majorant = float(m)  # m * decay^n
    while True:
        cdf.append(float(row[m]))
        survival.append(1.0 - float(row[m]))
        if majorant <= tail_tol / m:
            break
        row = _float_step(row, stay, up)
        majorant *= decay
        n += 1
    pmf = [cdf[0]] + [cdf[i] - cdf[i - 1] for i in range(1, len(cdf))]
    return CompletionStats(m=m, cdf=tuple(cdf), pmf=tuple(pmf), mean=math.fsum(survival))
