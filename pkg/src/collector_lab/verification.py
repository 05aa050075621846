"""Cross-route verification suite.

Every quantity in this package can be computed at least two independent
ways; this module runs all of those agreements over a configurable envelope
and reports them as a single pass/fail record.  Zero-tolerance checks
compare exact rationals and report "exact"; statistical checks report their
worst observed deviation against an explicit envelope.

The checks:

* stirling: recurrence triangle == explicit alternating sum, plus the
  closed k=2 diagonal 2^(n-1) - 1.
* pmf-routes: master-equation DP == both closed forms, as exact rationals.
* conservation-support: exact row sums are exactly 1 and the support is
  exactly {0} for n = 0 and [1, min(n, m)] for n >= 1.
* genfun-routes: operator iteration == solved form == EGF series expansion,
  coefficient by coefficient.
* enumeration: all exact routes equal brute-force counting over every
  sequence in {1..m}^n (small envelope; exponential cost).
* mean-identity: sum_k k p(n, k) and g_n'(1) both equal
  m (1 - (1 - 1/m)^n) exactly.
* completion-mean: survival-sum completion mean matches the harmonic sum
  m * H_m within the tail tolerance.
* monte-carlo: seeded simulation within a sampling envelope of the exact
  row, per-bin and as a pooled chi-square.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from scipy.stats import chi2 as _chi2

from .distribution import (
    closed_form_pmf,
    closed_form_pmf_rude,
    completion_stats,
    dp_pmf,
    mean_coupons,
)
from .genfun import POLY_ONE, apply_recurrence, egf_expand, gn_direct
from .montecarlo import SimConfig, compare, simulate
from .stirling import stirling_explicit, stirling_table

DEFAULT_SEED = 0x5EED_C0_11EC7  # arbitrary fixed default; stability matters, value does not
MC_SUITE = ((2, 3), (5, 10), (10, 30))


@dataclass(frozen=True)
class VerifyCheck:
    name: str
    scope: str
    passed: bool
    deviation: str  # "exact" for zero-tolerance checks, else worst case seen

    @property
    def status(self) -> str:
        return "pass" if self.passed else "FAIL"


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[VerifyCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def enumeration_pmf(m: int, n: int) -> list[Fraction]:
    """p(n, k) for k = 0..m by exhaustive counting of all m^n sequences."""
    assert m >= 1 and n >= 0
    counts = [0] * (m + 1)
    for seq in itertools.product(range(m), repeat=n):
        counts[len(set(seq))] += 1
    total = m**n
    assert sum(counts) == total
    return [Fraction(c, total) for c in counts]


def check_stirling(n_max: int = 60) -> VerifyCheck:
    table = stirling_table(n_max)
    ok = True
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            if stirling_explicit(n, k) != table.value(n, k):
                ok = False
        if n >= 2 and table.value(n, 2) != 2 ** (n - 1) - 1:
            ok = False
    return VerifyCheck("stirling", f"1<=k<=n<={n_max}", ok, "exact" if ok else "mismatch")


def check_pmf_routes(m_max: int = 8, n_max: int = 16) -> VerifyCheck:
    ok = True
    for m in range(1, m_max + 1):
        table = dp_pmf(m, n_max)
        for n in range(1, n_max + 1):
            for k in range(1, m + 1):
                dp = table.p[n][k]
                if closed_form_pmf(m, n, k) != dp or closed_form_pmf_rude(m, n, k) != dp:
                    ok = False
    return VerifyCheck("pmf-routes", f"m<={m_max}, n<={n_max}", ok, "exact" if ok else "mismatch")


def check_conservation_support(m_max: int = 8, n_max: int = 16) -> VerifyCheck:
    ok = True
    for m in range(1, m_max + 1):
        table = dp_pmf(m, n_max)
        for n in range(n_max + 1):
            row = table.p[n]
            if sum(row) != 1:
                ok = False
            for k in range(m + 1):
                inside = (n == 0 and k == 0) or (n >= 1 and 1 <= k <= min(n, m))
                if inside and row[k] <= 0:
                    ok = False
                if not inside and row[k] != 0:
                    ok = False
    return VerifyCheck(
        "conservation-support", f"m<={m_max}, n<={n_max}", ok, "exact" if ok else "violated"
    )


def check_genfun_routes(m_max: int = 6, n_max: int = 12) -> VerifyCheck:
    ok = True
    stable = stirling_table(max(n_max, 1))
    for m in range(1, m_max + 1):
        series = egf_expand(m, n_max)
        g = POLY_ONE
        for n in range(n_max + 1):
            direct = gn_direct(m, n, table=stable)
            if g != direct or series.term(n) != direct:
                ok = False
            g = apply_recurrence(g, m)
    return VerifyCheck(
        "genfun-routes", f"m<={m_max}, n<={n_max}", ok, "exact" if ok else "mismatch"
    )


def check_enumeration(m_max: int = 4, n_max: int = 8) -> VerifyCheck:
    ok = True
    for m in range(1, m_max + 1):
        table = dp_pmf(m, n_max)
        for n in range(n_max + 1):
            brute = enumeration_pmf(m, n)
            if list(table.p[n]) != brute:
                ok = False
            for k in range(1, m + 1):
                if n >= 1 and closed_form_pmf(m, n, k) != brute[k]:
                    ok = False
    return VerifyCheck("enumeration", f"m<={m_max}, n<={n_max}", ok, "exact" if ok else "mismatch")


def check_mean_identity(m_max: int = 12, n_max: int = 24) -> VerifyCheck:
    ok = True
    stable = stirling_table(max(n_max, 1))
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            expected = m * (1 - Fraction(m - 1, m) ** n)
            if mean_coupons(m, n) != expected:
                ok = False
            if gn_direct(m, n, table=stable).derivative().eval_exact(1) != expected:
                ok = False
    return VerifyCheck(
        "mean-identity", f"m<={m_max}, n<={n_max}", ok, "exact" if ok else "mismatch"
    )


def check_completion_mean(tail_tol: float = 1e-9) -> VerifyCheck:
    worst = 0.0
    ok = True
    for m in (1, 2, 5, 10):
        harmonic = sum(Fraction(m, j) for j in range(1, m + 1))
        err = abs(completion_stats(m, tail_tol).mean - float(harmonic))
        worst = max(worst, err)
        if err > 1e-6:
            ok = False
    return VerifyCheck("completion-mean", "m in {1,2,5,10}", ok, f"{worst:.3g}")


def check_monte_carlo(trials: int = 100_000, seed: int = DEFAULT_SEED, workers: int = 1) -> VerifyCheck:
    """Seeded simulation against the exact rows.

    The per-bin envelope scales as 5e-3 * sqrt(1e6 / trials): ten binomial
    standard errors at the calibration point of one million trials.  The
    pooled chi-square across the suite is held to its 99.9% quantile.
    """
    tol = 5e-3 * (1_000_000 / trials) ** 0.5
    worst = 0.0
    chi_total = 0.0
    dof_total = 0
    ok = True
    for m, n in MC_SUITE:
        emp = simulate(SimConfig(m=m, n=n, trials=trials, seed=seed), workers=workers)
        report = compare(emp, dp_pmf(m, n))
        worst = max(worst, report.max_abs_deviation)
        chi_total += report.chi_square
        dof_total += report.dof
        if report.max_abs_deviation > tol:
            ok = False
    if dof_total > 0 and chi_total > float(_chi2.ppf(0.999, dof_total)):
        ok = False
    return VerifyCheck(
        "monte-carlo",
        f"(m,n) in {{(2,3),(5,10),(10,30)}}, trials={trials}, seed={seed}",
        ok,
        f"{worst:.3g}",
    )


def run_verification(
    m_max: int = 6,
    n_max: int = 12,
    trials: int = 100_000,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> VerifyReport:
    """Run the full suite; m_max/n_max bound the exact equivalence sweeps."""
    checks = (
        check_stirling(),
        check_pmf_routes(m_max, n_max),
        check_conservation_support(m_max, n_max),
        check_genfun_routes(m_max, n_max),
        check_enumeration(min(m_max, 4), min(n_max, 8)),
        check_mean_identity(),
        check_completion_mean(),
        check_monte_carlo(trials=trials, seed=seed, workers=workers),
    )
    return VerifyReport(checks=checks)
