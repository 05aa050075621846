"""Exact and floating-point engine for the coupon collector's distribution.

Everything is computed by at least two independent routes and cross-checked
(see ``collector_lab.verification``): the master-equation DP, two closed
forms built on Stirling numbers of the second kind, generating-function
polynomials by operator iteration / solved form / EGF series expansion,
and seeded Monte Carlo simulation.
"""

from .distribution import (
    CancellationReport,
    CompletionStats,
    DistTable,
    FloatDistTable,
    closed_form_pmf,
    closed_form_pmf_rude,
    completion_stats,
    dp_numerator_rows,
    dp_pmf,
    float_closed_form,
    float_pmf,
    mean_coupons,
)
from .genfun import EgfSeries, PolyY, apply_recurrence, egf_closed_eval, egf_expand, gn_by_recurrence, gn_direct
from .montecarlo import EmpiricalPmf, FitReport, SimConfig, compare, simulate
from .numeric import Rational, binomial, falling_product, format_rational, parse_rational, pow_rational
from .stirling import StirlingTable, stirling_explicit, stirling_table
from .verification import VerifyCheck, VerifyReport, enumeration_pmf, run_verification

__version__ = "0.1.0"

__all__ = [
    "CancellationReport",
    "CompletionStats",
    "DistTable",
    "EgfSeries",
    "EmpiricalPmf",
    "FitReport",
    "FloatDistTable",
    "PolyY",
    "Rational",
    "SimConfig",
    "StirlingTable",
    "VerifyCheck",
    "VerifyReport",
    "apply_recurrence",
    "binomial",
    "closed_form_pmf",
    "closed_form_pmf_rude",
    "compare",
    "completion_stats",
    "dp_numerator_rows",
    "dp_pmf",
    "egf_closed_eval",
    "egf_expand",
    "enumeration_pmf",
    "falling_product",
    "float_closed_form",
    "float_pmf",
    "format_rational",
    "gn_by_recurrence",
    "gn_direct",
    "mean_coupons",
    "parse_rational",
    "pow_rational",
    "run_verification",
    "simulate",
    "stirling_explicit",
    "stirling_table",
]
