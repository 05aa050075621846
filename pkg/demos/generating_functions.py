"""
Generating-function views of the collection process
====================================================

The MGF of the distinct-count X_n, written in y = e^lambda, is a polynomial
g_n(y) whose y^k coefficient is p(n, k).  The family satisfies a one-step
differential recurrence, has a solved form built on Stirling numbers of the
second kind, and rolls up into the closed bivariate function
G_m(x, y) = [1 - y(1 - e^(x/m))]^m.  This demo walks all three and shows
them coincide coefficient by coefficient.
"""

import math
from fractions import Fraction

from collector_lab import (
    apply_recurrence,
    egf_closed_eval,
    egf_expand,
    gn_by_recurrence,
    gn_direct,
)
from collector_lab.genfun import POLY_ONE

M, ORDER = 3, 10


def pretty(poly):
    parts = []
    for k, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        parts.append(f"({c})y^{k}" if k else f"{c}")
    return " + ".join(parts) if parts else "0"


############################################################
# Operator iteration from g_0 = 1

g = POLY_ONE
print(f"g_n(y) for m = {M} by operator iteration:\n")
for n in range(6):
    print(f"  g_{n} =", pretty(g))
    g = apply_recurrence(g, M)

############################################################
# The solved form and the EGF expansion give the same polynomials

series = egf_expand(M, ORDER)
for n in range(ORDER + 1):
    a = gn_by_recurrence(M, n)
    b = gn_direct(M, n)
    c = series.term(n)
    assert a == b == c
print(f"\nall three routes identical for n = 0..{ORDER}")

############################################################
# g_n(1) = 1 always, and g_n'(1) is the expected number of distinct types

for n in range(ORDER + 1):
    gn = gn_direct(M, n)
    assert gn.eval_exact(1) == 1
    mean = gn.derivative().eval_exact(1)
    assert mean == M * (1 - Fraction(M - 1, M) ** n)
print("normalization and the mean identity hold exactly")

############################################################
# The closed form evaluated in floats tracks the truncated series

x, y = 1.25, 0.5
partial = sum(
    float(Fraction(x).__pow__(n) / math.factorial(n) * series.term(n).eval_exact(Fraction(y)))
    for n in range(ORDER + 1)
)
closed = egf_closed_eval(M, x, y)
print(f"\nclosed G_{M}({x}, {y}) = {closed:.12f}")
print(f"series through x^{ORDER}  = {partial:.12f}")
print(f"difference            = {abs(closed - partial):.3e} (series truncation)")
