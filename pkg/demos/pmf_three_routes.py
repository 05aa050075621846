"""
Three routes to the same probabilities
======================================

The probability p(n, k) of holding exactly k distinct coupon types after n
uniform draws (m types total) can be computed three ways:

1. the master-equation DP, row by row,
2. the unsimplified closed form (falling product times alternating sum),
3. the simplified closed form (binomial prefactor times alternating sum),

and for small cases also checked against brute-force enumeration of all
m^n draw sequences.  All four must agree as exact rationals.
"""

from fractions import Fraction
from itertools import product

from collector_lab import closed_form_pmf, closed_form_pmf_rude, dp_pmf

M, N_MAX = 4, 8

############################################################
# Exact DP table

table = dp_pmf(M, N_MAX)
print(f"p(n, k) for m = {M}, exact rationals (DP route)\n")
header = "n\\k " + "".join(f"{k:>12}" for k in range(M + 1))
print(header)
for n in range(N_MAX + 1):
    print(f"{n:>3} " + "".join(f"{str(q):>12}" for q in table.p[n]))

############################################################
# Closed forms agree with the DP, entry by entry

for n in range(1, N_MAX + 1):
    for k in range(1, M + 1):
        assert closed_form_pmf(M, n, k) == table.p[n][k]
        assert closed_form_pmf_rude(M, n, k) == table.p[n][k]
print("\nboth closed forms match the DP exactly on every entry")

############################################################
# Brute force: count sequences with exactly k distinct values

n = 5
counts = [0] * (M + 1)
for seq in product(range(M), repeat=n):
    counts[len(set(seq))] += 1
brute = [Fraction(c, M**n) for c in counts]
assert list(table.p[n]) == brute
print(f"enumeration of all {M}^{n} = {M**n} sequences at n = {n} agrees too")

############################################################
# Row sums are exactly 1 -- no tolerance involved

assert all(sum(row) == 1 for row in table.p)
print("every row sums to exactly 1")
