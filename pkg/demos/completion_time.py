"""
How long until the collection is complete?
==========================================

The completion time T is the first draw at which all m types have been
seen; P(T <= n) is just the k = m column of the distribution table.  The
survival sum over that column gives E[T], which must match the classical
harmonic answer m * (1 + 1/2 + ... + 1/m) obtained from the geometric
waiting times between new types.
"""

from fractions import Fraction

from collector_lab import completion_stats

print(f"{'m':>4} {'survival-sum mean':>18} {'m * H_m':>14} {'difference':>12}")
for m in (1, 2, 5, 10, 25, 50):
    stats = completion_stats(m, tail_tol=1e-9)
    harmonic = float(sum(Fraction(m, j) for j in range(1, m + 1)))
    print(f"{m:>4} {stats.mean:>18.8f} {harmonic:>14.8f} {abs(stats.mean - harmonic):>12.2e}")

############################################################
# The full law for one m: median and tail

m = 10
stats = completion_stats(m, tail_tol=1e-12)
median = next(n for n, c in enumerate(stats.cdf) if c >= 0.5)
p99 = next(n for n, c in enumerate(stats.cdf) if c >= 0.99)
mode = max(range(len(stats.pmf)), key=stats.pmf.__getitem__)
print(f"\nm = {m}: mean {stats.mean:.4f}, mode {mode}, median {median}, 99% by draw {p99}")
print(f"tail truncated after {len(stats.cdf) - 1} draws (cdf there = {stats.cdf[-1]:.15f})")
