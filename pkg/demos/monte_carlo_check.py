"""
Simulation as an independent witness
====================================

A seeded Monte Carlo run of the drawing process knows nothing about the
recurrences or closed forms; its empirical frequencies must still land
within sampling error of the exact distribution.  The run is deterministic:
trials are laid out in fixed shards, each shard is keyed by
seed XOR splitmix64(shard_index) into a counter-based generator, so the
counts are bit-identical for any worker count.
"""

from collector_lab import SimConfig, compare, dp_pmf, simulate

CONFIG = SimConfig(m=6, n=12, trials=500_000, seed=0xC0FFEE)

############################################################
# Run the same experiment twice (and once more on 4 workers)

a = simulate(CONFIG)
b = simulate(CONFIG)
c = simulate(CONFIG, workers=4)
assert a == b == c
print(f"three runs of {CONFIG.trials} trials -> identical counts: {a.counts}\n")

############################################################
# Empirical frequencies vs the exact row

exact = dp_pmf(CONFIG.m, CONFIG.n)
row = exact.p[CONFIG.n]
print(f"{'k':>3} {'empirical':>12} {'exact':>12} {'deviation':>11}")
for k in range(CONFIG.m + 1):
    print(f"{k:>3} {a.freqs[k]:>12.6f} {float(row[k]):>12.6f} {abs(a.freqs[k] - float(row[k])):>11.2e}")

############################################################
# Goodness of fit

fit = compare(a, exact)
print(f"\nmax abs deviation : {fit.max_abs_deviation:.3e}")
print(f"total variation   : {fit.total_variation:.3e}")
print(f"chi-square        : {fit.chi_square:.3f} on {fit.dof} dof ({fit.bins_used} bins)")
