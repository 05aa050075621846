"""Independent oracles used to freeze expected values.

Nothing here imports the package under test: probabilities come from
exhaustive enumeration of all m^n draw sequences, and expected completion
times from the geometric waiting-time decomposition (harmonic sums).
"""

from fractions import Fraction
from itertools import product


def brute_force_pmf(m: int, n: int) -> list[Fraction]:
    """P(exactly k distinct values in a uniform sequence of length n), k = 0..m."""
    counts = [0] * (m + 1)
    for seq in product(range(m), repeat=n):
        counts[len(set(seq))] += 1
    assert sum(counts) == m**n
    return [Fraction(c, m**n) for c in counts]


def harmonic_completion_mean(m: int) -> Fraction:
    """E[completion time] = sum over stages of the geometric wait m/j."""
    return sum(Fraction(m, j) for j in range(1, m + 1))
