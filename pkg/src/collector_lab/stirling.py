"""Stirling numbers of the second kind, by recurrence and by alternating sum.

Two independent routes to the same triangle:

* ``stirling_table`` fills the triangle with the additive recurrence
  a(n, k) = a(n-1, k-1) + k * a(n-1, k), seeded with a(1, 1) = 1.  This is
  the canonical producer: O(n^2) small-integer additions, hard to get wrong.
* ``stirling_explicit`` evaluates the alternating sum
  (1/k!) * sum_{j=1..k} (-1)^(k-j) C(k, j) j^n.  The division by k! must be
  exact; a failed divisibility check would mean an implementation bug, so it
  is an assertion rather than an error path.

Indices are 1-based on the interface (n >= 1, k >= 1), with the usual
convention a(n, k) = 0 for k outside [1, n].
"""

from __future__ import annotations

from dataclasses import dataclass

from .numeric import binomial, factorial


@dataclass(frozen=True)
class StirlingTable:
    """Triangle a(n, k) for 1 <= k <= n <= n_max, filled by the recurrence."""

    n_max: int
    rows: tuple[tuple[int, ...], ...]  # rows[n-1][k-1] = a(n, k)

    def value(self, n: int, k: int) -> int:
        """a(n, k); zero for k outside [1, n]."""
        if not 1 <= n <= self.n_max:
            raise ValueError(f"n={n} outside table range 1..{self.n_max}")
        if k < 1 or k > n:
            return 0
        return self.rows[n - 1][k - 1]

    def row(self, n: int) -> tuple[int, ...]:
        """Entries a(n, 1) .. a(n, n)."""
        if not 1 <= n <= self.n_max:
            raise ValueError(f"n={n} outside table range 1..{self.n_max}")
        return self.rows[n - 1]


def stirling_table(n_max: int) -> StirlingTable:
    """Fill the triangle up to n_max rows via the additive recurrence."""
    assert n_max >= 1
    rows: list[tuple[int, ...]] = [(1,)]
    for n in range(2, n_max + 1):
        prev = rows[-1]
        # a(n, 1) = a(n-1, 1) and a(n, n) = a(n-1, n-1); in between the
        # two-term recurrence applies.
        row = [prev[0]]
        for k in range(2, n):
            row.append(prev[k - 2] + k * prev[k - 1])
        row.append(prev[-1])
        rows.append(tuple(row))
    return StirlingTable(n_max=n_max, rows=tuple(rows))


def stirling_explicit(n: int, k: int) -> int:
    """a(n, k) from the alternating sum; exact division by k! is asserted."""
    assert n >= 1 and k >= 1
    total = 0
    for j in range(1, k + 1):
        term = binomial(k, j) * j**n
        total += term if (k - j) % 2 == 0 else -term
    q, r = divmod(total, factorial(k))
    assert r == 0, f"alternating sum not divisible by {k}! at (n={n}, k={k})"
    return q
