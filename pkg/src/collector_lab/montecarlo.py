"""Seeded simulation of the coupon-drawing process.

Trials are i.i.d. blocks of n uniform draws on {0..m-1}; each trial reports
the number of distinct values seen.  Reproducibility is taken seriously:

* Trials are laid out in fixed shards of ``shard_size`` trials.  The shard
  layout is part of ``SimConfig``, so it is part of the experiment's
  identity, not an execution detail.
* Shard s draws from ``numpy.random.Philox`` (a counter-based generator)
  keyed with ``seed XOR splitmix64(s)``; draws use
  ``Generator.integers(0, m, dtype=uint32)``.
* Merged counts are sums of per-shard counts, so results are bit-identical
  whether shards run sequentially or on any number of workers.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .distribution import DistTable, FloatDistTable

DEFAULT_SHARD_SIZE = 1 << 16

_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One output of the SplitMix64 mixer (Steele, Lea, Flood 2014)."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def shard_seed(seed: int, shard_index: int) -> int:
    """Sub-seed for one shard: seed XOR splitmix64(shard_index)."""
    return seed ^ splitmix64(shard_index)


@dataclass(frozen=True)
class SimConfig:
    """Deterministic description of one simulation experiment."""

    m: int
    n: int
    trials: int
    seed: int
    shard_size: int = DEFAULT_SHARD_SIZE

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.shard_size < 1:
            raise ValueError(f"shard_size must be >= 1, got {self.shard_size}")

    @property
    def num_shards(self) -> int:
        return -(-self.trials // self.shard_size)


@dataclass(frozen=True)
class EmpiricalPmf:
    """Counts and frequencies of the distinct-coupon count over all trials."""

    counts: tuple[int, ...]
    freqs: tuple[float, ...]
    config: SimConfig


@dataclass(frozen=True)
class FitReport:
    """Comparison of an empirical pmf against an exact row.

    The chi-square statistic is computed after pooling bins with expected
    count below 5 into their neighbor toward k = m (a trailing underfilled
    bin folds back into the previous one); dof = bins_used - 1.
    """

    m: int
    n: int
    trials: int
    max_abs_deviation: float
    total_variation: float
    chi_square: float
    dof: int
    bins_used: int


def _shard_counts(config: SimConfig, shard_index: int) -> np.ndarray:
    lo = shard_index * config.shard_size
    hi = min(lo + config.shard_size, config.trials)
    t = hi - lo
    rng = np.random.Generator(np.random.Philox(key=shard_seed(config.seed, shard_index)))
    if config.n == 0:
        counts = np.zeros(config.m + 1, dtype=np.int64)
        counts[0] = t
        return counts
    draws = rng.integers(0, config.m, size=(t, config.n), dtype=np.uint32)
    seen = np.zeros((t, config.m), dtype=bool)
    seen[np.arange(t)[:, None], draws] = True
    distinct = seen.sum(axis=1)
    return np.bincount(distinct, minlength=config.m + 1).astype(np.int64)


def simulate(config: SimConfig, workers: int = 1) -> EmpiricalPmf:
    """Run all trials; identical results for any worker count."""
    assert workers >= 1
    shards = range(config.num_shards)
    if workers == 1:
        parts = [_shard_counts(config, s) for s in shards]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda s: _shard_counts(config, s), shards))
    counts = np.sum(parts, axis=0)
    assert int(counts.sum()) == config.trials
    freqs = counts / config.trials
    return EmpiricalPmf(
        counts=tuple(int(c) for c in counts),
        freqs=tuple(float(f) for f in freqs),
        config=config,
    )


def _exact_probs(emp: EmpiricalPmf, exact: DistTable | FloatDistTable | Sequence) -> list[float]:
    cfg = emp.config
    if isinstance(exact, (DistTable, FloatDistTable)):
        if exact.m != cfg.m:
            raise ValueError(f"m mismatch: simulation has m={cfg.m}, table has m={exact.m}")
        if exact.n_max < cfg.n:
            raise ValueError(f"table rows stop at n={exact.n_max}, need n={cfg.n}")
        row = exact.row(cfg.n)
    else:
        row = exact
        if len(row) != cfg.m + 1:
            raise ValueError(f"probability row has length {len(row)}, expected {cfg.m + 1}")
    return [float(p) for p in row]


def compare(emp: EmpiricalPmf, exact: DistTable | FloatDistTable | Sequence) -> FitReport:
    """Fit statistics of the empirical pmf against exact probabilities.

    `exact` is a DistTable/FloatDistTable (row emp.config.n is used) or a
    plain probability sequence over k = 0..m.
    """
    probs = _exact_probs(emp, exact)
    cfg = emp.config
    max_dev = max(abs(f - p) for f, p in zip(emp.freqs, probs))
    tv = 0.5 * sum(abs(f - p) for f, p in zip(emp.freqs, probs))

    # Pool bins toward k = m until each pooled bin expects >= 5 trials.
    bins: list[tuple[float, float]] = []  # (observed, expected)
    obs_acc = 0.0
    exp_acc = 0.0
    for k in range(cfg.m + 1):
        obs_acc += emp.counts[k]
        exp_acc += cfg.trials * probs[k]
        if exp_acc >= 5.0:
            bins.append((obs_acc, exp_acc))
            obs_acc = 0.0
            exp_acc = 0.0
    if (obs_acc or exp_acc) and bins:
        last_obs, last_exp = bins[-1]
        bins[-1] = (last_obs + obs_acc, last_exp + exp_acc)
    elif not bins:
        bins = [(obs_acc, exp_acc)]

    if len(bins) > 1:
        chi2 = sum((o - e) ** 2 / e for o, e in bins)
    else:
        chi2 = 0.0
    return FitReport(
        m=cfg.m,
        n=cfg.n,
        trials=cfg.trials,
        max_abs_deviation=max_dev,
        total_variation=tv,
        chi_square=chi2,
        dof=max(len(bins) - 1, 0),
        bins_used=len(bins),
    )
