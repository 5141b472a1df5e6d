"""Exhaustive reference implementations for small instances.

Every fast functional in this package is tested against these.  They stay
transparently exhaustive: all sample subsets are enumerated explicitly (the
per-size index matrices are cached, the arithmetic is vectorised, nothing is
pruned).
"""

from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import BadExponentError, NegativeDeltaError, TooLargeError
from .norms import c_p
from .paths import SampledPath

MAX_SUBSET_SAMPLES = 16
MAX_SEMINORM_SAMPLES = 12


@lru_cache(maxsize=None)
def _subsets(n, k):
    return np.asarray(list(combinations(range(n), k)), dtype=np.intp)


def _subset_increments(values, k):
    idx = _subsets(values.size, k)
    return np.abs(values[idx[:, 1:]] - values[idx[:, :-1]])


def tv_partition_bruteforce(path: SampledPath, delta) -> float:
    """Max over all >=2-point subsets of sum (|increment| - delta)_+."""
    delta = float(delta)
    if delta < 0:
        raise NegativeDeltaError("delta must be >= 0")
    n = len(path)
    if n > MAX_SUBSET_SAMPLES:
        raise TooLargeError(f"{n} samples exceeds cap {MAX_SUBSET_SAMPLES}")
    best = 0.0
    for k in range(2, n + 1):
        diffs = _subset_increments(path.values, k)
        sums = np.sum(np.maximum(diffs - delta, 0.0), axis=1)
        best = max(best, float(np.max(sums)))
    return best


def pvar_bruteforce(path: SampledPath, p) -> float:
    """Max over all >=2-point subsets of sum |increment|^p."""
    p = float(p)
    if not p >= 1:
        raise BadExponentError("needs p >= 1")
    n = len(path)
    if n > MAX_SUBSET_SAMPLES:
        raise TooLargeError(f"{n} samples exceeds cap {MAX_SUBSET_SAMPLES}")
    best = 0.0
    for k in range(2, n + 1):
        diffs = _subset_increments(path.values, k)
        best = max(best, float(np.max(np.sum(diffs ** p, axis=1))))
    return best


def seminorm_bruteforce(path: SampledPath, p) -> float:
    """Max over all subsets of the per-partition rearrangement supremum."""
    p = float(p)
    if not p > 1:
        raise BadExponentError("needs p > 1")
    n = len(path)
    if n > MAX_SEMINORM_SAMPLES:
        raise TooLargeError(f"{n} samples exceeds cap {MAX_SEMINORM_SAMPLES}")
    scale = c_p(p) ** (1.0 / p)
    best = 0.0
    for k in range(2, n + 1):
        diffs = np.sort(_subset_increments(path.values, k), axis=1)
        suffix = np.cumsum(diffs[:, ::-1], axis=1)[:, ::-1]
        counts = np.arange(k - 1, 0, -1, dtype=np.float64)
        vals = np.max(counts ** (1.0 / p - 1.0) * suffix, axis=1) * scale
        best = max(best, float(np.max(vals)))
    return best


def sup_delta_grid(increments, p, n_grid=20001) -> float:
    """Grid-search version of the rearrangement supremum, for cross-checks."""
    xs = np.asarray(increments, dtype=np.float64)
    if xs.size == 0 or np.max(xs) == 0.0:
        return 0.0
    deltas = np.linspace(0.0, float(np.max(xs)), int(n_grid))[1:]
    vals = deltas ** (p - 1.0) * np.sum(
        np.maximum(xs[None, :] - deltas[:, None], 0.0), axis=1
    )
    return float(np.max(vals) ** (1.0 / p))
