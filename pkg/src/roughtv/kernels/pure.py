"""Pure-Python fallback kernels.

These are the reference implementations of the hot inner loops (truncated
variation one-pass, p-variation dynamic program, band-following
approximation).  The Cython module `roughtv.kernels._fast` implements the
same signatures; whichever is available gets picked at import time by
`roughtv.kernels`.
"""

import numpy as np


def reduce_to_extrema(values):
    """Drop samples interior to monotone runs, keeping first/last points.

    Sums of |increment|^p (p >= 1) and of (|increment| - delta)_+ over
    subsequences are both maximised on the reduced sequence, because merging
    same-sign increments can only increase either sum.
    """
    v = np.asarray(values, dtype=np.float64)
    n = v.size
    if n <= 2:
        return v.copy()
    # drop plateaus, then keep the first point plus the end of every
    # maximal same-direction run
    w = v[np.concatenate(([True], v[1:] != v[:-1]))]
    if w.size <= 2:
        return w.copy()
    rising = np.diff(w) > 0
    turn = np.nonzero(rising[1:] != rising[:-1])[0] + 1
    idx = np.concatenate(([0], turn, [w.size - 1]))
    return w[idx]


def tv_delta(values, delta):
    """Exact truncated variation of the sample sequence, one forward pass.

    Tracks the running extremum since the last committed turning point and
    commits a directed run once the drawdown/drawup exceeds delta; each
    completed alternation of size s contributes (s - delta).  The pass runs
    over the extrema-reduced sequence, which commits the same float values.
    """
    v = reduce_to_extrema(values)
    n = v.size
    if n < 2:
        return 0.0
    total = 0.0
    lo = hi = v[0]
    anchor = 0.0
    cur = 0.0
    direction = 0
    for j in range(1, n):
        x = v[j]
        if direction == 0:
            if x > hi:
                hi = x
            elif x < lo:
                lo = x
            if hi - lo > delta:
                if x == hi:
                    direction = 1
                    anchor = lo
                    cur = hi
                else:
                    direction = -1
                    anchor = hi
                    cur = lo
        elif direction == 1:
            if x > cur:
                cur = x
            elif cur - x > delta:
                total += cur - anchor - delta
                anchor = cur
                cur = x
                direction = -1
        else:
            if x < cur:
                cur = x
            elif x - cur > delta:
                total += anchor - cur - delta
                anchor = cur
                cur = x
                direction = 1
    if direction == 1:
        total += cur - anchor - delta
    elif direction == -1:
        total += anchor - cur - delta
    return float(total)


def pvar_sum(values, p):
    """Max of sum |increment|^p over subsequences (the p-variation V^p).

    O(m^2) dynamic program over the extrema-reduced sequence; the optimal
    subsequence always ends at the last sample, so the final entry is the
    answer.  p = 1 short-circuits to the total variation.
    """
    v = reduce_to_extrema(values)
    n = v.size
    if n < 2:
        return 0.0
    if p == 1.0:
        return float(np.sum(np.abs(np.diff(v))))
    best = np.zeros(n, dtype=np.float64)
    for j in range(1, n):
        best[j] = np.max(best[:j] + np.abs(v[j] - v[:j]) ** p)
    return float(best[-1])


def lazy_band(values, delta):
    """Values of the minimal-variation uniform delta/2-approximation.

    The output stays constant until the input leaves the band of half-width
    delta/2, then moves just enough to re-enter.  The starting level is the
    one that makes the first forced move cost exactly (first swing - delta):
    min + delta/2 when the first committed run goes up, max - delta/2 when it
    goes down, and the clamped initial value when there is no run at all.
    """
    v = np.asarray(values, dtype=np.float64)
    n = v.size
    out = np.empty(n, dtype=np.float64)
    if n == 0:
        return out
    half = 0.5 * delta
    lo = hi = v[0]
    k = -1
    for j in range(1, n):
        x = v[j]
        if x > hi:
            hi = x
        elif x < lo:
            lo = x
        if hi - lo > delta:
            k = j
            break
    if k < 0:
        out[:] = min(max(v[0], hi - half), lo + half)
        return out
    g = (lo + half) if v[k] == hi else (hi - half)
    out[:k] = g
    for j in range(k, n):
        x = v[j]
        if x > g + half:
            g = x - half
        elif x < g - half:
            g = x + half
        out[j] = g
    return out
