"""Truncated variation, its optimal approximation, and the exact profile.

The truncated variation with threshold delta is the supremum over sample
subsequences of sum (|increment| - delta)_+; at delta = 0 it is the total
variation.  As a function of delta it is a supremum of affine nonincreasing
functions and therefore convex, nonincreasing and piecewise affine, which is
what `tv_profile` reconstructs exactly.
"""

from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import NegativeDeltaError, NonPositiveDeltaError
from .paths import SampledPath, oscillation

# Midpoint-vs-chord detection tolerance for affine pieces, and the smallest
# delta interval the profile recursion will split (relative to oscillation).
PROFILE_REL_TOL = 1e-12
PROFILE_MIN_WIDTH = 1e-14


def truncated_variation(path: SampledPath, delta) -> float:
    """TV with threshold delta over the whole span; exact for sample data."""
    delta = float(delta)
    if delta < 0:
        raise NegativeDeltaError("delta must be >= 0")
    return kernels.tv_delta(path.values, delta)


def total_variation(path: SampledPath) -> float:
    return kernels.tv_delta(path.values, 0.0)


def optimal_approximation(path: SampledPath, delta) -> SampledPath:
    """Uniform delta/2-approximation whose total variation equals TV^delta.

    Band-following construction: the output stays constant until the input
    leaves the band of half-width delta/2 around it, then moves minimally to
    re-enter.  The starting level is chosen so the first forced move costs
    exactly (first swing - delta); with no swing above delta the output is a
    constant clamped toward f(a).
    """
    delta = float(delta)
    if delta <= 0:
        raise NonPositiveDeltaError("delta must be > 0")
    return SampledPath(path.times, kernels.lazy_band(path.values, delta), path.mode)


@dataclass(frozen=True)
class TvProfile:
    """Exact piecewise-affine representation of delta -> TV^delta.

    Segment j covers [breakpoints[j]; breakpoints[j+1]] and carries the pair
    (a, b) with TV^delta = a - b*delta there; beyond the last breakpoint
    (the oscillation) the profile is zero.
    """

    breakpoints: np.ndarray  # length S+1, starts at 0, ends at oscillation
    coef_a: np.ndarray       # length S
    coef_b: np.ndarray       # length S

    def value(self, delta) -> float:
        delta = float(delta)
        if delta < 0:
            raise NegativeDeltaError("delta must be >= 0")
        bp = self.breakpoints
        if self.coef_a.size == 0 or delta >= bp[-1]:
            return 0.0
        j = min(bisect_right(bp, delta) - 1, self.coef_a.size - 1)
        if j < 0:
            j = 0
        return max(float(self.coef_a[j] - self.coef_b[j] * delta), 0.0)

    @property
    def oscillation(self) -> float:
        return float(self.breakpoints[-1])

    @property
    def n_segments(self) -> int:
        return int(self.coef_a.size)


def tv_profile(path: SampledPath) -> TvProfile:
    """Build the exact profile by recursive bisection on [0; oscillation].

    An interval is accepted as affine when TV at its midpoint matches the
    chord value to PROFILE_REL_TOL (sound for a convex piecewise-affine
    function whose segment slopes differ by at least 1); collinear neighbours
    are merged afterwards.
    """
    values = path.values
    osc = oscillation(path)
    if osc == 0.0:
        return TvProfile(np.asarray([0.0]), np.empty(0), np.empty(0))

    tv = kernels.tv_delta
    min_width = PROFILE_MIN_WIDTH * osc
    pieces = []

    def recurse(lo, f_lo, hi, f_hi):
        width = hi - lo
        if width <= min_width:
            pieces.append((lo, f_lo, hi, f_hi))
            return
        mid = 0.5 * (lo + hi)
        f_mid = tv(values, mid)
        chord = 0.5 * (f_lo + f_hi)
        scale = max(f_lo, 1.0)
        if abs(f_mid - chord) <= PROFILE_REL_TOL * scale:
            pieces.append((lo, f_lo, hi, f_hi))
            return
        recurse(lo, f_lo, mid, f_mid)
        recurse(mid, f_mid, hi, f_hi)

    recurse(0.0, tv(values, 0.0), osc, 0.0)

    # Merge neighbours by three-point collinearity at value level: the chord
    # test is width-independent, so the micro-pieces the recursion leaves
    # around a kink fold into their wide neighbour without polluting slopes.
    merged = [list(pieces[0])]
    for lo, f_lo, hi, f_hi in pieces[1:]:
        m_lo, m_flo, m_hi, m_fhi = merged[-1]
        t = (m_hi - m_lo) / (hi - m_lo)
        predicted = m_flo + (f_hi - m_flo) * t
        if abs(predicted - m_fhi) <= PROFILE_REL_TOL * max(m_flo, 1.0):
            merged[-1][2] = hi
            merged[-1][3] = f_hi
        else:
            merged.append([lo, f_lo, hi, f_hi])

    bp = np.empty(len(merged) + 1)
    coef_a = np.empty(len(merged))
    coef_b = np.empty(len(merged))
    for j, (lo, f_lo, hi, f_hi) in enumerate(merged):
        slope = (f_hi - f_lo) / (hi - lo)
        bp[j] = lo
        coef_a[j] = f_lo - slope * lo
        coef_b[j] = -slope
    bp[-1] = merged[-1][2]
    return TvProfile(bp, coef_a, coef_b)
