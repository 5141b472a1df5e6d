"""Picard solvers for y(t) = y0 + int_a^t F(y(s)) dx(s) with rough drivers.

The driver x is a continuous path with finite p-TV seminorm, 1 < p < 2.  For
a field with an alpha-Lipschitz quotient (order "one_plus_alpha") the
iteration contracts on windows certified by the two explicit inequalities
from the uniqueness proof; for a bare alpha-Lipschitz field (order "alpha",
p - 1 < alpha < 1) windows come from the splitting mesh and the a-priori
radius R = A R^alpha + B bounds the solution's norm.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadAlphaError,
    BadExponentError,
    BadParameterError,
    BlowupSuspectedError,
    NoConvergenceError,
    NoSplittingError,
    OutOfSpanError,
)
from .integrals import d_e_constants
from .norms import c_p, p_tv_seminorm, seminorm_on
from .paths import Mode, SampledPath
from .reports import BoundReport, bound_report

BLOWUP_GUARD = 1e12
FIELD_PROBE_COUNT = 4097


@dataclass(frozen=True)
class Quotient:
    """G with F(y) - F(x) = G(y, x)(y - x), its Lipschitz constant and sup."""

    func: object
    lipschitz: float
    sup_bound: float


@dataclass(frozen=True)
class LipschitzField:
    """Scalar field F with declared Hoelder regularity.

    order "alpha": F is globally alpha-Lipschitz with constant `lipschitz`.
    order "one_plus_alpha": F is globally 1-Lipschitz (constant `lipschitz`)
    and its quotient G is alpha-Lipschitz; the quotient is then mandatory.
    `func` must accept numpy arrays (any ufunc-style callable does).
    """

    func: object
    alpha: float
    order: str
    lipschitz: float
    quotient: Quotient = None
    sup_bound: float = None
    name: str = ""

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.0:
            raise BadAlphaError("alpha must be in (0; 1]")
        if self.order not in ("alpha", "one_plus_alpha"):
            raise BadParameterError(f"unknown order {self.order!r}")
        if self.order == "one_plus_alpha" and self.quotient is None:
            raise BadParameterError("order one_plus_alpha requires a quotient")
        if not self.lipschitz >= 0:
            raise BadParameterError("Lipschitz constant must be >= 0")

    @property
    def f0(self):
        return float(np.abs(self(np.zeros(1)))[0])

    def __call__(self, values):
        out = self.func(np.asarray(values, dtype=np.float64))
        return np.broadcast_to(np.asarray(out, dtype=np.float64),
                               np.shape(values)).astype(np.float64, copy=False)

    def composition_alpha(self):
        """The exponent at which F composes: alpha, or 1 for smooth orders."""
        return 1.0 if self.order == "one_plus_alpha" else self.alpha


def _sin_quotient(y, x):
    y = np.asarray(y, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    diff = y - x
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.where(diff != 0.0, (np.sin(y) - np.sin(x)) / np.where(diff == 0, 1, diff),
                       np.cos(x))
    return out


def field_catalog():
    """Built-in fields selectable by name (CLI and tests)."""
    return {
        "identity": LipschitzField(
            func=lambda u: np.asarray(u, dtype=np.float64),
            alpha=1.0, order="one_plus_alpha", lipschitz=1.0,
            quotient=Quotient(lambda y, x: np.ones_like(np.asarray(y, dtype=np.float64)),
                              lipschitz=0.0, sup_bound=1.0),
            name="identity",
        ),
        "sin": LipschitzField(
            func=np.sin, alpha=1.0, order="one_plus_alpha", lipschitz=1.0,
            quotient=Quotient(_sin_quotient, lipschitz=1.0, sup_bound=1.0),
            sup_bound=1.0, name="sin",
        ),
        "sqrt-abs": LipschitzField(
            func=lambda u: np.sqrt(np.abs(np.asarray(u, dtype=np.float64))),
            alpha=0.5, order="alpha", lipschitz=1.0, name="sqrt-abs",
        ),
        "constant": LipschitzField(
            func=lambda u: np.ones_like(np.asarray(u, dtype=np.float64)),
            alpha=1.0, order="one_plus_alpha", lipschitz=0.0,
            quotient=Quotient(lambda y, x: np.zeros_like(np.asarray(y, dtype=np.float64)),
                              lipschitz=0.0, sup_bound=0.0),
            sup_bound=1.0, name="constant",
        ),
        "zero": LipschitzField(
            func=lambda u: np.zeros_like(np.asarray(u, dtype=np.float64)),
            alpha=1.0, order="one_plus_alpha", lipschitz=0.0,
            quotient=Quotient(lambda y, x: np.zeros_like(np.asarray(y, dtype=np.float64)),
                              lipschitz=0.0, sup_bound=0.0),
            sup_bound=0.0, name="zero",
        ),
    }


def estimate_lipschitz(field: LipschitzField, radius, probes=201) -> float:
    """Max of |F(u)-F(v)| / |u-v|^alpha over a deterministic probe grid.

    A sanity check of the declared constant, not a proof.
    """
    radius = float(radius)
    if not radius > 0 or int(probes) < 2:
        raise BadParameterError("need radius > 0 and probes >= 2")
    grid = np.linspace(-radius, radius, int(probes))
    fv = field(grid)
    du = np.abs(grid[:, None] - grid[None, :])
    df = np.abs(fv[:, None] - fv[None, :])
    mask = du > 0
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = np.where(mask, df / du ** field.alpha, 0.0)
    return float(np.max(ratios))


def probe_sup(field: LipschitzField, radius) -> float:
    if field.sup_bound is not None:
        return float(field.sup_bound)
    grid = np.linspace(-radius, radius, FIELD_PROBE_COUNT)
    return float(np.max(np.abs(field(grid))))


def fixed_point_radius(A, B, alpha) -> float:
    """Least positive solution of R = A R^alpha + B (alpha < 1).

    Monotone iteration from R0 = B converges to the least fixed point; the
    B = 0 case degenerates to the closed form A^(1/(1-alpha)).
    """
    A = float(A)
    B = float(B)
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise BadAlphaError("need 0 < alpha < 1 for an a-priori radius")
    if A < 0 or B < 0:
        raise BadParameterError("A and B must be >= 0")
    if A == 0.0:
        return B
    if B == 0.0:
        return A ** (1.0 / (1.0 - alpha))
    r = B
    for _ in range(10000):
        nxt = A * r ** alpha + B
        if abs(nxt - r) <= 1e-12 * max(1.0, abs(nxt)):
            return nxt
        r = nxt
    raise NoConvergenceError("fixed-point iteration for the radius stalled")


@dataclass(frozen=True)
class WindowStep:
    end: float
    certified: bool


def contraction_window(x: SampledPath, field: LipschitzField, start, p,
                       R=None, f_sup=None) -> WindowStep:
    """Largest sample-aligned window end on which Picard certifiably contracts.

    Certification needs E_{p,p} K_F |x|_{p-TV} <= 1/2 on the window and
    4 E_{p/alpha,p} (|G|_inf + 4 K_G R) |x|_{p-TV} < 1, with
    R defaulting to 2 |F|_inf |x|_{p-TV}.  Falls back to the single-step
    window (uncertified) when even that fails.
    """
    if field.order != "one_plus_alpha":
        raise BadParameterError("contraction windows need an order one_plus_alpha field")
    p = float(p)
    times = x.times
    pos = int(np.searchsorted(times, float(start)))
    if pos >= times.size - 1 or times[pos] != float(start):
        raise OutOfSpanError(f"start {start} is not an interior sample time")
    e_pp = d_e_constants(p, p)[1]
    e_pa = d_e_constants(p / field.alpha, p)[1]
    k_f = field.lipschitz
    g_sup = field.quotient.sup_bound
    k_g = field.quotient.lipschitz
    if f_sup is None:
        f_sup = probe_sup(field, 10.0)

    def certified(idx):
        s = seminorm_on(x, times[pos], times[idx], p)
        radius = R if R is not None else 2.0 * f_sup * s
        return (e_pp * k_f * s <= 0.5) and (4.0 * e_pa * (g_sup + 4.0 * k_g * radius) * s < 1.0)

    lo = pos + 1
    if not certified(lo):
        return WindowStep(float(times[lo]), False)
    hi = times.size - 1
    if certified(hi):
        return WindowStep(float(times[hi]), True)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if certified(mid):
            lo = mid
        else:
            hi = mid
    return WindowStep(float(times[lo]), True)


@dataclass(frozen=True)
class SplittingMesh:
    delta: float
    no_splitting: bool


def splitting_mesh(x: SampledPath, p, eps) -> SplittingMesh:
    """Largest grid-aligned delta with seminorm < eps on every short window.

    Checks the maximal sample-aligned window starting at each sample (interval
    monotonicity covers the rest), with cheap oscillation/variation screens
    before any exact profile evaluation.  Returns delta = 0 and the
    no_splitting flag when even one-step windows violate the threshold.
    """
    p = float(p)
    eps = float(eps)
    if not eps > 0:
        raise BadParameterError("eps must be > 0")
    times = x.times
    values = x.values
    n = times.size
    if n < 2:
        return SplittingMesh(0.0, False)
    span = float(times[-1] - times[0])
    eps_hi = eps * (1.0 + 1e-9)
    eps_p = eps_hi ** p
    cp = c_p(p) if p > 1 else 1.0
    prefix_tv = np.concatenate(([0.0], np.cumsum(np.abs(np.diff(values)))))

    def window_ok(i, j):
        seg = values[i:j + 1]
        osc = float(np.max(seg) - np.min(seg))
        if osc == 0.0:
            return True
        if p == 1.0:
            return prefix_tv[j] - prefix_tv[i] <= eps_hi
        tv0 = prefix_tv[j] - prefix_tv[i]
        if osc ** (p - 1.0) * tv0 <= eps_p:
            return True
        if cp * osc ** p > eps_p:
            return False
        return seminorm_on(x, times[i], times[j], p) <= eps_hi

    for i in range(n - 1):
        if not window_ok(i, i + 1):
            return SplittingMesh(0.0, True)

    def feasible(delta):
        j = 0
        for i in range(n - 1):
            if j < i + 1:
                j = i + 1
            while j + 1 < n and times[j + 1] - times[i] <= delta:
                j += 1
            if times[j] - times[i] <= delta and not window_ok(i, j):
                return False
        return True

    if feasible(span):
        return SplittingMesh(span, False)
    lo = float(np.min(np.diff(times)))
    hi = span
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            lo = mid
        else:
            hi = mid
    # snap down to the largest realised window length <= lo
    j = 0
    found = 0.0
    for i in range(n - 1):
        if j < i + 1:
            j = i + 1
        while j + 1 < n and times[j + 1] - times[i] <= lo:
            j += 1
        if times[j] - times[i] <= lo:
            found = max(found, float(times[j] - times[i]))
    return SplittingMesh(found, False)


@dataclass(frozen=True)
class OdeSolution:
    path: SampledPath
    iterations: tuple
    windows: tuple
    converged: bool
    residual: float


def _cumulative_trapezoid(f_vals, x_vals):
    cells = 0.5 * (f_vals[:-1] + f_vals[1:]) * np.diff(x_vals)
    return np.concatenate(([0.0], np.cumsum(cells)))


def _iterate_window(field: LipschitzField, t, xv, y_start, tol, max_iter, damped):
    y = np.full(t.size, y_start, dtype=np.float64)
    for it in range(1, max_iter + 1):
        z = y_start + _cumulative_trapezoid(field(y), xv)
        bad = np.abs(z) > BLOWUP_GUARD
        if np.any(bad):
            raise BlowupSuspectedError(
                "solution exceeded the overflow guard",
                time=float(t[int(np.argmax(bad))]),
            )
        change = float(np.max(np.abs(z - y)))
        if change < tol:
            return z, it
        y = z if not damped else 0.5 * (y + z)
    raise NoConvergenceError(f"window iteration did not reach {tol} in {max_iter} steps")


def picard_solve(x: SampledPath, field: LipschitzField, y0, p, tol,
                 max_iter=80) -> OdeSolution:
    """Solve y = y0 + int F(y) dx window by window on x's own grid.

    Windows come from contraction_window (order one_plus_alpha) or from the
    splitting mesh sized to make the a-priori coefficient A <= 1/2 (order
    alpha, which also requires p - 1 < alpha).  Each window iterates the
    integral map with the trapezoid rule (both paths piecewise linear) and
    chains its terminal value into the next window; a damped retry
    y <- (y + Ty)/2 covers the nonsmooth fields before giving up.
    """
    if x.mode is not Mode.LINEAR:
        raise BadParameterError("driver must be piecewise linear (continuous)")
    p = float(p)
    if not 1.0 < p < 2.0:
        raise BadExponentError("need p in (1; 2)")
    tol = float(tol)
    if not tol > 0:
        raise BadParameterError("tol must be > 0")
    y0 = float(y0)
    times = x.times
    f_sup = probe_sup(field, 10.0 * (abs(y0) + 1.0))

    boundaries = [0]
    if field.order == "one_plus_alpha":
        while boundaries[-1] < times.size - 1:
            step = contraction_window(x, field, times[boundaries[-1]], p, f_sup=f_sup)
            boundaries.append(int(np.searchsorted(times, step.end)))
    else:
        if not p - 1.0 < field.alpha:
            raise BadAlphaError("order alpha solving needs p - 1 < alpha")
        if field.lipschitz == 0.0:
            boundaries.append(times.size - 1)
        else:
            e_pa = d_e_constants(p / field.alpha, p)[1]
            eps = 0.5 / ((e_pa + 1.0) * field.lipschitz)
            mesh = splitting_mesh(x, p, eps)
            if mesh.no_splitting or mesh.delta <= 0.0:
                raise NoSplittingError(
                    f"driver admits no window with seminorm below {eps}"
                )
            while boundaries[-1] < times.size - 1:
                i = boundaries[-1]
                j = int(np.searchsorted(times, times[i] + mesh.delta, side="right")) - 1
                boundaries.append(max(j, i + 1))

    n_windows = len(boundaries) - 1
    window_tol = tol / (2.0 * max(1, n_windows))
    full_y = np.empty(times.size, dtype=np.float64)
    iterations = []
    converged = True
    y_start = y0
    for w in range(n_windows):
        i0, i1 = boundaries[w], boundaries[w + 1]
        t = times[i0:i1 + 1]
        xv = x.values[i0:i1 + 1]
        try:
            yw, its = _iterate_window(field, t, xv, y_start, window_tol, max_iter, False)
        except NoConvergenceError:
            if field.order == "alpha":
                yw, its = _iterate_window(field, t, xv, y_start, window_tol, max_iter, True)
            else:
                raise
        full_y[i0:i1 + 1] = yw
        iterations.append(its)
        y_start = float(yw[-1])
    solution = SampledPath(times, full_y, Mode.LINEAR)
    residual = float(np.max(np.abs(
        full_y - (y0 + _cumulative_trapezoid(field(full_y), x.values))
    )))
    converged = converged and residual < tol
    return OdeSolution(
        path=solution,
        iterations=tuple(iterations),
        windows=tuple(float(times[i]) for i in boundaries),
        converged=converged,
        residual=residual,
    )


def solution_radius(x: SampledPath, field: LipschitzField, y0, p) -> float:
    """The a-priori norm radius R = A R^alpha + B for the order-alpha case."""
    if field.order != "alpha":
        raise BadParameterError("the a-priori radius applies to order alpha fields")
    e_pa = d_e_constants(p / field.alpha, p)[1]
    x_norm = p_tv_seminorm(x, p)
    a = (e_pa + 1.0) * field.lipschitz * x_norm
    b = abs(float(y0)) + field.f0 * x_norm
    return fixed_point_radius(a, b, field.alpha)


def composition_norm_check(f: SampledPath, field: LipschitzField, p) -> BoundReport:
    """|F(f)|_{p/alpha-TV} <= K |f|_{p-TV}^alpha."""
    p = float(p)
    if not p >= 1:
        raise BadExponentError("needs p >= 1")
    alpha = field.composition_alpha()
    composed = SampledPath(f.times, field(f.values), f.mode)
    lhs = p_tv_seminorm(composed, p / alpha)
    rhs = field.lipschitz * p_tv_seminorm(f, p) ** alpha
    return bound_report(lhs, rhs, field.lipschitz, "composition-norm",
                        {"alpha": alpha})
