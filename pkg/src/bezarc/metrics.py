"""Radial error functionals and convergence-order estimates."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DomainError
from .geometry import ArcSpec, BezierCurve

REFINE_XTOL = 1e-12


def psi(curve: BezierCurve, t):
    """Simplified signed radial error ``x(t)^2 + y(t)^2 - 1``."""
    p = curve(t)
    out = np.sum(p * p, axis=-1) - 1.0
    return float(out) if np.ndim(out) == 0 else out


def psi_tilde(curve: BezierCurve, t):
    """Radial distance ``| ||p(t)|| - 1 |``."""
    p = curve(t)
    out = np.abs(np.hypot(p[..., 0], p[..., 1]) - 1.0)
    return float(out) if np.ndim(out) == 0 else out


def psi_derivatives(curve: BezierCurve, t: float, order: int) -> np.ndarray:
    """Exact derivatives ``psi^(j)(t)`` for ``j = 0..order`` from hodographs.

    Uses Leibniz' rule on ``p . p``; no finite differences involved.
    """
    hodos = [curve]
    for _ in range(order):
        hodos.append(hodos[-1].derivative())
    vals = [h(t) for h in hodos]
    out = np.empty(order + 1)
    for j in range(order + 1):
        out[j] = sum(math.comb(j, i) * float(vals[i] @ vals[j - i]) for i in range(j + 1))
    out[0] -= 1.0
    return out


@dataclass(frozen=True)
class ErrorReport:
    """Maxima of |psi| and psi_tilde over [-1, 1].

    ``extrema`` holds the refined interior local maxima of ``|psi|`` as
    ``(t, psi(t))`` pairs, increasing in t.  ``radial_valid`` is None when no
    arc was supplied, else whether every sampled point projects radially
    onto the arc (norm in (0, 2), polar angle within the arc).
    """

    max_abs_psi: float
    max_psi_location: float
    hausdorff: float
    hausdorff_location: float
    num_samples: int
    refined: bool
    extrema: tuple[tuple[float, float], ...] = ()
    radial_valid: bool | None = None


def _local_max_indices(v: np.ndarray, limit: int) -> np.ndarray:
    inner = np.nonzero((v[1:-1] >= v[:-2]) & (v[1:-1] > v[2:]))[0] + 1
    if len(inner) > limit:
        # rounding noise; a degree-2n polynomial has at most 2n - 1 extrema
        inner = np.sort(inner[np.argsort(-v[inner], kind="stable")[:limit]])
    return inner


@functools.lru_cache(maxsize=None)
def _bernstein_to_power(n: int) -> np.ndarray:
    """Matrix M with sum_j b_j B_j(t) = sum_i (M @ b)_i t^i on [-1, 1]."""
    P = np.polynomial.Polynomial
    u, v = P([0.5, 0.5]), P([0.5, -0.5])
    M = np.zeros((n + 1, n + 1))
    for j in range(n + 1):
        M[:, j] = (math.comb(n, j) * u**j * v ** (n - j)).coef
    M.flags.writeable = False
    return M


def _scalar_errors(curve: BezierCurve):
    """Fast scalar |psi| and psi_tilde from power-basis coefficients (Horner).

    Only used to locate maxima; reported values come from de Casteljau.
    """
    coef = _bernstein_to_power(curve.degree) @ curve.array
    cx, cy = coef[::-1, 0].tolist(), coef[::-1, 1].tolist()

    def xy(t):
        x = y = 0.0
        for a in cx:
            x = x * t + a
        for a in cy:
            y = y * t + a
        return x, y

    def abs_psi(t):
        x, y = xy(t)
        return abs(x * x + y * y - 1.0)

    def tilde(t):
        x, y = xy(t)
        return abs(math.hypot(x, y) - 1.0)

    return abs_psi, tilde


def _refine(fun, grid, i) -> float:
    """Golden-section style bounded search for the max of ``fun`` next to grid[i]; returns t."""
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)]
    # work in a local variable on [-1, 1]: bounded Brent adds sqrt(eps) * |x| to xatol
    mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    res = minimize_scalar(lambda v: -fun(mid + half * v), bounds=(-1.0, 1.0), method="bounded",
                          options={"xatol": REFINE_XTOL / half})
    x_opt = min(max(mid + half * res.x, lo), hi)
    return float(x_opt) if -res.fun >= fun(grid[i]) else float(grid[i])


def max_error(curve: BezierCurve, samples: int = 10_000, refine: bool = True, arc: ArcSpec | None = None) -> ErrorReport:
    """Sample |psi| and psi_tilde on a uniform grid, then polish each local max.

    Ties resolve to the lowest t.
    """
    if samples < 64:
        raise DomainError(f"samples must be >= 64, got {samples}")
    t = np.linspace(-1.0, 1.0, samples)
    pts = curve(t)
    r2 = np.sum(pts * pts, axis=-1)
    r = np.sqrt(r2)
    abs_psi = np.abs(r2 - 1.0)
    tilde = np.abs(r - 1.0)

    if refine:
        scalar_abs_psi, scalar_tilde = _scalar_errors(curve)

    candidates_psi = [(float(t[i]), float(abs_psi[i])) for i in (0, samples - 1)]
    candidates_tilde = [(float(t[i]), float(tilde[i])) for i in (0, samples - 1)]
    extrema = []
    limit = max(2 * curve.degree - 1, 1)
    for i in _local_max_indices(abs_psi, limit):
        x = _refine(scalar_abs_psi, t, i) if refine else float(t[i])
        value = psi(curve, x)
        candidates_psi.append((x, max(abs(value), float(abs_psi[i])) if x == t[i] else abs(value)))
        extrema.append((x, value))
    for i in _local_max_indices(tilde, limit):
        x = _refine(scalar_tilde, t, i) if refine else float(t[i])
        candidates_tilde.append((x, psi_tilde(curve, x)))

    # max value first, then lowest t
    loc_psi, max_psi = min(candidates_psi, key=lambda c: (-c[1], c[0]))
    loc_h, haus = min(candidates_tilde, key=lambda c: (-c[1], c[0]))

    valid = None
    if arc is not None:
        ang = np.arctan2(pts[:, 1], pts[:, 0])
        slack = 1e-9
        valid = bool(np.all((r > 0.0) & (r < 2.0)) and np.all(np.abs(ang) <= arc.half_angle + slack))
    return ErrorReport(
        max_abs_psi=max_psi,
        max_psi_location=loc_psi,
        hausdorff=haus,
        hausdorff_location=loc_h,
        num_samples=samples,
        refined=refine,
        extrema=tuple(sorted(extrema)),
        radial_valid=valid,
    )


def hausdorff_distance(curve: BezierCurve, samples: int = 10_000) -> float:
    return max_error(curve, samples).hausdorff


def convergence_order(case: tuple[int, int], angles: Sequence[float], samples: int = 10_000) -> tuple[float, float]:
    """Least-squares fit of ``log max|psi| = log C + order * log phi`` over fitted arcs.

    Returns ``(order, C)``.
    """
    from .fitter import fit  # fitter imports metrics

    angles = [float(a) for a in angles]
    if len(angles) < 3:
        raise DomainError("need at least 3 angles")
    for a, b in zip(angles, angles[1:]):
        if not b < a or a / b < 1.5:
            raise DomainError("angles must decrease with ratio >= 1.5 between neighbours")
    errs = []
    for phi in angles:
        res = fit(case[0], case[1], ArcSpec(phi), samples=samples)
        errs.append(res.max_abs_psi)
    errs = np.array(errs)
    if np.any(errs <= 0) or not np.all(np.isfinite(errs)):
        raise DomainError(f"cannot fit an order to errors {errs.tolist()}")
    slope, intercept = np.polyfit(np.log(angles), np.log(errs), 1)
    return float(slope), float(math.exp(intercept))
