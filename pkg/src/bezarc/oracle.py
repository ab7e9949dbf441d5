"""Brute-force checks that stay independent of the fitter's solvers.

``conjecture_probe`` builds curves only through the geometry scaffolds and
scores them only through ``metrics.max_error``; the fitted solution enters
solely as the centre of the search box and as the value being checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable

import numpy as np

from .errors import DomainError

if TYPE_CHECKING:
    from .geometry import ArcSpec
    from .minimax import ConstrainedMinimaxPoly

PROBE_SAMPLES = 4096
PROBE_REL_TOL = 1e-3


def bisect_root(f: Callable[[float], float], lo: float, hi: float, tol: float) -> float:
    """Bisection on a sign-changing bracket; at most ceil(log2((hi - lo) / tol)) halvings."""
    if tol <= 0:
        raise DomainError("tol must be positive")
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if not f_lo * f_hi < 0:
        raise DomainError(f"no sign change on [{lo}, {hi}]: f = ({f_lo}, {f_hi})")
    steps = max(0, math.ceil(math.log2((hi - lo) / tol)))
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def minimax_perturbation_probe(poly: ConstrainedMinimaxPoly, trials: int = 100, eps: float = 1e-4, seed: int = 0) -> bool:
    """True iff no random even monic perturbation ``q + eps r`` lowers the max norm.

    The evaluation grid is 10^4 uniform points plus the poly's own extremal
    points, so the unperturbed maximum is seen exactly.
    """
    if trials < 1 or eps <= 0:
        raise DomainError("need trials >= 1 and eps > 0")
    m = len(poly.positive_zeros)
    if m == 0:
        return True  # nothing to perturb: q = 1
    t = np.union1d(np.linspace(-1.0, 1.0, 10_000), poly.alternation_points())
    w = (1.0 - t * t) ** (poly.k + 1)
    q = poly.q(t)
    powers = (t * t)[:, None] ** np.arange(m)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        coeffs = rng.uniform(-1.0, 1.0, m)
        coeffs /= np.max(np.abs(coeffs))
        perturbed = np.max(np.abs(w * (q + eps * (powers @ coeffs))))
        if perturbed < poly.norm - 1e-12:
            return False
    return True


@dataclass(frozen=True)
class GridSearchResult:
    """Outcome of a brute-force search over a scaffold's parameter box.

    ``agrees`` is true when the grid optimum neither beats the fitted
    solution nor misses it by more than ``rel_tol``; ``not_beaten`` only
    asks the first half.
    """

    case: tuple[int, int]
    best_params: tuple[float, ...]
    best_max_abs_psi: float
    grid_best_params: tuple[float, ...]
    grid_best_max_abs_psi: float
    grid_resolution: int
    search_box: tuple[tuple[float, float], ...]
    fitted_params: tuple[float, ...]
    fitted_max_abs_psi: float
    rel_tol: float
    evaluations: int

    @property
    def relative_gap(self) -> float:
        return (self.best_max_abs_psi - self.fitted_max_abs_psi) / self.fitted_max_abs_psi

    @property
    def not_beaten(self) -> bool:
        return self.relative_gap >= -self.rel_tol

    @property
    def agrees(self) -> bool:
        return abs(self.relative_gap) <= self.rel_tol

    @property
    def grid_spacing(self) -> tuple[float, ...]:
        return tuple((hi - lo) / (self.grid_resolution - 1) for lo, hi in self.search_box)


def _simplex_polish(objective, x, step, restarts=8, maxfev=600):
    """Nelder-Mead with restarts; tolerates the kinks of a max-norm objective."""
    from scipy.optimize import minimize

    x = np.array(x, dtype=float)
    best = objective(x)
    evals = 1
    step = np.array(step, dtype=float)
    for _ in range(restarts):
        simplex = np.vstack([x, x + np.diag(step)])
        res = minimize(
            objective,
            x,
            method="Nelder-Mead",
            options={"initial_simplex": simplex, "xatol": 1e-14, "fatol": 0.0, "maxfev": maxfev},
        )
        evals += res.nfev
        if not res.fun < best:
            break
        x, best = res.x, float(res.fun)
        step = np.maximum(np.abs(step) / 10.0, 1e-12 * np.maximum(np.abs(x), 1.0))
    return x, best, evals


def conjecture_probe(
    n: int,
    k: int,
    arc: ArcSpec,
    resolution: int = 101,
    samples: int = PROBE_SAMPLES,
    rel_tol: float = PROBE_REL_TOL,
    reference_params=None,
    seed: int = 0,
) -> GridSearchResult:
    """Exhaustive grid over fitted params +-50% per dimension, then a simplex polish.

    The grid is shifted by a seeded random fraction of its spacing so that
    it never contains the fitted point itself.  Grid points are scored by
    unrefined sampling at ``samples`` points; the descent and the final
    figures use refined maxima.
    """
    from .geometry import GkScaffold
    from .metrics import max_error

    if resolution < 11:
        raise DomainError(f"resolution must be >= 11, got {resolution}")
    scaffold = GkScaffold(n, k, arc)
    if reference_params is None:
        from .fitter import fit  # the value under test, not part of the search

        reference_params = fit(n, k, arc).params
    ref = np.asarray(reference_params, dtype=float)
    box = tuple((0.5 * v, 1.5 * v) if v > 0 else (1.5 * v, 0.5 * v) for v in ref)

    def score(params, refine):
        try:
            curve = scaffold.instantiate(params)
        except DomainError:
            return math.inf
        return max_error(curve, samples, refine=refine).max_abs_psi

    spacing = [(hi - lo) / (resolution - 1) for lo, hi in box]
    shift = np.random.default_rng(seed).uniform(0.05, 0.45, len(box)) * np.array(spacing)
    axes = [np.linspace(lo, hi, resolution) + sh for (lo, hi), sh in zip(box, shift)]
    best_val, best_pt = math.inf, None
    evaluations = 0
    # lexicographic iteration keeps the argmin tie-break deterministic
    for idx in np.ndindex(*(resolution,) * len(axes)):
        pt = np.array([ax[i] for ax, i in zip(axes, idx)])
        val = score(pt, False)
        evaluations += 1
        if val < best_val:
            best_val, best_pt = val, pt
    x, val, evals = _simplex_polish(lambda p: score(p, True), best_pt, spacing)
    evaluations += evals
    fitted_val = score(ref, True)
    return GridSearchResult(
        case=(n, k),
        best_params=tuple(float(v) for v in x),
        best_max_abs_psi=float(val),
        grid_best_params=tuple(float(v) for v in best_pt),
        grid_best_max_abs_psi=float(best_val),
        grid_resolution=resolution,
        search_box=box,
        fitted_params=tuple(float(v) for v in ref),
        fitted_max_abs_psi=float(fitted_val),
        rel_tol=rel_tol,
        evaluations=evaluations,
    )
