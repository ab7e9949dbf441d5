"""Solve psi(t_i) = 0 for the free control-point parameters of each G^k case.

Every fit pins the interior zeros of the radial error psi to the zeros of a
constrained minimax polynomial, so that ``psi = C * p*`` on the whole
parameter interval.  Among admissible solutions the one with the smallest
``|C|`` is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import AdmissibilityError, ConvergenceError, DomainError, UnsupportedCaseError
from .geometry import SUPPORTED_CASES, ArcSpec, BezierCurve, GkScaffold, Point2
from .metrics import ErrorReport, max_error, psi
from .minimax import ConstrainedMinimaxPoly, antepenultimate_case, chebyshev_k0, penultimate_case

MIN_HALF_ANGLE = 1e-8
NEWTON_STEP_TOL = 1e-14
NEWTON_MAX_ITER = 100
RESIDUAL_TOL = 1e-10
DEDUPE_TOL = 1e-8

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class PrescribedZeros:
    """``(1 - t^2)^(k+1) * prod(t - z)`` for a zero multiset chosen in advance.

    Unlike :class:`ConstrainedMinimaxPoly` nothing is optimal here; the norm
    is measured by sampling.
    """

    n: int
    k: int
    zeros: tuple[float, ...]
    family: str = "prescribed"

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        out = (1.0 - t * t) ** (self.k + 1)
        for z in self.zeros:
            out = out * (t - z)
        return float(out) if out.ndim == 0 else out

    @property
    def positive_zeros(self) -> tuple[float, ...]:
        return tuple(sorted({z for z in self.zeros if 0.0 < z < 1.0}))

    @property
    def norm(self) -> float:
        t = np.linspace(-1.0, 1.0, 20_001)
        v = np.abs(self(t))
        i = int(np.argmax(v))
        lo, hi = t[max(i - 1, 0)], t[min(i + 1, len(t) - 1)]
        fine = np.linspace(lo, hi, 2001)
        return float(max(v[i], np.abs(self(fine)).max()))

    def q_at_zero(self) -> float:
        return float(np.prod([-z for z in self.zeros]))


@dataclass(frozen=True)
class EllipsePair:
    """The conics ``(xi - p_i)^2 / a_i^2 + (eta - q_i)^2 / b_i^2 = 1`` of the cubic G0 system."""

    centers: tuple[Point2, Point2]
    semiaxes: tuple[tuple[float, float], tuple[float, float]]

    @classmethod
    def cubic_g0(cls, arc: ArcSpec) -> EllipsePair:
        c, s = math.cos(arc.half_angle), math.sin(arc.half_angle)
        centers = (
            Point2((3 - 4 * SQRT3) / 9 * c, (-3 - 4 * SQRT3) / 9 * s),
            Point2((-3 - 8 * SQRT3) / 9 * c, (-9 - 8 * SQRT3) / 9 * s),
        )
        semiaxes = (
            (2 / 9 * (3 + 2 * SQRT3), 2 / 9 * (12 + 7 * SQRT3)),
            (4 / 9 * (3 + 2 * SQRT3), 2 / 9 * (9 + 5 * SQRT3)),
        )
        return cls(centers=centers, semiaxes=semiaxes)

    def __call__(self, xi, eta) -> np.ndarray:
        return np.array(
            [
                (xi - p) ** 2 / a**2 + (eta - q) ** 2 / b**2 - 1.0
                for (p, q), (a, b) in zip(self.centers, self.semiaxes)
            ]
        )

    def axis_crossings(self) -> tuple[tuple[float, float], tuple[float, float]]:
        """``((xi_1, xi_2), (eta_1, eta_2))``: crossings with eta = 0 and xi = 1 on the admissible side."""
        xis, etas = [], []
        for (p, q), (a, b) in zip(self.centers, self.semiaxes):
            xis.append(p + a * math.sqrt(1.0 - q * q / (b * b)))
            etas.append(q + b * math.sqrt(1.0 - (1.0 - p) ** 2 / (a * a)))
        return (xis[0], xis[1]), (etas[0], etas[1])


def cubic_g0_crossings_closed_form(arc: ArcSpec) -> tuple[tuple[float, float], tuple[float, float]]:
    """Radical expressions for the same crossings as :meth:`EllipsePair.axis_crossings`."""
    phi = arc.half_angle
    c, s, c2, h = math.cos(phi), math.sin(phi), math.cos(2 * phi), math.sin(phi / 2)
    xi1 = (3 - 4 * SQRT3) / 9 * c + math.sqrt((19 + 52 * SQRT3) / 54 + (37 - 20 * SQRT3) / 54 * c2)
    xi2 = -(3 + 8 * SQRT3) / 9 * c + math.sqrt((74 + 59 * SQRT3) / 27 + (38 + 5 * SQRT3) / 27 * c2)
    eta1 = -(3 + 4 * SQRT3) / 9 * s + math.sqrt(2 / 27 * (199 + 116 * SQRT3) + 2 / 27 * (37 + 20 * SQRT3) * c) * h
    eta2 = -(9 + 8 * SQRT3) / 9 * s + math.sqrt((362 + 213 * SQRT3) / 27 + (182 + 99 * SQRT3) / 27 * c) * h
    return (xi1, xi2), (eta1, eta2)


@dataclass(frozen=True)
class FitResult:
    """A fitted approximant and its error figures.

    ``params`` follow ``param_names``; ``branches`` lists every admissible
    parameter vector found, best first.  ``metadata`` carries case-specific
    diagnostics such as boundary crossings.
    """

    case: tuple[int, int]
    arc: ArcSpec
    curve: BezierCurve
    params: tuple[float, ...]
    param_names: tuple[str, ...]
    c_constant: float
    max_abs_psi: float
    hausdorff: float
    branch_count: int
    minimax_poly: ConstrainedMinimaxPoly | PrescribedZeros
    error_report: ErrorReport
    branches: tuple[tuple[float, ...], ...] = ()
    metadata: Mapping[str, object] = field(default_factory=dict)

    @property
    def named_params(self) -> dict[str, float]:
        return dict(zip(self.param_names, self.params))


# -- psi as a quadratic form in the parameters -------------------------------------------


def _derivative_values(points: np.ndarray, t: float, order: int) -> np.ndarray:
    """Values of a Bézier curve and its first ``order`` hodographs at t."""
    curve = BezierCurve.from_array(points)
    out = []
    for _ in range(order + 1):
        out.append(curve(t))
        curve = curve.derivative()
    return np.array(out)


def psi_quadratic_form(scaffold: GkScaffold, t: float, order: int = 0):
    """Coefficients of ``psi^(order)(t) = c0 + g . x + x . H . x`` for an affine scaffold."""
    base, dirs = scaffold.affine_form()
    B = _derivative_values(base, t, order)
    D = np.array([_derivative_values(d, t, order) for d in dirs])
    m = len(dirs)
    c0 = -1.0 if order == 0 else 0.0
    g = np.zeros(m)
    H = np.zeros((m, m))
    for i in range(order + 1):
        w = math.comb(order, i)
        j = order - i
        c0 += w * B[i] @ B[j]
        g += w * (D[:, i] @ B[j] + D[:, j] @ B[i])
        H += w * D[:, i] @ D[:, j].T
    return c0, g, 0.5 * (H + H.T)


def _condition_system(scaffold: GkScaffold, conditions: Sequence[tuple[float, int]]):
    forms = [psi_quadratic_form(scaffold, t, j) for t, j in conditions]

    def F(x):
        return np.array([c0 + g @ x + x @ H @ x for c0, g, H in forms])

    def J(x):
        return np.array([g + 2.0 * H @ x for _, g, H in forms])

    return F, J


def _damped_newton(F: Callable, J: Callable, x0, max_iter=NEWTON_MAX_ITER, step_tol=NEWTON_STEP_TOL):
    """Newton with backtracking on the residual norm.

    Returns ``(x, residual_norm, converged)``.  Stagnation at the rounding
    floor counts as convergence when the residual is below RESIDUAL_TOL.
    """
    x = np.asarray(x0, dtype=float).copy()
    r = F(x)
    nr = float(np.linalg.norm(r))
    for _ in range(max_iter):
        try:
            step = np.linalg.solve(J(x), -r)
        except np.linalg.LinAlgError:
            return x, nr, False
        if not np.all(np.isfinite(step)):
            return x, nr, False
        lam = 1.0
        while True:
            x_new = x + lam * step
            r_new = F(x_new)
            nr_new = float(np.linalg.norm(r_new))
            if nr_new < nr or lam < 1e-6:
                break
            lam *= 0.5
        if not nr_new < nr:
            return x, nr, nr <= RESIDUAL_TOL
        moved = float(np.linalg.norm(x_new - x))
        x, r, nr = x_new, r_new, nr_new
        if moved <= step_tol * (1.0 + float(np.linalg.norm(x))) or nr == 0.0:
            return x, nr, nr <= RESIDUAL_TOL
    return x, nr, nr <= RESIDUAL_TOL


def _multistart(F, J, seeds) -> tuple[list[np.ndarray], list[dict]]:
    roots: list[np.ndarray] = []
    endpoints = []
    for seed in seeds:
        x, nr, ok = _damped_newton(F, J, seed)
        endpoints.append({"seed": np.asarray(seed).tolist(), "end": x.tolist(), "residual": nr, "converged": ok})
        if ok and not any(np.max(np.abs(x - r0)) <= DEDUPE_TOL * (1 + np.max(np.abs(r0))) for r0 in roots):
            roots.append(x)
    # deterministic order regardless of seed order
    roots.sort(key=lambda v: tuple(v))
    return roots, endpoints


# -- admissibility ---------------------------------------------------------------------------


def _admissible(case, params, arc) -> bool:
    p = params
    if case == (2, 0):
        return p[0] > 0
    if case == (3, 0):
        return p[0] > 1 and p[1] > 0
    if case == (3, 1):
        return p[0] > 0
    if case == (4, 1):
        return p[0] > 0 and p[1] > 1
    if case == (4, 2):
        return p[0] > 1 and math.cos(arc.half_angle) * p[0] < 1
    raise UnsupportedCaseError(case)


_REGION_NAMES = {
    (2, 0): "{xi > 0}",
    (3, 0): "D_30 = {xi > 1, eta > 0}",
    (3, 1): "{d > 0}",
    (4, 1): "D_41 = {xi > 1, d > 0}",
    (4, 2): "{xi > 1, d > 0}",
}


# -- result assembly ------------------------------------------------------------------------


def compute_C(curve: BezierCurve, poly: ConstrainedMinimaxPoly) -> float:
    """Error constant ``C = psi(0) / q*(0)``."""
    q0 = poly.q_at_zero()
    if q0 == 0.0:
        raise DomainError("q*(0) = 0: polynomial has a zero at t = 0, C is not defined through t = 0")
    return psi(curve, 0.0) / q0


def _ratio_constant(curve: BezierCurve, poly) -> float:
    # psi / p at the point where |p| is largest, for polys vanishing at t = 0
    t = np.linspace(-1.0, 1.0, 4001)
    i = int(np.argmax(np.abs(poly(t))))
    return psi(curve, t[i]) / poly(t[i])


def _check_arc(arc: ArcSpec) -> ArcSpec:
    if not isinstance(arc, ArcSpec):
        arc = ArcSpec(arc)
    if arc.half_angle < MIN_HALF_ANGLE:
        raise DomainError(
            f"half_angle {arc.half_angle!r} is below {MIN_HALF_ANGLE}; the systems are numerically singular there, "
            "use the asymptotic error formulas instead"
        )
    return arc


def _assemble(case, arc, params_list, poly, samples, metadata, select="C") -> FitResult:
    scaffold = GkScaffold(*case, arc)
    candidates = []
    for params in params_list:
        curve = scaffold.instantiate(params)
        if isinstance(poly, ConstrainedMinimaxPoly):
            C = compute_C(curve, poly)
        else:
            C = _ratio_constant(curve, poly)
        candidates.append((tuple(float(v) for v in params), curve, C))
    if select == "C":
        candidates.sort(key=lambda c: abs(c[2]))
        best_params, best_curve, best_C = candidates[0]
        report = max_error(best_curve, samples, arc=arc)
    else:
        reports = [max_error(c[1], samples, arc=arc) for c in candidates]
        order = sorted(range(len(candidates)), key=lambda i: reports[i].max_abs_psi)
        candidates = [candidates[i] for i in order]
        best_params, best_curve, best_C = candidates[0]
        report = reports[order[0]]
    meta = dict(metadata)
    if len(candidates) > 1:
        meta["selection_note"] = (
            "several admissible solutions; returned the minimal-|C| branch, whose optimality is conjectural"
            if select == "C"
            else "several admissible solutions; returned the one with smallest max|psi|"
        )
        meta["branch_constants"] = [c[2] for c in candidates]
    return FitResult(
        case=case,
        arc=arc,
        curve=best_curve,
        params=best_params,
        param_names=scaffold.param_names,
        c_constant=best_C,
        max_abs_psi=report.max_abs_psi,
        hausdorff=report.hausdorff,
        branch_count=len(candidates),
        minimax_poly=poly,
        error_report=report,
        branches=tuple(c[0] for c in candidates),
        metadata=meta,
    )


def _require(case, arc, params_list, diagnostics):
    good = [p for p in params_list if _admissible(case, p, arc)]
    if not good:
        raise AdmissibilityError(
            f"no solution of the degree {case[0]} G{case[1]} system lies in {_REGION_NAMES[case]}",
            diagnostics,
        )
    return good


# -- individual cases -----------------------------------------------------------------------


def fit_quadratic_g0(arc: ArcSpec, samples: int = 10_000) -> FitResult:
    arc = _check_arc(arc)
    c = math.cos(arc.half_angle)
    xi = -math.sqrt(2.0) * c + math.sqrt(2.0 + 2.0 * math.sqrt(2.0) + c * c)
    return _assemble((2, 0), arc, [np.array([xi])], chebyshev_k0(2), samples, {})


def fit_cubic_g0(arc: ArcSpec, samples: int = 10_000) -> FitResult:
    arc = _check_arc(arc)
    poly = chebyshev_k0(3)
    ellipses = EllipsePair.cubic_g0(arc)
    (xi1, xi2), (eta1, eta2) = ellipses.axis_crossings()
    # seed: intersection of the chords (xi_i, 0) -- (1, eta_i)
    A = np.array([[eta1, xi1 - 1.0], [eta2, xi2 - 1.0]])
    rhs = np.array([eta1 * xi1, eta2 * xi2])
    try:
        seed = np.linalg.solve(A, rhs)
    except np.linalg.LinAlgError:
        seed = np.array([0.5 * (1.0 + max(xi1, xi2)), 0.5 * max(eta1, eta2)])
    F, J = _condition_system(GkScaffold(3, 0, arc), [(t, 0) for t in poly.positive_zeros])
    x, nr, ok = _damped_newton(F, J, seed)
    meta = {
        "ellipse_centers": [list(c) for c in ellipses.centers],
        "ellipse_semiaxes": [list(a) for a in ellipses.semiaxes],
        "boundary_xi": [xi1, xi2],
        "boundary_eta": [eta1, eta2],
        "crossing_relation": (xi1 - xi2) * (eta1 - eta2),
        "unique_intersection_certified": (xi1 - xi2) * (eta1 - eta2) < 0,
        "seed": seed.tolist(),
    }
    if not ok:
        raise ConvergenceError("cubic G0 Newton iteration did not converge", {**meta, "end": x.tolist(), "residual": nr})
    return _assemble((3, 0), arc, _require((3, 0), arc, [x], meta), poly, samples, meta)


def cubic_g1_quadratic(arc: ArcSpec) -> tuple[float, float, float]:
    """Coefficients ``(A, B, C)`` of ``A d^2 + B d + C`` whose positive root is the optimal tangent length."""
    phi = arc.half_angle
    b = (math.sqrt(2.0) - 1.0) ** (1.0 / 3.0)
    A = 9 * (b * b - 1) * (1 + math.cos(2 * phi)) + 12 * b
    B = -4 * math.sin(2 * phi) * (3 * b * b - 2 * b - 3)
    C = 8 * math.sin(phi) ** 2 * ((b - 1) ** 2 - 2)
    return A, B, C


def fit_cubic_g1(arc: ArcSpec, samples: int = 10_000) -> FitResult:
    arc = _check_arc(arc)
    A, B, C = cubic_g1_quadratic(arc)
    if not (A > 0 and C < 0):
        raise ConvergenceError("cubic G1 quadratic lost its sign structure", {"coefficients": [A, B, C]})
    disc = math.sqrt(B * B - 4 * A * C)
    d = (-B + disc) / (2 * A) if B <= 0 else (2 * C) / (-B - disc)
    meta = {"quadratic": [A, B, C], "discriminant": B * B - 4 * A * C}
    return _assemble((3, 1), arc, [np.array([d])], penultimate_case(3), samples, meta)


def _positive_quadratic_roots(a2, a1, a0) -> list[float]:
    roots = np.roots([a2, a1, a0]) if abs(a2) > 0 else np.array([-a0 / a1])
    return sorted(float(r.real) for r in np.atleast_1d(roots) if abs(r.imag) < 1e-12)


def quartic_g1_boundary(arc: ArcSpec, poly: ConstrainedMinimaxPoly | None = None):
    """Crossings of ``g_i = 0`` with the edges xi = 1 and d = 0 of D_41.

    Returns ``((d_1, d_2), (xi_1, xi_2))``; on each edge the crossing with
    the larger coordinate is taken.
    """
    poly = poly or antepenultimate_case(4)
    scaffold = GkScaffold(4, 1, arc)
    ds, xis = [], []
    for t in poly.positive_zeros:
        c0, g, H = psi_quadratic_form(scaffold, t)
        # params (d, xi); edge xi = 1
        rd = [r for r in _positive_quadratic_roots(H[0, 0], g[0] + 2 * H[0, 1], c0 + g[1] + H[1, 1]) if r > 0]
        rx = [r for r in _positive_quadratic_roots(H[1, 1], g[1], c0) if r > 1]
        ds.append(max(rd) if rd else math.nan)
        xis.append(max(rx) if rx else math.nan)
    return (ds[0], ds[1]), (xis[0], xis[1])


def fit_quartic_g1(arc: ArcSpec, samples: int = 10_000, grid: int = 5) -> FitResult:
    arc = _check_arc(arc)
    poly = antepenultimate_case(4)
    (d1, d2), (xi1, xi2) = quartic_g1_boundary(arc, poly)
    d_hi = np.nanmax([d1, d2, 0.1])
    xi_hi = np.nanmax([xi1, xi2, 1.1])
    seeds = [np.array([d, x]) for d in np.linspace(0.0, d_hi, grid) for x in np.linspace(1.0, xi_hi, grid)]
    F, J = _condition_system(GkScaffold(4, 1, arc), [(t, 0) for t in poly.positive_zeros])
    roots, endpoints = _multistart(F, J, seeds)
    meta = {
        "boundary_d": [d1, d2],
        "boundary_xi": [xi1, xi2],
        "crossing_relation": (d1 - d2) * (xi1 - xi2),
        "unique_intersection_certified": bool((d1 - d2) * (xi1 - xi2) < 0),
    }
    good = _require((4, 1), arc, roots, {**meta, "newton_endpoints": endpoints})
    return _assemble((4, 1), arc, good, poly, samples, meta)


def _g2_scalar_roots(arc: ArcSpec, t: float, order: int) -> list[float]:
    """All xi solving ``psi^(order)(t) = 0`` on the quartic G2 scaffold.

    The G2 scaffold is the quartic G1 one with ``d^2 = 3/4 (1 - xi cos(phi))``.
    Writing psi = A(xi) + d B(xi) and squaring gives a quartic in xi whose
    real roots are filtered back through the unsquared equation and polished
    by a bracketed solve.
    """
    from scipy.optimize import brentq, minimize_scalar

    c = math.cos(arc.half_angle)
    g1 = GkScaffold(4, 1, arc)
    g2 = GkScaffold(4, 2, arc)
    c0, g, H = psi_quadratic_form(g1, t, order)
    P = np.polynomial.Polynomial
    d2 = P([0.75, -0.75 * c])
    A = P([c0, g[1], H[1, 1]]) + H[0, 0] * d2
    B = P([g[0], 2.0 * H[0, 1]])
    quartic = A * A - d2 * B * B
    xi_max = 1.0 / c if c > 1e-15 else math.inf

    def h(x):
        return float(A(x) + math.sqrt(max(d2(x), 0.0)) * B(x))

    # The squared quartic only guides the search: near-double roots lose
    # accuracy there (or turn complex), so every root is re-bracketed on h.
    guides = sorted(
        (float(r.real), abs(float(r.imag)))
        for r in quartic.roots()
        if abs(r.imag) <= 1e-3 * (1 + abs(r.real)) and r.real < xi_max
    )
    out = []
    for i, (x, im) in enumerate(guides):
        gaps = [abs(x - y) for j, (y, _) in enumerate(guides) if j != i]
        w = max(1e-6 * (1 + abs(x)), 10.0 * im, 2.0 * min(gaps, default=0.0) if min(gaps, default=1.0) < 1e-3 else 0.0)
        lo, hi = x - w, min(x + w, xi_max)
        grid = np.linspace(lo, hi, 401)
        vals = np.array([h(v) for v in grid])
        found = []
        for j in np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]:
            found.append(brentq(h, grid[j], grid[j + 1], xtol=1e-15))
        found += [float(v) for v in grid[vals == 0.0]]
        if not found:
            # roots merged below rounding: accept the extremum if it touches zero
            sign = 1.0 if vals.max() < 0 else -1.0
            j = int(np.argmax(sign * vals))
            a, b = grid[max(j - 1, 0)], grid[min(j + 1, len(grid) - 1)]
            # local variable in [-1, 1]: bounded Brent's tolerance is relative to |x|
            mid, half = 0.5 * (a + b), 0.5 * (b - a)
            res = minimize_scalar(lambda v: -sign * h(mid + half * v), bounds=(-1.0, 1.0), method="bounded",
                                  options={"xatol": 1e-12})
            x_ext = mid + half * res.x
            if abs(h(x_ext)) <= 64 * np.finfo(float).eps * (1 + abs(A(x_ext))):
                found.append(float(x_ext))
        for r in found:
            if not any(abs(r - y) <= 1e-12 * (1 + abs(r)) for y in out):
                out.append(r)
    # residual check on the actual curve
    keep = []
    for x in sorted(out):
        if order == 0 and abs(psi(g2.instantiate([x]), t)) > RESIDUAL_TOL:
            continue
        keep.append(x)
    return keep


def fit_quartic_g2(arc: ArcSpec, samples: int = 10_000) -> FitResult:
    arc = _check_arc(arc)
    poly = penultimate_case(4)
    roots = _g2_scalar_roots(arc, poly.positive_zeros[0], 0)
    meta = {"all_roots_xi": roots}
    good = _require((4, 2), arc, [np.array([r]) for r in roots], meta)
    return _assemble((4, 2), arc, good, poly, samples, meta)


_CASE_FITTERS = {
    (2, 0): fit_quadratic_g0,
    (3, 0): fit_cubic_g0,
    (3, 1): fit_cubic_g1,
    (4, 1): fit_quartic_g1,
    (4, 2): fit_quartic_g2,
}


def fit(degree: int, smoothness: int, arc: ArcSpec | float, samples: int = 10_000) -> FitResult:
    """Optimal G^smoothness approximant of the given degree."""
    case = (degree, smoothness)
    if case not in _CASE_FITTERS:
        raise UnsupportedCaseError(f"no solver for degree={degree}, smoothness={smoothness}; supported: {SUPPORTED_CASES}")
    return _CASE_FITTERS[case](_check_arc(arc), samples=samples)


def minimax_for_case(degree: int, smoothness: int) -> ConstrainedMinimaxPoly:
    return {
        (2, 0): lambda: chebyshev_k0(2),
        (3, 0): lambda: chebyshev_k0(3),
        (3, 1): lambda: penultimate_case(3),
        (4, 1): lambda: antepenultimate_case(4),
        (4, 2): lambda: penultimate_case(4),
    }[(degree, smoothness)]()


# -- prescribed zeros ------------------------------------------------------------------------


def zero_conditions(n: int, k: int, zeros: Sequence[float]) -> tuple[list[tuple[float, int]], tuple[float, ...]]:
    """Translate a zero pattern into conditions ``psi^(j)(t) = 0``.

    ``zeros`` may be given as the m = n - k - 1 positive zeros, as all
    2m zeros of q, or as all 2n zeros of p (including the k + 1 boundary
    copies at each end).  A zero of multiplicity mu at an interior point asks
    for psi and its first mu - 1 derivatives to vanish there; extra copies of
    +-1 raise the boundary contact; at t = 0 only even orders are imposed since
    psi is even.  Returns ``(conditions, q_zeros)``.
    """
    m = n - k - 1
    zs = [float(z) for z in zeros]
    if len(zs) == m and all(0.0 < z < 1.0 for z in zs) and all(a < b for a, b in zip(zs, zs[1:])):
        zs = sorted([-z for z in zs] + zs)
    elif len(zs) == 2 * n:
        zs = sorted(zs)
        for end in (-1.0, 1.0):
            for _ in range(k + 1):
                if end not in zs:
                    raise DomainError(f"a zero list of length 2n must contain {k + 1} copies of {end}")
                zs.remove(end)
    elif len(zs) != 2 * m:
        raise DomainError(f"expected {m}, {2 * m} or {2 * n} zeros for n={n}, k={k}, got {len(zs)}")
    zs = sorted(zs)
    if any(abs(z) > 1.0 for z in zs):
        raise DomainError("zeros must lie in [-1, 1]")
    if not np.allclose(zs, sorted(-z for z in zs), rtol=0, atol=1e-15):
        raise DomainError(f"zero pattern must be symmetric about 0, got {zs}")
    zs = [abs(z) if abs(z) == 0 else z for z in zs]

    conditions: list[tuple[float, int]] = []
    for z in sorted({z for z in zs if z >= 0.0}):
        mult = sum(1 for w in zs if w == z)
        if z == 0.0:
            if mult % 2:
                raise DomainError("a zero at t = 0 must have even multiplicity")
            conditions += [(0.0, j) for j in range(0, mult, 2)]
        elif z == 1.0:
            conditions += [(1.0, j) for j in range(k + 1, k + 1 + mult)]
        else:
            conditions += [(z, j) for j in range(mult)]
    if len(conditions) != m:
        raise DomainError(f"zero pattern yields {len(conditions)} conditions, need {m}")
    return conditions, tuple(zs)


def fit_prescribed_zeros(
    n: int, k: int, zeros: Sequence[float], arc: ArcSpec | float, samples: int = 10_000, grid: int = 7
) -> FitResult:
    """Approximant whose radial error has the given zeros instead of the minimax ones.

    Among admissible solutions the one with the smallest max|psi| is returned.
    """
    case = (n, k)
    if case not in _CASE_FITTERS:
        raise UnsupportedCaseError(f"no solver for degree={n}, smoothness={k}")
    arc = _check_arc(arc)
    conditions, q_zeros = zero_conditions(n, k, zeros)
    poly = PrescribedZeros(n=n, k=k, zeros=q_zeros)
    meta = {"conditions": [list(c) for c in conditions]}
    if case == (4, 2):
        (t, order), = conditions
        roots = [np.array([r]) for r in _g2_scalar_roots(arc, t, order)]
        good = _require(case, arc, roots, meta)
        return _assemble(case, arc, good, poly, samples, meta, select="max")

    # seed around the optimal fit, which shares the scaffold
    center = np.array(fit(n, k, arc, samples=256).params)
    spans = [np.linspace(0.5 * v, 1.5 * v, grid) if v != 0 else np.linspace(-1, 1, grid) for v in center]
    seeds = [center] + [np.array(s) for s in np.array(np.meshgrid(*spans, indexing="ij")).reshape(len(center), -1).T]
    F, J = _condition_system(GkScaffold(n, k, arc), conditions)
    roots, endpoints = _multistart(F, J, seeds)
    good = _require(case, arc, roots, {**meta, "newton_endpoints": endpoints})
    return _assemble(case, arc, good, poly, samples, meta, select="max")
