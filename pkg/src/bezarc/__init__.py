"""Optimal G^k Bézier approximation of circular arcs via constrained minimax polynomials."""

from .errors import (
    AdmissibilityError,
    BezarcError,
    ConvergenceError,
    DomainError,
    UnsupportedCaseError,
)
from .geometry import SUPPORTED_CASES, ArcSpec, BezierCurve, GkScaffold, Point2, bernstein, eval_curve, instantiate
from .minimax import (
    ConstrainedMinimaxPoly,
    antepenultimate_case,
    chebyshev_k0,
    constrained_minimax,
    eval_minimax,
    penultimate_case,
    remez_general,
)
from .metrics import ErrorReport, convergence_order, max_error, psi, psi_derivatives, psi_tilde
from .fitter import (
    EllipsePair,
    FitResult,
    compute_C,
    fit,
    fit_cubic_g0,
    fit_cubic_g1,
    fit_prescribed_zeros,
    fit_quadratic_g0,
    fit_quartic_g1,
    fit_quartic_g2,
)
from .oracle import GridSearchResult, bisect_root, conjecture_probe, minimax_perturbation_probe

__version__ = "0.1.0"
