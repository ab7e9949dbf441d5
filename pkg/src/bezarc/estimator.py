"""scikit-learn style wrapper around the arc fitter."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .geometry import ArcSpec
from .fitter import fit as _fit


class GkArcApproximator(TransformerMixin, BaseEstimator):
    """Optimal G^k Bézier approximant of a unit arc as an estimator.

    The fit has no training data in the usual sense: ``fit`` ignores ``X``
    apart from validation and solves for the approximant of the configured
    arc.  ``transform``/``predict`` then map parameter values t in [-1, 1]
    (one column) to curve points (two columns).
    """

    def __init__(self, degree=3, smoothness=1, half_angle=np.pi / 4, samples=10_000):
        self.degree = degree
        self.smoothness = smoothness
        self.half_angle = half_angle
        self.samples = samples

    def fit(self, X=None, y=None):
        if X is not None:
            check_array(X, ensure_2d=False, allow_nd=True)
        result = _fit(self.degree, self.smoothness, ArcSpec(self.half_angle), samples=self.samples)
        self.result_ = result
        self.control_points_ = np.array(result.curve.array)
        self.params_ = dict(result.named_params)
        self.c_constant_ = result.c_constant
        self.max_abs_psi_ = result.max_abs_psi
        self.hausdorff_ = result.hausdorff
        self.n_features_in_ = 1
        return self

    def _curve_points(self, X):
        check_is_fitted(self, "result_")
        t = check_array(X, ensure_2d=False, dtype=float)
        t = t.reshape(-1)
        return self.result_.curve(t)

    def transform(self, X):
        """Curve points at the parameters in ``X`` (shape ``(m,)`` or ``(m, 1)``)."""
        return self._curve_points(X)

    def predict(self, X):
        return self._curve_points(X)

    def score(self, X=None, y=None):
        """Negative Hausdorff distance, so larger is better."""
        check_is_fitted(self, "result_")
        return -self.hausdorff_
