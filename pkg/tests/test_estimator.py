from __future__ import annotations

import math

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from bezarc import ArcSpec, DomainError, fit
from bezarc.estimator import GkArcApproximator


def test_params_roundtrip():
    est = GkArcApproximator(degree=4, smoothness=1, half_angle=0.5)
    assert est.get_params() == {"degree": 4, "smoothness": 1, "half_angle": 0.5, "samples": 10_000}
    est.set_params(degree=3)
    assert clone(est).degree == 3


def test_fit_matches_library():
    est = GkArcApproximator(degree=3, smoothness=0, half_angle=math.pi / 2).fit()
    ref = fit(3, 0, ArcSpec(math.pi / 2))
    np.testing.assert_array_equal(est.control_points_, ref.curve.array)
    assert est.params_ == ref.named_params
    assert est.score() == -ref.hausdorff


def test_transform_shapes():
    est = GkArcApproximator(half_angle=0.8)
    t = np.linspace(-1, 1, 9).reshape(-1, 1)
    pts = est.fit_transform(t)
    assert pts.shape == (9, 2)
    np.testing.assert_array_equal(est.predict(t.ravel()), pts)
    np.testing.assert_allclose(np.hypot(*pts.T), 1.0, atol=1e-3)


def test_not_fitted():
    with pytest.raises(NotFittedError):
        GkArcApproximator().transform([[0.0]])


def test_bad_angle():
    with pytest.raises(DomainError):
        GkArcApproximator(half_angle=3.0).fit()
