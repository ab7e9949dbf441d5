from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bezarc import (
    AdmissibilityError,
    ArcSpec,
    DomainError,
    EllipsePair,
    UnsupportedCaseError,
    compute_C,
    fit,
    fit_prescribed_zeros,
    psi_derivatives,
)
from bezarc.fitter import (
    PrescribedZeros,
    cubic_g0_crossings_closed_form,
    minimax_for_case,
    psi_quadratic_form,
    quartic_g1_boundary,
    zero_conditions,
)
from bezarc.geometry import SUPPORTED_CASES, GkScaffold

SQ3 = math.sqrt(3)
# |p|^2 - 1 is formed next to 1, so nothing below a few ulps of 1 is resolvable
ROUNDOFF = 16 * np.finfo(float).eps


def psi_by_basis(points, t):
    """psi from a direct Bernstein sum; shares no code with the package."""
    points = np.asarray(points)
    n = len(points) - 1
    t = np.asarray(t, dtype=float)
    u = (1 + t) / 2
    x = sum(math.comb(n, j) * u**j * (1 - u) ** (n - j) * points[j, 0] for j in range(n + 1))
    y = sum(math.comb(n, j) * u**j * (1 - u) ** (n - j) * points[j, 1] for j in range(n + 1))
    return x * x + y * y - 1


def test_cubic_g0_quarter_circle_exact():
    res = fit(3, 0, ArcSpec(math.pi / 2))
    xi = 4 * math.sqrt(2 + 4 * SQ3) / 9
    eta = (5 + 2 * SQ3) / 9
    np.testing.assert_allclose(res.params, [xi, eta], atol=1e-12)


def test_cubic_g0_ellipses_describe_psi():
    arc = ArcSpec(0.9)
    ell = EllipsePair.cubic_g0(arc)
    sc = GkScaffold(3, 0, arc)
    zeros = minimax_for_case(3, 0).positive_zeros
    for xi, eta in [(1.1, 0.3), (1.4, 0.1), (0.9, 0.6)]:
        pts = sc.instantiate([xi, eta]).array
        e = ell(xi, eta)
        psis = [psi_by_basis(pts, t) for t in zeros]
        # e_i and psi(t_i) are the same function of (xi, eta)
        np.testing.assert_allclose(e, psis, rtol=1e-12, atol=1e-14)


@pytest.mark.parametrize("phi", [0.2, 0.7, 1.2, math.pi / 2])
def test_cubic_g0_crossings_closed_form(phi):
    arc = ArcSpec(phi)
    np.testing.assert_allclose(EllipsePair.cubic_g0(arc).axis_crossings(), cubic_g0_crossings_closed_form(arc),
                               atol=1e-12)
    meta = fit(3, 0, arc).metadata
    assert meta["unique_intersection_certified"]


def test_cubic_g1_quarter_circle_exact():
    b = (math.sqrt(2) - 1) ** (1 / 3)
    d = math.sqrt(2 / 3 * (1 / b - b + 2))
    res = fit(3, 1, ArcSpec(math.pi / 2))
    assert res.params[0] == pytest.approx(d, abs=1e-12)
    assert res.params[0] == pytest.approx(1.315566, abs=1e-6)


def test_quartic_g1_boundary_quarter_arc():
    (d1, d2), (xi1, xi2) = quartic_g1_boundary(ArcSpec(math.pi / 4))
    np.testing.assert_allclose([d1, d2], [0.514871, 0.495957], atol=5e-7)
    np.testing.assert_allclose([xi1, xi2], [1.49096, 1.496410], atol=5e-6)
    assert (d1 - d2) * (xi1 - xi2) < 0


def test_quartic_g1_semicircle():
    res = fit(4, 1, ArcSpec(math.pi / 2))
    assert res.named_params["xi"] == pytest.approx(1.50506, abs=1e-4)
    assert res.named_params["d"] == pytest.approx(0.87152, abs=1e-4)


def test_quartic_g2_semicircle():
    res = fit(4, 2, ArcSpec(math.pi / 2))
    assert res.params[0] == pytest.approx(1.5138192, abs=1e-6)
    d = GkScaffold(4, 2, res.arc).g2_tangent_length(res.params[0])
    assert d == pytest.approx(math.sqrt(3) / 2, abs=1e-12)


@pytest.mark.parametrize("case", SUPPORTED_CASES)
@settings(max_examples=8, deadline=None)
@given(phi=st.floats(0.05, math.pi / 2))
def test_error_is_multiple_of_minimax(case, phi):
    res = fit(*case, ArcSpec(phi), samples=2000)
    pts = res.curve.array
    t = np.linspace(-1, 1, 401)
    ratio_target = res.c_constant * res.minimax_poly(t)
    err = psi_by_basis(pts, t)
    scale = abs(res.c_constant) * res.minimax_poly.norm
    assert np.max(np.abs(err - ratio_target)) <= 1e-9 * scale + ROUNDOFF
    for z in res.minimax_poly.positive_zeros:
        assert abs(psi_by_basis(pts, z)) < 1e-10


@pytest.mark.parametrize("case", SUPPORTED_CASES)
def test_contact_order_at_ends(case):
    res = fit(*case, ArcSpec(1.1))
    k = case[1]
    for end in (-1.0, 1.0):
        d = psi_derivatives(res.curve, end, k + 1)
        assert np.all(np.abs(d[: k + 1]) < 1e-12)
        assert abs(d[k + 1]) > 1e-8


def test_quadratic_small_angle_constant():
    phi = 0.01
    res = fit(2, 0, ArcSpec(phi))
    assert res.c_constant / phi**4 == pytest.approx(-0.25, rel=1e-3)
    assert res.max_abs_psi / phi**4 == pytest.approx((3 - 2 * math.sqrt(2)) / 4, rel=1e-3)


def test_compute_c_matches_psi_at_zero():
    res = fit(3, 1, ArcSpec(0.8))
    assert compute_C(res.curve, res.minimax_poly) == res.c_constant
    assert res.c_constant == pytest.approx(psi_by_basis(res.curve.array, 0.0) / res.minimax_poly.q_at_zero())


def test_psi_quadratic_form_is_exact():
    sc = GkScaffold(4, 1, ArcSpec(0.6))
    c0, g, H = psi_quadratic_form(sc, 0.37)
    for x in ([0.2, 1.1], [0.5, 0.9], [-0.3, 2.0]):
        x = np.array(x)
        assert c0 + g @ x + x @ H @ x == pytest.approx(psi_by_basis(sc.instantiate(x).array, 0.37), abs=1e-13)


def test_selection_of_minimal_constant():
    res = fit(4, 1, ArcSpec(0.1))
    if res.branch_count > 1:
        constants = res.metadata["branch_constants"]
        assert abs(constants[0]) == min(abs(c) for c in constants)
        assert "selection_note" in res.metadata


def test_deterministic():
    a = fit(4, 1, ArcSpec(0.5))
    b = fit(4, 1, ArcSpec(0.5))
    assert a.params == b.params and a.hausdorff == b.hausdorff


def test_tiny_angle_refused():
    with pytest.raises(DomainError):
        fit(3, 0, ArcSpec(1e-9))


def test_unsupported():
    with pytest.raises(UnsupportedCaseError):
        fit(5, 1, 0.5)


def test_float_angle_accepted():
    assert fit(2, 0, 0.5).arc == ArcSpec(0.5)


# -- prescribed zeros --------------------------------------------------------------------


def test_zero_condition_formats_agree():
    t1, t2 = 0.3, 0.7
    a = zero_conditions(4, 1, [t1, t2])
    b = zero_conditions(4, 1, [-t2, -t1, t1, t2])
    c = zero_conditions(4, 1, [-1, -1, -t2, -t1, t1, t2, 1, 1])
    assert a == b == c


def test_zero_condition_multiplicities():
    conds, _ = zero_conditions(4, 1, [-1, -1, -1, -1, 1, 1, 1, 1])
    assert conds == [(1.0, 2), (1.0, 3)]
    conds, _ = zero_conditions(4, 1, [-1, -1, 0, 0, 0, 0, 1, 1])
    assert conds == [(0.0, 0), (0.0, 2)]
    conds, _ = zero_conditions(4, 1, [-0.4, -0.4, 0.4, 0.4])
    assert conds == [(0.4, 0), (0.4, 1)]


@pytest.mark.parametrize(
    "zeros",
    [[0.1], [-0.2, 0.3, 0.5, 0.6], [-1, -2, 0.1, 0.2, 1, 1, 1, 1], [-1, -1, -0.5, 0, 0.1, 0.5, 1, 1], [-0.2, 0, 0.2, 0.5]],
)
def test_zero_condition_rejects(zeros):
    with pytest.raises(DomainError):
        zero_conditions(4, 1, zeros)


def test_prescribed_minimax_zeros_reproduce_fit():
    arc = ArcSpec(math.pi / 4)
    opt = fit(4, 1, arc)
    pres = fit_prescribed_zeros(4, 1, opt.minimax_poly.positive_zeros, arc)
    np.testing.assert_allclose(pres.params, opt.params, atol=1e-10)


def test_prescribed_zeros_never_beat_minimax():
    arc = ArcSpec(math.pi / 4)
    opt = fit(4, 1, arc)
    for zeros in ([0.5, 0.8], [-1, -1, 0, 0, 0, 0, 1, 1]):
        assert fit_prescribed_zeros(4, 1, zeros, arc).max_abs_psi > opt.max_abs_psi


def test_prescribed_zeros_poly():
    p = PrescribedZeros(n=2, k=0, zeros=(-0.5, 0.5))
    assert p.positive_zeros == (0.5,)
    assert p.q_at_zero() == pytest.approx(-0.25)
    assert p(0.5) == 0.0


def test_prescribed_g2():
    res = fit_prescribed_zeros(4, 2, [0.6], ArcSpec(1.0))
    assert abs(psi_by_basis(res.curve.array, 0.6)) < 1e-10


def test_inadmissible_raises_with_diagnostics():
    from bezarc.fitter import _require

    with pytest.raises(AdmissibilityError) as info:
        _require((3, 0), ArcSpec(0.5), [np.array([0.5, -0.1])], {"seed": [1.0, 0.2]})
    assert info.value.diagnostics == {"seed": [1.0, 0.2]}
