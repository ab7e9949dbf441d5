"""Acceptance criteria, one test each, at the stated tolerances.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary prints one
PASS/FAIL line per criterion.
"""

from __future__ import annotations

import json
import math
import time

import numpy as np
import pytest
from scipy.optimize import minimize_scalar

from bezarc import (
    ArcSpec,
    antepenultimate_case,
    chebyshev_k0,
    conjecture_probe,
    constrained_minimax,
    convergence_order,
    fit,
    penultimate_case,
    psi,
    psi_derivatives,
)
from bezarc.cli import main
from bezarc.fitter import quartic_g1_boundary
from bezarc.geometry import SUPPORTED_CASES
from bezarc.minimax import antepenultimate_ratio, penultimate_root

SQ2, SQ3 = math.sqrt(2), math.sqrt(3)
# |p|^2 - 1 is formed next to 1: differences below a few ulps of 1 are rounding
ROUNDOFF = 16 * np.finfo(float).eps


def cli_json(argv, capsys):
    status = main(argv)
    out = capsys.readouterr().out
    assert status == 0, out
    return json.loads(out)["results"]


def sampled_extrema(poly, samples=200_001):
    t = np.linspace(-1, 1, samples)
    v = np.abs(poly(t))
    idx = np.nonzero((v[1:-1] >= v[:-2]) & (v[1:-1] > v[2:]))[0] + 1
    out = []
    for i in idx:
        a, b = t[i - 1], t[i + 1]
        mid, half = (a + b) / 2, (b - a) / 2
        res = minimize_scalar(lambda s: -abs(poly(mid + half * s)), bounds=(-1, 1), method="bounded",
                              options={"xatol": 1e-10})
        out.append(poly(mid + half * res.x))
    return np.array(out)


def loglog_fit(angles, values):
    slope, intercept = np.polyfit(np.log(angles), np.log(values), 1)
    return slope, math.exp(intercept)


@pytest.mark.criterion(1, "quadratic/cubic minimax zeros exact, runtime < 1 ms")
def test_criterion_01_minimax_zeros(capsys):
    r2 = cli_json(["poly", "2", "0"], capsys)
    r3 = cli_json(["poly", "3", "0"], capsys)
    assert abs(r2["positive_zeros"][0] - (SQ2 - 1)) <= 1e-12
    assert np.max(np.abs(np.array(r3["positive_zeros"]) - [2 - SQ3, SQ3 - 1])) <= 1e-12
    best = math.inf
    for _ in range(20):
        t0 = time.perf_counter()
        chebyshev_k0(2)
        chebyshev_k0(3)
        best = min(best, time.perf_counter() - t0)
    assert best < 1e-3, f"runtime {best:.2e} s"


@pytest.mark.criterion(2, "penultimate root radical form, p*_{6,1} equioscillation")
def test_criterion_02_penultimate():
    radical = (SQ2 + 1) ** (1 / 3) - (SQ2 - 1) ** (1 / 3)
    assert abs(penultimate_root(3) - radical) <= 1e-12
    levels = np.abs(sampled_extrema(penultimate_case(3)))
    assert len(levels) == 3
    residual = (levels.max() - levels.min()) / levels.max()
    assert residual <= 1e-10, f"equioscillation residual {residual:.2e}"


@pytest.mark.criterion(3, "antepenultimate lambda and a closed forms, p*_{8,1} five equal extrema")
def test_criterion_03_antepenultimate():
    lam = (SQ3 - SQ2 * 3**0.25 + 1) / 2
    a_closed = math.sqrt(1 + SQ3 + math.sqrt(24 + 14 * SQ3)) - 0.5 * (1 + SQ3 + SQ2 * 3**0.25)
    assert abs(antepenultimate_ratio(4) - lam) <= 1e-12
    from bezarc.minimax import antepenultimate_outer

    assert abs(antepenultimate_outer(4, lam) - a_closed) <= 1e-12
    p = antepenultimate_case(4)
    values = sampled_extrema(p)
    assert len(values) == 5
    assert np.all(np.sign(values[1:]) == -np.sign(values[:-1]))
    spread = (np.abs(values).max() - np.abs(values).min()) / np.abs(values).max()
    assert spread <= 1e-9, f"relative spread {spread:.2e}"


@pytest.mark.criterion(4, "quadratic G0 order 4, constant (3-2sqrt2)/4, Hausdorff constant 0.0214, < 1 s")
def test_criterion_04_quadratic_asymptotics():
    angles = [0.2, 0.1, 0.05, 0.025]
    t0 = time.perf_counter()
    order, const = convergence_order((2, 0), angles)
    elapsed = time.perf_counter() - t0
    _, h_const = loglog_fit(angles, [fit(2, 0, ArcSpec(a)).hausdorff for a in angles])
    target = (3 - 2 * SQ2) / 4
    assert abs(order - 4.0) <= 0.05, f"order {order}"
    assert abs(const - target) / target <= 0.02, f"constant {const} vs {target}"
    assert abs(h_const - 0.0214) / 0.0214 <= 0.03, f"Hausdorff constant {h_const}"
    assert elapsed < 1.0, f"runtime {elapsed:.2f} s"


@pytest.mark.criterion(5, "cubic G0 exact pi/2 solution, error constant (26-15sqrt3)/64")
def test_criterion_05_cubic_g0():
    res = fit(3, 0, ArcSpec(math.pi / 2))
    exact = np.array([4 * math.sqrt(2 + 4 * SQ3) / 9, (5 + 2 * SQ3) / 9])
    assert np.max(np.abs(np.array(res.params) - exact)) <= 1e-10
    _, const = convergence_order((3, 0), [0.2, 0.1, 0.05, 0.025])
    target = (26 - 15 * SQ3) / 64
    assert abs(const - target) / target <= 0.03, f"max|psi| constant {const:.6e} vs {target:.6e}"


@pytest.mark.criterion(6, "cubic G1 pi/2 closed-form tangent length")
def test_criterion_06_cubic_g1():
    b = (SQ2 - 1) ** (1 / 3)
    d = math.sqrt(2 / 3 * (1 / b - b + 2))
    assert abs(fit(3, 1, ArcSpec(math.pi / 2)).params[0] - d) <= 1e-12


@pytest.mark.criterion(7, "quartic G1 boundary values, Hausdorff 6.34e-7, pi/2 parameters")
def test_criterion_07_quartic_g1():
    (d1, d2), (xi1, xi2) = quartic_g1_boundary(ArcSpec(math.pi / 4))
    # printed precision: half a unit in the last printed digit
    assert abs(d1 - 0.514871) <= 5e-7 and abs(d2 - 0.495957) <= 5e-7
    assert abs(xi1 - 1.49096) <= 5e-6 and abs(xi2 - 1.496410) <= 5e-7
    h = fit(4, 1, ArcSpec(math.pi / 4)).hausdorff
    assert abs(h - 6.34e-7) / 6.34e-7 <= 0.02, f"Hausdorff {h:.4e}"
    p = fit(4, 1, ArcSpec(math.pi / 2)).named_params
    assert abs(p["xi"] - 1.50506) <= 1e-4 and abs(p["d"] - 0.87152) <= 1e-4


@pytest.mark.criterion(8, "g1-quartic table: 8 Hausdorff values within 2%, < 5 s")
def test_criterion_08_table(capsys):
    t0 = time.perf_counter()
    rows = cli_json(["bench", "g1-quartic", "--half-angle", "pi/4"], capsys)["rows"]
    elapsed = time.perf_counter() - t0
    assert len(rows) == 8
    off = [f"{r['pattern']}: {r['hausdorff']:.3e} vs {r['published']:.2e}" for r in rows
           if abs(r["relative_deviation"]) > 0.02]
    assert not off, "; ".join(off)
    assert elapsed < 5.0, f"runtime {elapsed:.2f} s"


@pytest.mark.criterion(9, "property suite over all cases and 20 random angles")
def test_criterion_09_properties():
    rng = np.random.default_rng(0)
    # uniform on (0, pi/2]
    angles = math.pi / 2 - rng.uniform(0.0, math.pi / 2, 20)
    t = np.linspace(-1, 1, 1001)
    failures = []
    for case in SUPPORTED_CASES:
        k = case[1]
        for phi in angles:
            res = fit(*case, ArcSpec(phi), samples=2000)
            curve, poly = res.curve, res.minimax_poly
            residual = max((abs(psi(curve, z)) for z in poly.positive_zeros), default=0.0)
            err = psi(curve, t)
            gap = np.max(np.abs(err - res.c_constant * poly(t)))
            scale = abs(res.c_constant) * poly.norm
            contact = max(np.max(np.abs(psi_derivatives(curve, e, k)[: k + 1])) for e in (-1.0, 1.0))
            sym = np.max(np.abs(err - psi(curve, -t)))
            if residual >= 1e-10:
                failures.append(f"{case} phi={phi:.4g} residual {residual:.1e}")
            if gap > 1e-9 * scale + ROUNDOFF:
                failures.append(f"{case} phi={phi:.4g} proportionality {gap:.1e} vs scale {scale:.1e}")
            if contact > 1e-12:
                failures.append(f"{case} phi={phi:.4g} contact {contact:.1e}")
            if sym > 1e-14:
                failures.append(f"{case} phi={phi:.4g} symmetry {sym:.1e}")
    assert not failures, "; ".join(failures[:5])


@pytest.mark.criterion(10, "brute-force grid never beats the fitter (rel 1e-3), < 60 s total")
def test_criterion_10_probes():
    t0 = time.perf_counter()
    failures = []
    for case, res in (((2, 0), 201), ((3, 0), 101), ((3, 1), 201)):
        for phi in (math.pi / 4, math.pi / 2):
            g = conjecture_probe(*case, ArcSpec(phi), resolution=res)
            if not g.not_beaten:
                failures.append(f"{case} phi={phi:.4f} gap {g.relative_gap:.2e}")
    elapsed = time.perf_counter() - t0
    assert not failures, "; ".join(failures)
    assert elapsed < 60.0, f"runtime {elapsed:.1f} s"
