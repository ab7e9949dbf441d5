"""Constrained minimax polynomials p*(t) = (1 - t^2)^(k+1) q*(t).

``q*`` is the even monic polynomial of degree 2n - 2k - 2 that minimizes the
max norm of ``p*`` on [-1, 1].  Polynomials are stored through their positive
zeros only and evaluated in product form, which stays accurate for clustered
zeros where monomial coefficients would not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError
from .oracle import bisect_root

FAMILIES = ("chebyshev_k0", "penultimate", "antepenultimate", "remez")

_ROOT_TOL = 1e-14


@dataclass(frozen=True)
class ConstrainedMinimaxPoly:
    """Even polynomial ``(1 - t^2)^(k+1) * prod_i (t^2 - t_i^2)``.

    Attributes
    ----------
    n, k : int
        Curve degree and geometric smoothness, ``0 <= k < n``.
    positive_zeros : tuple of float
        Increasing interior zeros ``0 < t_1 < ... < t_{n-k-1} < 1``.
    norm : float
        Max of ``|p|`` on [-1, 1].
    family : str
        Which construction produced the zeros.
    """

    n: int
    k: int
    positive_zeros: tuple[float, ...]
    norm: float
    family: str

    def __post_init__(self):
        zeros = tuple(float(z) for z in self.positive_zeros)
        object.__setattr__(self, "positive_zeros", zeros)
        object.__setattr__(self, "norm", float(self.norm))

    @property
    def degree(self) -> int:
        return 2 * self.n

    @property
    def num_alternations(self) -> int:
        return 2 * (self.n - self.k) - 1

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        t2 = t * t
        out = (1.0 - t2) ** (self.k + 1)
        for z in self.positive_zeros:
            out = out * (t2 - z * z)
        return float(out) if out.ndim == 0 else out

    def q(self, t):
        """The monic even factor q*(t)."""
        t2 = np.asarray(t, dtype=float) ** 2
        out = np.ones_like(t2)
        for z in self.positive_zeros:
            out = out * (t2 - z * z)
        return float(out) if out.ndim == 0 else out

    def q_at_zero(self) -> float:
        return float(np.prod([-(z * z) for z in self.positive_zeros]))

    def alternation_points(self) -> np.ndarray:
        """Extremal points of ``p`` in (-1, 1), increasing.

        Computed from the critical-point polynomial in ``u = t^2``, so this is
        an algebraic route, independent of any sampling.
        """
        u_crit = _critical_points_u(self.positive_zeros, self.k)
        pos = np.sqrt(u_crit)
        return np.concatenate([-pos[::-1], [0.0], pos])


def _q_coeffs_u(zeros_u) -> np.ndarray:
    """Monic Q(u) = prod (u - u_i) as a numpy Polynomial coefficient array (low first)."""
    return np.polynomial.polynomial.polyfromroots(zeros_u)


def _critical_points_u(positive_zeros, k) -> np.ndarray:
    # d/du[(1-u)^(k+1) Q(u)] = (1-u)^k [(1-u) Q'(u) - (k+1) Q(u)]
    P = np.polynomial.Polynomial
    Q = P(_q_coeffs_u([z * z for z in positive_zeros]))
    R = P([1.0, -1.0]) * Q.deriv() - (k + 1) * Q
    if R.degree() == 0:
        return np.array([])
    roots = R.roots()
    real = np.sort(roots[np.abs(roots.imag) <= 1e-9].real)
    return real[(real > 0.0) & (real < 1.0)]


def eval_minimax(poly: ConstrainedMinimaxPoly, t):
    return poly(t)


def _newton_polish(f: Callable, df: Callable, x: float, steps=2) -> float:
    for _ in range(steps):
        slope = df(x)
        if slope == 0.0:
            break
        x_new = x - f(x) / slope
        if not math.isfinite(x_new):
            break
        x = x_new
    return x


def chebyshev_k0(n: int) -> ConstrainedMinimaxPoly:
    """k = 0: p* is a scaled and dilated Chebyshev polynomial T_{2n}."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    c = math.cos(math.pi / (4 * n))
    zeros = sorted(math.cos((2 * j - 1) * math.pi / (4 * n)) / c for j in range(2, n + 1))
    norm = 2.0 ** (1 - 2 * n) / c ** (2 * n)
    return ConstrainedMinimaxPoly(n=n, k=0, positive_zeros=tuple(zeros), norm=norm, family="chebyshev_k0")


def penultimate_root(n: int) -> float:
    """Unique root of a^n + n a - (n - 1) on (0, 1 - 1/n)."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    f = lambda a: a**n + n * a - (n - 1)  # noqa: E731
    df = lambda a: n * a ** (n - 1) + n  # noqa: E731
    a = bisect_root(f, 0.0, 1.0 - 1.0 / n, _ROOT_TOL)
    return _newton_polish(f, df, a)


def penultimate_case(n: int) -> ConstrainedMinimaxPoly:
    """k = n - 2: one interior zero, t_1 = sqrt(1 - n a / (n - 1))."""
    a = penultimate_root(n)
    shift = n * a / (n - 1)
    t1 = math.sqrt(1.0 - shift)
    return ConstrainedMinimaxPoly(n=n, k=n - 2, positive_zeros=(t1,), norm=1.0 - shift, family="penultimate")


def antepenultimate_ratio(n: int) -> float:
    """Unique root in (0, 1) of lambda^n - r lambda^(n-1) - r lambda + 1, r = n/(n-2)."""
    if n < 3:
        raise DomainError(f"n must be >= 3, got {n}")
    r = n / (n - 2)
    f = lambda x: x**n - r * x ** (n - 1) - r * x + 1.0  # noqa: E731
    df = lambda x: n * x ** (n - 1) - r * (n - 1) * x ** (n - 2) - r  # noqa: E731
    lam = bisect_root(f, 0.0, 1.0, _ROOT_TOL)
    return _newton_polish(f, df, lam)


def _antepenultimate_profile(n, a, b):
    """Integrated form of p* in s = 1 - t^2 (sign differs from the monic form)."""

    def P(s):
        return s ** (n - 2) * (-(s * s) + n / (n - 1) * (a + b) * s - n / (n - 2) * a * b)

    return P


def antepenultimate_outer(n: int, lam: float) -> float:
    """Solve p*(0) = -p*(sqrt(1 - a)) for a, with b = lam * a.

    For n = 4 this reproduces the radical closed form; other n are solved
    numerically on a sign-change bracket found by scanning (0, 1).
    """

    def g(a):
        P = _antepenultimate_profile(n, a, lam * a)
        return P(1.0) + P(a)

    grid = np.linspace(1e-6, 1.0 - 1e-9, 2001)
    vals = np.array([g(x) for x in grid])
    hits = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
    candidates = []
    for i in hits:
        a = bisect_root(g, grid[i], grid[i + 1], _ROOT_TOL)
        b = lam * a
        # interior zeros need both roots s of the quadratic factor in (0, 1)
        s_roots = np.roots([1.0, -n / (n - 1) * (a + b), n / (n - 2) * a * b])
        if np.all(np.abs(s_roots.imag) < 1e-12) and np.all((s_roots.real > 0) & (s_roots.real < 1)):
            candidates.append(a)
    if len(candidates) != 1:
        raise ConvergenceError(
            f"expected one admissible outer root for n={n}, found {len(candidates)}",
            {"candidates": candidates, "lambda": lam},
        )
    return candidates[0]


def antepenultimate_case(n: int) -> ConstrainedMinimaxPoly:
    """k = n - 3: two interior zeros from the quadratic factor in s = 1 - t^2."""
    lam = antepenultimate_ratio(n)
    if n == 4:
        sqrt3, q3 = math.sqrt(3.0), 3.0**0.25
        a = math.sqrt(1 + sqrt3 + math.sqrt(24 + 14 * sqrt3)) - 0.5 * (1 + sqrt3 + math.sqrt(2.0) * q3)
    else:
        a = antepenultimate_outer(n, lam)
    b = lam * a
    # quadratic s^2 - n/(n-1)(a+b) s + n/(n-2) ab, solved stably
    B = -n / (n - 1) * (a + b)
    C = n / (n - 2) * a * b
    disc = math.sqrt(B * B - 4 * C)
    s_big = (-B + disc) / 2.0
    s_small = C / s_big
    zeros = sorted(math.sqrt(1.0 - s) for s in (s_big, s_small))
    norm = abs(_antepenultimate_profile(n, a, b)(1.0))
    return ConstrainedMinimaxPoly(n=n, k=n - 3, positive_zeros=tuple(zeros), norm=norm, family="antepenultimate")


def _initial_reference_u(m: int) -> np.ndarray:
    # positive alternation points of the k = 0 problem with m + 1 = n
    c = math.cos(math.pi / (4 * (m + 1)))
    t = [math.cos((m + 1 - i) * math.pi / (2 * (m + 1))) / c for i in range(m + 1)]
    t[0] = 0.0
    return np.array(t) ** 2


def remez_general(n: int, k: int, tol: float = 1e-12, max_iter: int = 200) -> ConstrainedMinimaxPoly:
    """Exchange iteration in u = t^2 for the constrained minimax problem.

    The reference holds u_0 = 0 plus m = n - k - 1 interior points; each step
    solves the levelled system ``(1 - u_i)^(k+1) Q(u_i) = (-1)^i h`` for the
    monic Q and the level h, then moves the reference to the critical points
    of the new polynomial.
    """
    if not 0 <= k < n:
        raise DomainError(f"need 0 <= k < n, got n={n}, k={k}")
    if tol <= 0:
        raise DomainError("tol must be positive")
    m = n - k - 1
    if m == 0:
        return ConstrainedMinimaxPoly(n=n, k=k, positive_zeros=(), norm=1.0, family="remez")

    u = _initial_reference_u(m)
    signs = (-1.0) ** np.arange(m + 1)
    residual = math.inf
    for _ in range(max_iter):
        w = (1.0 - u) ** (k + 1)
        A = np.empty((m + 1, m + 1))
        A[:, :m] = w[:, None] * u[:, None] ** np.arange(m)
        A[:, m] = -signs
        rhs = -w * u**m
        sol = np.linalg.solve(A, rhs)
        coeffs = np.append(sol[:m], 1.0)
        roots = np.polynomial.polynomial.polyroots(coeffs)
        if np.any(np.abs(roots.imag) > 1e-10) or np.any(roots.real <= 0) or np.any(roots.real >= 1):
            raise ConvergenceError(
                f"remez iterate for n={n}, k={k} lost its interior zeros",
                {"roots": roots.tolist(), "reference": u.tolist()},
            )
        zeros = tuple(np.sqrt(np.sort(roots.real)))
        u_new = np.concatenate([[0.0], _critical_points_u(zeros, k)])
        if len(u_new) != m + 1:
            raise ConvergenceError(
                f"remez iterate for n={n}, k={k} has {len(u_new) - 1} interior extrema, expected {m}",
                {"reference": u_new.tolist()},
            )
        poly = ConstrainedMinimaxPoly(n=n, k=k, positive_zeros=zeros, norm=0.0, family="remez")
        levels = np.abs(poly(np.sqrt(u_new)))
        residual = (levels.max() - levels.min()) / levels.max()
        u = u_new
        if residual <= tol:
            return ConstrainedMinimaxPoly(n=n, k=k, positive_zeros=zeros, norm=levels.max(), family="remez")
    raise ConvergenceError(
        f"remez did not converge for n={n}, k={k} after {max_iter} iterations",
        {"residual": residual, "reference": u.tolist()},
    )


def constrained_minimax(n: int, k: int) -> ConstrainedMinimaxPoly:
    """Pick the closed-form family when one applies, else the exchange solver."""
    if not 0 <= k < n:
        raise DomainError(f"need 0 <= k < n, got n={n}, k={k}")
    if k == 0:
        return chebyshev_k0(n)
    if k == n - 2:
        return penultimate_case(n)
    if k == n - 3:
        return antepenultimate_case(n)
    return remez_general(n, k)
