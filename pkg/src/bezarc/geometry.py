"""Bernstein/Bézier evaluation and symmetric G^k control-point scaffolds.

All curves live on the parameter domain [-1, 1] and approximate the unit
circular arc between angles -phi and phi, which is symmetric with respect to
the x axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DomainError, UnsupportedCaseError

#: (degree, smoothness) pairs with a control-point scaffold.
SUPPORTED_CASES = ((2, 0), (3, 0), (3, 1), (4, 1), (4, 2))

#: Names of the free parameters, in the order ``instantiate`` expects them.
PARAM_NAMES = {
    (2, 0): ("xi",),
    (3, 0): ("xi", "eta"),
    (3, 1): ("d",),
    (4, 1): ("d", "xi"),
    (4, 2): ("xi",),
}

_T_SLACK = 1e-12


class Point2(NamedTuple):
    x: float
    y: float


def _check_t(t, slack=_T_SLACK):
    t_arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t_arr)):
        raise DomainError("parameter t must be finite")
    if np.any(t_arr < -1.0 - slack) or np.any(t_arr > 1.0 + slack):
        raise DomainError(f"parameter t must lie in [-1, 1], got {t!r}")
    return t_arr


@dataclass(frozen=True)
class ArcSpec:
    """Unit circular arc over angles [-half_angle, half_angle]."""

    half_angle: float

    def __post_init__(self):
        phi = float(self.half_angle)
        if not math.isfinite(phi) or not 0.0 < phi <= math.pi / 2:
            raise DomainError(f"half_angle must lie in (0, pi/2], got {self.half_angle!r}")
        object.__setattr__(self, "half_angle", phi)

    @property
    def start(self) -> Point2:
        return Point2(math.cos(self.half_angle), -math.sin(self.half_angle))

    @property
    def end(self) -> Point2:
        return Point2(math.cos(self.half_angle), math.sin(self.half_angle))

    def points(self, num=200) -> np.ndarray:
        s = np.linspace(-self.half_angle, self.half_angle, num)
        return np.column_stack([np.cos(s), np.sin(s)])


@dataclass(frozen=True)
class BezierCurve:
    """Planar polynomial curve in Bézier form over [-1, 1]."""

    degree: int
    control_points: tuple[Point2, ...]
    _array: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pts = np.asarray(self.control_points, dtype=float)
        if self.degree < 0 or pts.shape != (self.degree + 1, 2):
            raise DomainError(
                f"degree {self.degree} curve needs {self.degree + 1} control points, got shape {pts.shape}"
            )
        if not np.all(np.isfinite(pts)):
            raise DomainError("control points must be finite")
        pts.setflags(write=False)
        object.__setattr__(self, "control_points", tuple(Point2(float(x), float(y)) for x, y in pts))
        object.__setattr__(self, "_array", pts)

    @classmethod
    def from_array(cls, points) -> BezierCurve:
        pts = np.asarray(points, dtype=float)
        return cls(degree=len(pts) - 1, control_points=tuple(map(tuple, pts)))

    @property
    def array(self) -> np.ndarray:
        """Read-only ``(degree + 1, 2)`` array of control points."""
        return self._array

    def __call__(self, t) -> np.ndarray:
        """Evaluate at scalar or array ``t``; returns shape ``t.shape + (2,)``."""
        t_arr = _check_t(t)
        return _de_casteljau(self._array, t_arr)

    def derivative(self) -> BezierCurve:
        """Hodograph with respect to t on [-1, 1]."""
        if self.degree == 0:
            return BezierCurve.from_array(np.zeros((1, 2)))
        diffs = 0.5 * self.degree * np.diff(self._array, axis=0)
        return BezierCurve.from_array(diffs)

    def is_mirror_symmetric(self, atol=1e-14) -> bool:
        pts = self._array
        mirrored = pts[::-1] * np.array([1.0, -1.0])
        return bool(np.allclose(pts, mirrored, rtol=0.0, atol=atol))


def _de_casteljau(points: np.ndarray, t: np.ndarray) -> np.ndarray:
    u = ((1.0 + t) / 2.0)[..., None]
    work = np.broadcast_to(points, t.shape + points.shape).copy()
    for r in range(1, len(points)):
        work = (1.0 - u[..., None]) * work[..., :-1, :] + u[..., None] * work[..., 1:, :]
    return work[..., 0, :]


def bernstein(n: int, j: int, t):
    """Bernstein basis polynomial B_j^n reparameterized to [-1, 1]."""
    if n < 0 or not 0 <= j <= n:
        raise DomainError(f"need 0 <= j <= n, got n={n}, j={j}")
    t_arr = _check_t(t)
    u = (1.0 + t_arr) / 2.0
    value = math.comb(n, j) * u**j * (1.0 - u) ** (n - j)
    return float(value) if np.ndim(value) == 0 else value


def eval_curve(curve: BezierCurve, t: float) -> Point2:
    x, y = curve(t)
    return Point2(float(x), float(y))


@dataclass(frozen=True)
class GkScaffold:
    """Symmetric degree-``degree`` control polygon with G^``smoothness`` contact.

    The endpoints sit on the arc, interior control points depend on
    ``free_param_count = degree - smoothness - 1`` unknowns.
    """

    degree: int
    smoothness: int
    arc: ArcSpec

    def __post_init__(self):
        if (self.degree, self.smoothness) not in SUPPORTED_CASES:
            raise UnsupportedCaseError(
                f"no scaffold for degree={self.degree}, smoothness={self.smoothness}; "
                f"supported: {SUPPORTED_CASES}"
            )

    @property
    def case(self) -> tuple[int, int]:
        return (self.degree, self.smoothness)

    @property
    def free_param_count(self) -> int:
        return self.degree - self.smoothness - 1

    @property
    def param_names(self) -> tuple[str, ...]:
        return PARAM_NAMES[self.case]

    @property
    def is_affine(self) -> bool:
        """True when control points depend affinely on the free parameters."""
        return self.case != (4, 2)

    def affine_form(self) -> tuple[np.ndarray, np.ndarray]:
        """Return ``(base, directions)`` with control points ``base + sum_i params[i] * directions[i]``."""
        if not self.is_affine:
            raise UnsupportedCaseError("the quartic G2 scaffold is not affine in its parameter")
        c, s = math.cos(self.arc.half_angle), math.sin(self.arc.half_angle)
        n = self.degree
        base = np.zeros((n + 1, 2))
        base[0] = (c, -s)
        base[n] = (c, s)
        dirs = np.zeros((self.free_param_count, n + 1, 2))
        if self.case == (2, 0):
            dirs[0, 1] = (1.0, 0.0)
        elif self.case == (3, 0):
            dirs[0, 1] = dirs[0, 2] = (1.0, 0.0)
            dirs[1, 1] = (0.0, -1.0)
            dirs[1, 2] = (0.0, 1.0)
        elif self.case == (3, 1):
            base[1] = base[0]
            base[2] = base[3]
            dirs[0, 1] = (s, c)
            dirs[0, 2] = (s, -c)
        elif self.case == (4, 1):
            base[1] = base[0]
            base[3] = base[4]
            dirs[0, 1] = (s, c)
            dirs[0, 3] = (s, -c)
            dirs[1, 2] = (1.0, 0.0)
        return base, dirs

    def g2_tangent_length(self, xi: float) -> float:
        """Tangent length d that gives unit curvature at the ends of the quartic G2 scaffold."""
        c = math.cos(self.arc.half_angle)
        rad = 0.75 * (1.0 - c * xi)
        if rad < 0.0:
            raise DomainError(f"xi={xi!r} exceeds 1/cos(phi); no real tangent length")
        return math.sqrt(rad)

    def instantiate(self, params: Sequence[float]) -> BezierCurve:
        params = np.atleast_1d(np.asarray(params, dtype=float))
        if params.shape != (self.free_param_count,):
            raise DomainError(
                f"degree {self.degree} G{self.smoothness} scaffold takes {self.free_param_count} "
                f"parameter(s) {self.param_names}, got {params.tolist()}"
            )
        if not np.all(np.isfinite(params)):
            raise DomainError("scaffold parameters must be finite")
        if self.is_affine:
            base, dirs = self.affine_form()
            return BezierCurve.from_array(base + np.tensordot(params, dirs, axes=1))
        # quartic G2: b2 = (xi, 0), tangent length pinned by unit end curvature
        xi = float(params[0])
        d = self.g2_tangent_length(xi)
        phi = self.arc.half_angle
        c, s = math.cos(phi), math.sin(phi)
        b0 = np.array([c, -s])
        b1 = b0 + d * np.array([s, c])
        pts = np.array([b0, b1, [xi, 0.0], [b1[0], -b1[1]], [c, s]])
        return BezierCurve.from_array(pts)


def instantiate(scaffold: GkScaffold, params: Sequence[float]) -> BezierCurve:
    return scaffold.instantiate(params)
