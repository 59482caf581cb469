"""Boundary-interpolating neural network operators on the triangle.

With ``h1 = (a - y)/n1`` and nodes ``x_k = k h1`` the parametric operator
along ``x`` is

    SX F(x, y) = sum_k F(x_k, y) psi(2m n1/(a - y) (x - x_k)),

and ``SY`` is its mirror image along ``y``.  ``PROD`` is the tensor double
sum and ``GBS = SX + SY - PROD`` is the Boolean sum, which reproduces ``F``
on the whole boundary.

Because ``psi`` vanishes outside ``[-2m, 2m]`` the argument of term ``k`` is
``2m (x/h1 - k)``, so only the two nodes bracketing ``x`` contribute.  All
evaluation goes through that two-term (four-term for ``PROD``) path.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .activation import Kernel
from .geometry import Triangle


class Kind(enum.Enum):
    UNIVARIATE = "UNIVARIATE"
    SX = "SX"
    SY = "SY"
    PROD = "PROD"
    GBS = "GBS"


BIVARIATE_KINDS = (Kind.SX, Kind.SY, Kind.PROD, Kind.GBS)


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class OperatorSpec:
    kind: Kind
    n1: int
    n2: int
    kernel: Kernel = field(compare=False)
    triangle: Triangle = Triangle(1.0)

    def __post_init__(self):
        if isinstance(self.kind, str):
            object.__setattr__(self, "kind", Kind(self.kind))
        if int(self.n1) != self.n1 or int(self.n2) != self.n2 or self.n1 < 1 or self.n2 < 1:
            raise ValueError(f"node counts must be positive integers, got n1={self.n1}, n2={self.n2}")


def _bracket(t: np.ndarray, n: int) -> np.ndarray:
    # lower node index of the cell holding t; ties go to the lower cell
    return np.clip(np.floor(t), 0, n - 1).astype(np.int64)


def eval_univariate(kernel: Kernel, f, interval, n: int, x):
    """``sum_k f(x_k) psi(2m/h (x - x_k))`` on ``[a, b]`` with ``x_k = a + k h``.

    ``f`` must accept numpy arrays.
    """
    lo, hi = map(float, interval)
    if not lo < hi:
        raise ValueError(f"empty interval [{lo}, {hi}]")
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=float))
    bad = (x < lo) | (x > hi)
    if np.any(bad):
        raise DomainError(f"x={x[bad][0]!r} outside [{lo}, {hi}]")
    x0, x1, w0, w1 = _chord_weights(kernel, x - lo, hi - lo, n)
    out = f(lo + x0) * w0 + f(lo + x1) * w1
    return float(out[0]) if scalar else out


def _check_domain(tri: Triangle, x: np.ndarray, y: np.ndarray) -> None:
    inside = tri.contains(x, y)
    if not np.all(inside):
        k = int(np.argmin(inside))
        raise DomainError(f"point ({x[k]!r}, {y[k]!r}) lies outside the triangle with a={tri.a}")


def _chord_weights(kernel: Kernel, u, d, n):
    """Bracketing nodes on the chord ``[0, d]`` and their kernel weights.

    The scaled argument ``2mn/d (u - k d/n)`` is formed as ``2m (t - k)``
    with ``t = u n/d``: the two active arguments then differ by exactly
    ``2m`` and the partition of unity holds to rounding of the kernel alone.
    """
    # points admitted by the containment slack (or rounding in u n/d) are
    # pulled onto the chord
    t = np.clip(u * n / d, 0.0, n)
    i = _bracket(t, n)
    frac = t - i
    m2 = 2.0 * kernel.m
    return i / n * d, (i + 1) / n * d, kernel(m2 * frac), kernel(m2 * (frac - 1.0))


def _x_weights(spec: OperatorSpec, x, y, safe):
    """Active node abscissae and weights along the horizontal chord through ``(x, y)``."""
    d = np.where(safe, spec.triangle.a - y, 1.0)
    return _chord_weights(spec.kernel, x, d, spec.n1)


def _y_weights(spec: OperatorSpec, x, y, safe):
    d = np.where(safe, spec.triangle.a - x, 1.0)
    return _chord_weights(spec.kernel, y, d, spec.n2)


def _near_top(spec, y):
    return spec.triangle.a - y <= spec.triangle.tol


def _near_right(spec, x):
    return spec.triangle.a - x <= spec.triangle.tol


def _sx(spec, F, x, y):
    a = spec.triangle.a
    corner = _near_top(spec, y)
    x0, x1, w0, w1 = _x_weights(spec, x, y, ~corner)
    val = F(x0, y) * w0 + F(x1, y) * w1
    return np.where(corner, F(0.0, a), val)


def _sy(spec, F, x, y):
    a = spec.triangle.a
    corner = _near_right(spec, x)
    y0, y1, w0, w1 = _y_weights(spec, x, y, ~corner)
    val = F(x, y0) * w0 + F(x, y1) * w1
    return np.where(corner, F(a, 0.0), val)


def _prod(spec, F, x, y):
    a = spec.triangle.a
    top = _near_top(spec, y)
    right = _near_right(spec, x)
    safe = ~(top | right)
    x0, x1, u0, u1 = _x_weights(spec, x, y, safe)
    y0, y1, v0, v1 = _y_weights(spec, x, y, safe)
    val = (
        F(x0, y0) * u0 * v0
        + F(x1, y0) * u1 * v0
        + F(x0, y1) * u0 * v1
        + F(x1, y1) * u1 * v1
    )
    val = np.where(top, F(0.0, a), val)
    return np.where(right, F(a, 0.0), val)


def _gbs(spec, F, x, y):
    return _sx(spec, F, x, y) + _sy(spec, F, x, y) - _prod(spec, F, x, y)


_DISPATCH = {Kind.SX: _sx, Kind.SY: _sy, Kind.PROD: _prod, Kind.GBS: _gbs}


def apply(spec: OperatorSpec, F, x, y):
    """Evaluate the operator of ``spec`` applied to ``F`` at points ``(x, y)``.

    Accepts scalars or equal-shape arrays; every point must lie in the
    triangle.
    """
    if spec.kind is Kind.UNIVARIATE:
        raise ValueError("UNIVARIATE operators act on f(x); use eval_univariate")
    scalar = np.ndim(x) == 0 and np.ndim(y) == 0
    x, y = np.broadcast_arrays(np.atleast_1d(np.asarray(x, dtype=float)),
                               np.atleast_1d(np.asarray(y, dtype=float)))
    _check_domain(spec.triangle, x, y)
    out = np.asarray(_DISPATCH[spec.kind](spec, F, x, y), dtype=float)
    out = np.broadcast_to(out, x.shape)
    return float(out[0]) if scalar else np.array(out)


def _with_kind(spec, kind):
    return OperatorSpec(kind, spec.n1, spec.n2, spec.kernel, spec.triangle)


def eval_sx(spec: OperatorSpec, F, x, y):
    return apply(_with_kind(spec, Kind.SX), F, x, y)


def eval_sy(spec: OperatorSpec, F, x, y):
    return apply(_with_kind(spec, Kind.SY), F, x, y)


def eval_prod(spec: OperatorSpec, F, x, y):
    """Tensor double sum; ``F`` at the corner for ``(a, 0)`` and ``(0, a)``."""
    return apply(_with_kind(spec, Kind.PROD), F, x, y)


def eval_gbs(spec: OperatorSpec, F, x, y):
    return apply(_with_kind(spec, Kind.GBS), F, x, y)


def eval_on_grid(spec: OperatorSpec, F, points) -> np.ndarray:
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if len(pts) == 0:
        return np.empty(0)
    return apply(spec, F, pts[:, 0], pts[:, 1])


def weight_sums(spec: OperatorSpec, x, y) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Full kernel-weight sums over every node (no active-set shortcut).

    Returns ``(sum_k w_k, sum_l v_l, sum_k sum_l w_k v_l)`` where ``w`` are
    the ``x``-direction weights and ``v`` the ``y``-direction ones.  Each
    is one away from the singular corners.  Points on the top corner get
    ``nan`` in the ``x`` sum, points on the right corner in the ``y`` sum.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))[:, None]
    y = np.atleast_1d(np.asarray(y, dtype=float))[:, None]
    _check_domain(spec.triangle, x[:, 0], y[:, 0])
    a, m = spec.triangle.a, spec.kernel.m
    with np.errstate(divide="ignore", invalid="ignore"):
        dx = a - y
        k = np.arange(spec.n1 + 1)[None, :]
        w = spec.kernel(2 * m * spec.n1 / dx * (x - k / spec.n1 * dx))
        dy = a - x
        l = np.arange(spec.n2 + 1)[None, :]
        v = spec.kernel(2 * m * spec.n2 / dy * (y - l / spec.n2 * dy))
    top, right = _near_top(spec, y[:, 0]), _near_right(spec, x[:, 0])
    sw = np.where(top, np.nan, w.sum(axis=1))
    sv = np.where(right, np.nan, v.sum(axis=1))
    double = np.einsum("pk,pl->p", w, v)
    return sw, sv, np.where(top | right, np.nan, double)
