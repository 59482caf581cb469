"""Lattice estimates of moduli of continuity.

Every estimate is a maximum over pairs of points of a uniform lattice with
spacing ``s = length / resolution``; admissible offsets are the lattice
multiples ``j*s <= delta``.  The result is therefore a lower bound of the
true supremum which increases towards it as the resolution is refined
(the lattice at ``R`` is a sublattice of the one at ``2R``) and is
nondecreasing in the deltas.

The searches are exhaustive over that lattice; sliding-window max/min
filters replace the explicit loop over offsets where the pair structure
allows it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.ndimage import maximum_filter, maximum_filter1d, minimum_filter, minimum_filter1d

from .geometry import Triangle

DEFAULT_RES_1D = 2000
DEFAULT_RES_2D = 400
_STEP_EPS = 1e-9


@dataclass(frozen=True)
class ModulusEstimate:
    value: float
    delta1: float
    delta2: float
    sample_resolution: int


def lattice_steps(delta: float, spacing: float) -> int:
    """Largest ``j`` with ``j*spacing <= delta`` (rounding-tolerant)."""
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    return int(math.floor(delta / spacing + _STEP_EPS))


def _window_sup(values: np.ndarray, valid: np.ndarray, half: tuple[int, ...]) -> float:
    """``max |v(p+o) - v(p)|`` over valid ``p, p+o`` with ``|o_i| <= half_i``."""
    if not np.any(valid) or all(h == 0 for h in half):
        return 0.0
    size = tuple(2 * h + 1 for h in half)
    lo = np.where(valid, values, np.inf)
    hi = np.where(valid, values, -np.inf)
    if values.ndim == 1:
        mx = maximum_filter1d(hi, size[0], mode="constant", cval=-np.inf)
        mn = minimum_filter1d(lo, size[0], mode="constant", cval=np.inf)
    else:
        mx = maximum_filter(hi, size=size, mode="constant", cval=-np.inf)
        mn = minimum_filter(lo, size=size, mode="constant", cval=np.inf)
    v = values[valid]
    return float(max(np.max(mx[valid] - v), np.max(v - mn[valid]), 0.0))


def omega_univariate(f, interval, delta: float, resolution: int = DEFAULT_RES_1D) -> ModulusEstimate:
    """``sup |f(x+h) - f(x)|`` over ``|h| <= delta`` on ``resolution+1`` points."""
    lo, hi = map(float, interval)
    if not lo < hi:
        raise ValueError(f"empty interval [{lo}, {hi}]")
    xs = lo + (hi - lo) * np.arange(resolution + 1) / resolution
    vals = np.asarray(f(xs), dtype=float) * np.ones_like(xs)
    p = min(lattice_steps(delta, (hi - lo) / resolution), resolution)
    value = _window_sup(vals, np.ones(len(xs), dtype=bool), (p,))
    return ModulusEstimate(value, float(delta), 0.0, resolution)


def _triangle_lattice(F, triangle: Triangle, resolution: int):
    """Values ``V[i, j] = F(i s, j s)``; entries with ``i + j > R`` are masked."""
    r = resolution
    idx = np.arange(r + 1)
    ii, jj = np.meshgrid(idx, idx, indexing="ij")
    valid = ii + jj <= r
    s = triangle.a / r
    vals = np.zeros((r + 1, r + 1))
    vals[valid] = F(ii[valid] * s, jj[valid] * s)
    return vals, valid


def omega_bivariate(F, triangle: Triangle, delta1: float, delta2: float,
                    resolution: int = DEFAULT_RES_2D) -> ModulusEstimate:
    """``sup |F(x+h, y+k) - F(x, y)|``, ``|h| <= delta1``, ``|k| <= delta2``, both points in the triangle."""
    vals, valid = _triangle_lattice(F, triangle, resolution)
    s = triangle.a / resolution
    p = min(lattice_steps(delta1, s), resolution)
    q = min(lattice_steps(delta2, s), resolution)
    value = _window_sup(vals, valid, (p, q))
    return ModulusEstimate(value, float(delta1), float(delta2), resolution)


def omega_mixed(F, triangle: Triangle, delta1: float, delta2: float,
                resolution: int = DEFAULT_RES_2D) -> ModulusEstimate:
    """Sup of ``|F(x+h,y) + F(x,y+k) - F(x+h,y+k) - F(x,y)|`` over lattice rectangles.

    All four corners must lie in the triangle.  With ``D_h(x, y) =
    F(x+h, y) - F(x, y)`` the mixed difference is ``D_h(x,y) - D_h(x,y+k)``,
    so for each ``h`` a window filter along ``y`` covers every ``k``.
    """
    vals, valid = _triangle_lattice(F, triangle, resolution)
    s = triangle.a / resolution
    p = min(lattice_steps(delta1, s), resolution)
    q = min(lattice_steps(delta2, s), resolution)
    best = 0.0
    if q > 0:
        for step in range(1, p + 1):
            diff = vals[step:, :] - vals[:-step, :]
            ok = valid[step:, :]
            if not np.any(ok):
                break
            best = max(best, _rows_window_sup(diff, ok, q))
    return ModulusEstimate(best, float(delta1), float(delta2), resolution)


def _rows_window_sup(values: np.ndarray, valid: np.ndarray, half: int) -> float:
    size = 2 * half + 1
    lo = np.where(valid, values, np.inf)
    hi = np.where(valid, values, -np.inf)
    mx = maximum_filter1d(hi, size, axis=1, mode="constant", cval=-np.inf)
    mn = minimum_filter1d(lo, size, axis=1, mode="constant", cval=np.inf)
    v = values[valid]
    return float(max(np.max(mx[valid] - v), np.max(v - mn[valid]), 0.0))


def omega_rows(F, triangle: Triangle, n: int, resolution: int, axis: str = "x") -> np.ndarray:
    """Per-chord moduli ``omega(F(., y), (a - y)/n)`` for every lattice row.

    Entry ``j`` is the estimate for the chord ``y = j*a/R`` (``axis="x"``)
    or, with ``axis="y"``, for ``omega(F(x, .), (a - x)/n)`` on ``x = j*a/R``.
    """
    vals, valid = _triangle_lattice(F, triangle, resolution)
    if axis == "y":
        vals, valid = vals.T, valid.T
    elif axis != "x":
        raise ValueError("axis must be 'x' or 'y'")
    r = resolution
    # chord j has r - j intervals, so its offset limit is (r - j)/n lattice steps
    limit = np.floor((r - np.arange(r + 1)) / n + _STEP_EPS).astype(int)
    out = np.zeros(r + 1)
    for step in range(1, int(limit.max(initial=0)) + 1):
        diff = np.abs(vals[step:, :] - vals[:-step, :])
        diff = np.where(valid[step:, :], diff, 0.0)
        rowmax = diff.max(axis=0)
        active = limit >= step
        out[active] = np.maximum(out[active], rowmax[active])
    return out
