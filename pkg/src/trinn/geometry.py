"""The standard right triangle, its edges and sampling grids."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

CONTAIN_RTOL = 1e-12


class Segment(enum.Enum):
    """Boundary edges: G1 is ``y = 0``, G2 is ``x = 0``, G3 is ``x + y = a``."""

    G1 = "G1"
    G2 = "G2"
    G3 = "G3"


@dataclass(frozen=True)
class Triangle:
    a: float = 1.0

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"leg length must be positive, got {self.a!r}")

    @property
    def tol(self) -> float:
        return CONTAIN_RTOL * self.a

    def contains(self, x, y):
        """Membership with an absolute slack of ``1e-12 * a``; vectorised."""
        t = self.tol
        res = (np.asarray(x) >= -t) & (np.asarray(y) >= -t) & (np.asarray(x) + np.asarray(y) <= self.a + t)
        return bool(res) if np.ndim(res) == 0 else res

    def on_segment(self, seg: Segment, x, y):
        t = self.tol
        if seg is Segment.G1:
            res = np.abs(np.asarray(y)) <= t
        elif seg is Segment.G2:
            res = np.abs(np.asarray(x)) <= t
        else:
            res = np.abs(np.asarray(x) + np.asarray(y) - self.a) <= t
        res = res & self.contains(x, y)
        return bool(res) if np.ndim(res) == 0 else res

    def boundary_samples(self, seg: Segment, count: int) -> np.ndarray:
        """``count`` evenly spaced points along an edge, endpoints included.

        G1 runs (0,0)->(a,0), G2 runs (0,0)->(0,a), G3 runs (a,0)->(0,a).
        Returns an array of shape ``(count, 2)``.
        """
        if count < 2:
            raise ValueError("count must be >= 2")
        s = np.linspace(0.0, self.a, count)
        zero = np.zeros(count)
        if seg is Segment.G1:
            return np.column_stack([s, zero])
        if seg is Segment.G2:
            return np.column_stack([zero, s])
        # x + y == a in floating point only up to rounding; fix y from x
        return np.column_stack([self.a - s, s])

    def interior_grid(self, resolution: int) -> np.ndarray:
        """All ``(i*a/N, j*a/N)`` with ``i, j >= 0`` and ``i + j <= N``.

        Ordered lexicographically by ``(i, j)``; shape ``((N+1)(N+2)/2, 2)``.
        """
        if resolution < 1:
            raise ValueError("resolution must be >= 1")
        n = resolution
        i, j = lattice_indices(n)
        return np.column_stack([i * self.a / n, j * self.a / n])


def lattice_indices(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Index pairs ``(i, j)`` with ``i + j <= n`` in lexicographic order."""
    ii, jj = np.meshgrid(np.arange(n + 1), np.arange(n + 1), indexing="ij")
    keep = ii + jj <= n
    return ii[keep], jj[keep]


@dataclass(frozen=True)
class NodeGrid:
    """Chord nodes through a point: ``x_k = k (a-y)/n1`` and ``y_l = l (a-x)/n2``."""

    triangle: Triangle
    n1: int
    n2: int

    def x_nodes(self, y: float) -> np.ndarray:
        return np.arange(self.n1 + 1) / self.n1 * (self.triangle.a - y)

    def y_nodes(self, x: float) -> np.ndarray:
        return np.arange(self.n2 + 1) / self.n2 * (self.triangle.a - x)
