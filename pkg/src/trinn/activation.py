"""Sigmoidal activations with exact saturation and the bump kernels built from them.

An activation ``xi`` belongs to the class A(m) when it is nondecreasing and
saturates exactly: ``xi(x) = 0`` for ``x <= -m`` and ``xi(x) = 1`` for
``x >= m``.  The kernel is the difference of two shifted copies,

    psi(x) = xi(x + m) - xi(x - m),

a bump supported on ``[-2m, 2m]`` whose translates by ``2m`` sum to one.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Dict

import numpy as np

ArrayFn = Callable[[np.ndarray], np.ndarray]

P4_TOL = 1e-12
MONOTONE_TOL = 1e-14


@dataclass(frozen=True)
class Activation:
    name: str
    m: float
    fn: ArrayFn = field(repr=False, compare=False)

    def __call__(self, x):
        return self.fn(np.asarray(x, dtype=float))

    def with_m(self, m: float) -> "Activation":
        """Copy with a different saturation parameter, no validation.

        Only useful as a negative control: a wrong ``m`` breaks the kernel
        identities.
        """
        return replace(self, m=float(m))


@dataclass(frozen=True)
class Kernel:
    activation: Activation

    @property
    def m(self) -> float:
        return self.activation.m

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        m = self.activation.m
        return self.activation(x + m) - self.activation(x - m)


def _ramp_smooth(x):
    # quintic smoothstep on [-1/2, 1/2]
    u = np.clip(x + 0.5, 0.0, 1.0)
    return u * u * u * (10.0 + u * (-15.0 + 6.0 * u))


def _ramp(x):
    return np.clip(x + 0.5, 0.0, 1.0)


def _piecewise_linear(x):
    return np.clip(0.5 * x + 0.5, 0.0, 1.0)


_REGISTRY: Dict[str, Activation] = {}


class UnknownActivationError(KeyError):
    pass


class InvalidActivationError(ValueError):
    pass


def register_activation(name: str, fn: ArrayFn, m: float) -> Activation:
    """Add a member of A(m) to the registry.

    Saturation is checked numerically at ``+-m`` and ``+-(m + 1)`` and
    monotonicity on a sample grid over ``[-(m + 1), m + 1]``.
    """
    if not m > 0:
        raise InvalidActivationError(f"m must be positive, got {m!r}")
    act = Activation(name, float(m), fn)
    probes = np.array([-m - 1.0, -m, m, m + 1.0])
    vals = act(probes)
    if not (vals[0] == 0.0 and vals[1] == 0.0 and vals[2] == 1.0 and vals[3] == 1.0):
        raise InvalidActivationError(
            f"activation {name!r} does not saturate at +-{m}: values {vals.tolist()}"
        )
    xs = np.linspace(-m - 1.0, m + 1.0, 2001)
    if np.any(np.diff(act(xs)) < -MONOTONE_TOL):
        raise InvalidActivationError(f"activation {name!r} is not nondecreasing")
    _REGISTRY[name] = act
    return act


def activation_names() -> list[str]:
    return sorted(_REGISTRY)


def make_activation(name: str) -> Activation:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownActivationError(
            f"unknown activation {name!r}; valid names: {', '.join(activation_names())}"
        ) from None


def kernel_from(activation: Activation) -> Kernel:
    return Kernel(activation)


register_activation("ramp_smooth", _ramp_smooth, 0.5)
register_activation("ramp", _ramp, 0.5)
register_activation("piecewise_linear", _piecewise_linear, 1.0)


@dataclass
class PropertyResult:
    name: str
    passed: bool
    max_violation: float


def verify_kernel_properties(kernel: Kernel, grid_size: int = 1000) -> dict[str, PropertyResult]:
    """Check the kernel lemma properties on uniform grids.

    P2: nondecreasing on ``[-2m - 1, 0]``, nonincreasing on ``[0, 2m + 1]``.
    P3: exactly zero for ``2m <= |x| <= 2m + 1``.
    P4: ``psi(x) + psi(x - 2m) = 1`` on ``[0, 2m]``.

    Violations are reported, never raised.  Global monotonicity of
    ``psi`` (sometimes listed as P1) contradicts P2 and P3 and is not checked.
    """
    if grid_size < 2:
        raise ValueError("grid_size must be >= 2")
    m = kernel.m
    out = {}

    left = kernel(np.linspace(-2 * m - 1.0, 0.0, grid_size))
    right = kernel(np.linspace(0.0, 2 * m + 1.0, grid_size))
    v2 = max(0.0, float(np.max(-np.diff(left))), float(np.max(np.diff(right))))
    out["P2"] = PropertyResult("P2", v2 <= MONOTONE_TOL, v2)

    tail = np.linspace(2 * m, 2 * m + 1.0, grid_size)
    v3 = float(max(np.max(np.abs(kernel(tail))), np.max(np.abs(kernel(-tail)))))
    out["P3"] = PropertyResult("P3", v3 == 0.0, v3)

    xs = np.linspace(0.0, 2 * m, grid_size)
    v4 = float(np.max(np.abs(kernel(xs) + kernel(xs - 2 * m) - 1.0)))
    out["P4"] = PropertyResult("P4", v4 <= P4_TOL, v4)
    return out
