"""Target functions ``F(x, y)`` to be approximated."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict

import numpy as np

from . import exprparse


@dataclass(frozen=True)
class TargetFunction:
    name: str
    fn: Callable = field(repr=False, compare=False)
    separable: bool = False

    def __call__(self, x, y):
        scalar = np.ndim(x) == 0 and np.ndim(y) == 0
        out = self.fn(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        if scalar:
            return float(out)
        return np.broadcast_to(out, np.broadcast(np.asarray(x), np.asarray(y)).shape).astype(float)


class UnknownTargetError(KeyError):
    pass


def _sin_cos(x, y):
    return np.sin(10.0 * x) + np.cos(5.0 * y)


def _gaussian(x, y):
    return -(1.0 / 7.0) * np.exp(-(81.0 / 16.0) * ((x - 0.2) ** 2 + (y - 0.3) ** 2))


def _one(x, y):
    return np.ones(np.broadcast(x, y).shape)


_REGISTRY: Dict[str, TargetFunction] = {
    "sin_cos": TargetFunction("sin_cos", _sin_cos, separable=True),
    "gaussian": TargetFunction("gaussian", _gaussian),
    "one": TargetFunction("one", _one, separable=True),
}

TABLE_TARGET = "sin_cos"
SURFACE_TARGET = "gaussian"


def target_names() -> list[str]:
    return sorted(_REGISTRY)


def get_target(name: str) -> TargetFunction:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownTargetError(
            f"unknown target {name!r}; valid names: {', '.join(target_names())}"
        ) from None


def register_target(target: TargetFunction) -> TargetFunction:
    _REGISTRY[target.name] = target
    return target


def from_expression(source: str) -> TargetFunction:
    """Compile an expression such as ``"sin(10*x)+cos(5*y)"``."""
    tree = exprparse.parse(source)
    return TargetFunction(source, lambda x, y: exprparse.eval_expr(tree, x, y))
