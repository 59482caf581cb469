"""Sup-norm errors, error-bound checks and the node-count sweep."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import moduli
from .activation import kernel_from, make_activation
from .geometry import Triangle
from .operators import BIVARIATE_KINDS, Kind, OperatorSpec, apply
from .targets import TABLE_TARGET, TargetFunction, from_expression, get_target

DEFAULT_RESOLUTION = 300
DEFAULT_REFINE = 2
DEFAULT_NODE_COUNTS = (5, 15, 30, 50, 75, 100)
BOUND_SLACK = 1e-10

# Published sup errors for sin(10x) + cos(5y), n1 = n2 = n, columns SX, SY, PROD, GBS.
PUBLISHED = {
    "ramp_smooth": {
        5: (0.452497, 0.156546, 0.478877, 1.5438e-15),
        15: (0.101601, 0.049354, 0.118881, 1.6701e-15),
        30: (0.048032, 0.023884, 0.057413, 1.6787e-15),
        50: (0.027995, 0.014066, 0.035111, 1.5326e-15),
        75: (0.019564, 0.009770, 0.022506, 1.7282e-15),
        100: (0.014114, 0.007005, 0.015961, 1.7734e-15),
    },
    "piecewise_linear": {
        5: (0.440815, 0.114639, 0.440815, 1.3971e-15),
        15: (0.054179, 0.013715, 0.061273, 1.5412e-15),
        30: (0.054179, 0.003450, 0.015711, 1.6072e-15),
        50: (0.004995, 0.001250, 0.005642, 1.3757e-15),
        75: (0.002218, 0.000555, 0.002423, 1.6474e-15),
        100: (0.001222, 0.000289, 0.001390, 1.7359e-15),
    },
}
# (activation, n, kind) entries of PUBLISHED that repeat a neighbouring row and look like typos
SUSPECT_ENTRIES = {("piecewise_linear", 30, Kind.SX)}


class UnsupportedKindError(ValueError):
    pass


@dataclass
class ErrorReport:
    operator_kind: Kind
    activation_name: str
    n1: int
    n2: int
    measured_sup_error: float
    theoretical_bound: Optional[float]
    grid_resolution: int
    target_name: str
    notes: list[str] = field(default_factory=list)

    @property
    def satisfied(self) -> Optional[bool]:
        if self.theoretical_bound is None:
            return None
        return self.measured_sup_error <= self.theoretical_bound + BOUND_SLACK


def sup_error(spec: OperatorSpec, F, resolution: int = DEFAULT_RESOLUTION) -> float:
    """``max |op(F) - F|`` over the triangular lattice with ``resolution`` intervals per leg."""
    pts = spec.triangle.interior_grid(resolution)
    x, y = pts[:, 0], pts[:, 1]
    return float(np.max(np.abs(apply(spec, F, x, y) - F(x, y))))


def theoretical_bound(spec: OperatorSpec, F, resolution: int = DEFAULT_RESOLUTION,
                      refine: int = DEFAULT_REFINE) -> float:
    """Right-hand side of the error estimate for ``spec.kind``.

    Moduli are estimated on the lattice with ``refine * resolution``
    intervals, which contains the error lattice.
    """
    tri = spec.triangle
    fine = refine * resolution
    if spec.kind is Kind.SX:
        rows = moduli.omega_rows(F, tri, spec.n1, fine, axis="x")
        return float(np.max(rows[::refine]))
    if spec.kind is Kind.SY:
        rows = moduli.omega_rows(F, tri, spec.n2, fine, axis="y")
        return float(np.max(rows[::refine]))
    h1, h2 = tri.a / spec.n1, tri.a / spec.n2
    if spec.kind is Kind.PROD:
        return moduli.omega_bivariate(F, tri, h1, h2, fine).value
    if spec.kind is Kind.GBS:
        return moduli.omega_mixed(F, tri, h1, h2, fine).value
    raise UnsupportedKindError(f"no error bound for {spec.kind.value} operators")


def check_bound(spec: OperatorSpec, F, resolution: int = DEFAULT_RESOLUTION,
                refine: int = DEFAULT_REFINE) -> tuple[float, float, bool]:
    """``(measured, bound, measured <= bound + 1e-10)``."""
    if spec.kind not in BIVARIATE_KINDS:
        raise UnsupportedKindError(f"no error bound for {spec.kind.value} operators")
    bound = theoretical_bound(spec, F, resolution, refine)
    measured = sup_error(spec, F, resolution)
    return measured, bound, measured <= bound + BOUND_SLACK


@dataclass(frozen=True)
class SweepConfig:
    node_counts: tuple[int, ...] = DEFAULT_NODE_COUNTS
    activation_name: str = "ramp"
    target_name: str = TABLE_TARGET
    a: float = 1.0
    grid_resolution: int = DEFAULT_RESOLUTION
    target_expr: Optional[str] = None
    with_bounds: bool = True
    refine: int = DEFAULT_REFINE

    def __post_init__(self):
        counts = tuple(int(n) for n in self.node_counts)
        if not counts:
            raise ValueError("node_counts must be nonempty")
        if any(n < 1 for n in counts) or any(b <= a for a, b in zip(counts, counts[1:])):
            raise ValueError(f"node_counts must be positive and strictly increasing, got {counts}")
        object.__setattr__(self, "node_counts", counts)
        if self.grid_resolution < 1:
            raise ValueError("grid_resolution must be >= 1")

    def target(self) -> TargetFunction:
        if self.target_expr is not None:
            return from_expression(self.target_expr)
        return get_target(self.target_name)


def run_sweep(config: SweepConfig) -> list[ErrorReport]:
    """One report per node count and bivariate operator, ordered by ``(n, kind)``."""
    kernel = kernel_from(make_activation(config.activation_name))
    F = config.target()
    tri = Triangle(config.a)
    reports = []
    for n in config.node_counts:
        for kind in BIVARIATE_KINDS:
            spec = OperatorSpec(kind, n, n, kernel, tri)
            err = sup_error(spec, F, config.grid_resolution)
            bound = None
            if config.with_bounds:
                bound = theoretical_bound(spec, F, config.grid_resolution, config.refine)
            notes = []
            if config.target_expr is None and config.target_name == TABLE_TARGET \
                    and (config.activation_name, n, kind) in SUSPECT_ENTRIES:
                notes.append("published value for this entry repeats the row above; excluded from matching")
            reports.append(ErrorReport(kind, config.activation_name, n, n, err, bound,
                                       config.grid_resolution, F.name, notes))
    return reports
