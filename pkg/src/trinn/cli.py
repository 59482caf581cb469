"""Command line entry point.

Subcommands::

    trinn eval    --x 0.3 --y 0.2            operator values and errors at a point
    trinn table                              sup-error table over node counts
    trinn surface --which GBS                CSV grid for external surface plots
    trinn check                              batch of kernel/interpolation/bound checks

Exit codes: 0 success, 1 property failure, 2 configuration error,
3 point outside the triangle, 4 output not writable.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import analysis, exprparse
from .activation import (
    InvalidActivationError,
    UnknownActivationError,
    activation_names,
    kernel_from,
    make_activation,
    verify_kernel_properties,
)
from .geometry import Segment, Triangle
from .operators import BIVARIATE_KINDS, DomainError, Kind, OperatorSpec, apply, weight_sums
from .targets import SURFACE_TARGET, TABLE_TARGET, UnknownTargetError, from_expression, get_target

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3, 4


class ConfigError(ValueError):
    pass


def fmt(v) -> str:
    """17 significant digits, lowercase scientific; lossless for doubles."""
    v = float(v)
    if np.isnan(v):
        return "nan"
    if np.isinf(v):
        return "inf" if v > 0 else "-inf"
    return format(v, ".16e")


def _json(obj) -> str:
    # hand-rolled so float formatting is fixed and byte-stable
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt(obj) if np.isfinite(obj) else f'"{fmt(obj)}"'
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{_json(str(k))}: {_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _csv(header: Sequence[str], rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt(v) if isinstance(v, (float, np.floating)) else str(v) for v in row))
    return "\n".join(lines) + "\n"


@dataclass
class RunConfig:
    command: str
    activation_name: str = "ramp"
    a: float = 1.0
    n1: int = 15
    n2: int = 15
    target_name: Optional[str] = None
    target_expr: Optional[str] = None
    resolution: Optional[int] = None
    out: Optional[str] = None
    fmt: str = "json"
    m_override: Optional[float] = None

    def kernel(self):
        act = make_activation(self.activation_name)
        if self.m_override is not None:
            act = act.with_m(self.m_override)
        return kernel_from(act)

    def target(self, default: str):
        if self.target_expr is not None:
            return from_expression(self.target_expr)
        return get_target(self.target_name or default)

    def triangle(self) -> Triangle:
        return Triangle(self.a)


def _write(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _kinds(text: str) -> list[Kind]:
    try:
        kinds = [Kind(k.strip().upper()) for k in text.split(",") if k.strip()]
    except ValueError as exc:
        raise ConfigError(f"unknown operator in {text!r}: {exc}") from None
    if not kinds or Kind.UNIVARIATE in kinds:
        raise ConfigError("operators must be a nonempty subset of SX,SY,PROD,GBS")
    return kinds


def cmd_eval(cfg: RunConfig, x: float, y: float, kinds: Sequence[Kind]) -> str:
    F = cfg.target(TABLE_TARGET)
    kernel = cfg.kernel()
    tri = cfg.triangle()
    if not tri.contains(x, y):
        raise DomainError(f"point ({x!r}, {y!r}) lies outside the triangle with a={tri.a}")
    fx = F(x, y)
    record = {"x": x, "y": y, "target": F.name, "activation": cfg.activation_name,
              "n1": cfg.n1, "n2": cfg.n2, "F": fx}
    for kind in kinds:
        val = apply(OperatorSpec(kind, cfg.n1, cfg.n2, kernel, tri), F, x, y)
        record[kind.value] = val
        record[f"{kind.value}_error"] = abs(val - fx)
    if cfg.fmt == "json":
        return _json(record) + "\n"
    header = ["x", "y", "F"] + [c for k in kinds for c in (k.value, f"{k.value}_error")]
    return _csv(header, [[record[h] for h in header]])


def cmd_table(cfg: RunConfig, node_counts: Sequence[int], with_bounds: bool = False) -> str:
    sweep = analysis.SweepConfig(
        node_counts=tuple(node_counts),
        activation_name=cfg.activation_name,
        target_name=cfg.target_name or TABLE_TARGET,
        target_expr=cfg.target_expr,
        a=cfg.a,
        grid_resolution=cfg.resolution or analysis.DEFAULT_RESOLUTION,
        with_bounds=with_bounds,
    )
    reports = analysis.run_sweep(sweep)
    by_n: dict[int, dict[Kind, analysis.ErrorReport]] = {}
    for r in reports:
        by_n.setdefault(r.n1, {})[r.operator_kind] = r
    cols = [k.value for k in BIVARIATE_KINDS]
    notes = [f"n={r.n1} {r.operator_kind.value}: {note}" for r in reports for note in r.notes]
    for note in notes:
        print(f"note: {note}", file=sys.stderr)
    if cfg.fmt == "csv":
        header = ["n"] + cols + ([f"{c}_bound" for c in cols] if with_bounds else [])
        rows = []
        for n, row in by_n.items():
            vals = [row[k].measured_sup_error for k in BIVARIATE_KINDS]
            if with_bounds:
                vals += [row[k].theoretical_bound for k in BIVARIATE_KINDS]
            rows.append([n] + vals)
        return _csv(header, rows)
    doc = {
        "activation": cfg.activation_name,
        "target": reports[0].target_name,
        "a": float(cfg.a),
        "resolution": sweep.grid_resolution,
        "columns": cols,
        "rows": [
            {"n": n, **{k.value: row[k].measured_sup_error for k in BIVARIATE_KINDS},
             **({f"{k.value}_bound": row[k].theoretical_bound for k in BIVARIATE_KINDS} if with_bounds else {})}
            for n, row in by_n.items()
        ],
        "notes": notes,
    }
    return _json(doc) + "\n"


SURFACE_CHOICES = ("target",) + tuple(k.value for k in BIVARIATE_KINDS)


def cmd_surface(cfg: RunConfig, which: str) -> str:
    tri = cfg.triangle()
    F = cfg.target(SURFACE_TARGET)
    pts = tri.interior_grid(cfg.resolution or 60)
    x, y = pts[:, 0], pts[:, 1]
    if which == "target":
        vals = F(x, y)
    else:
        vals = apply(OperatorSpec(Kind(which), cfg.n1, cfg.n2, cfg.kernel(), tri), F, x, y)
    if cfg.fmt == "json":
        return _json({"which": which, "target": F.name, "columns": ["x", "y", "value"],
                      "rows": [[float(a), float(b), float(c)] for a, b, c in zip(x, y, vals)]}) + "\n"
    return _csv(["x", "y", "value"], zip(x.tolist(), y.tolist(), vals.tolist()))


def _check(name, violation, tol):
    violation = float(violation)
    ok = violation <= tol and not np.isnan(violation)
    return {"name": name, "passed": bool(ok), "max_violation": violation, "tolerance": tol}


def run_checks(cfg: RunConfig, samples: int = 501, random_points: int = 1000) -> dict:
    """Kernel lemma, partition of unity, interpolation, agreement and bound checks."""
    kernel = cfg.kernel()
    tri = cfg.triangle()
    F = cfg.target(TABLE_TARGET)
    checks = []

    for prop in verify_kernel_properties(kernel, 10001).values():
        tol = {"P2": 1e-14, "P3": 0.0, "P4": 1e-12}[prop.name]
        checks.append(_check(f"kernel {prop.name}", prop.max_violation, tol))

    rng = np.random.default_rng(0)
    u = rng.random((random_points, 2))
    flip = u.sum(axis=1) > 1
    u[flip] = 1 - u[flip]
    px, py = u[:, 0] * tri.a, u[:, 1] * tri.a
    spec = OperatorSpec(Kind.SX, cfg.n1, cfg.n2, kernel, tri)
    sw, sv, sd = weight_sums(spec, px, py)
    checks.append(_check("partition of unity x", np.nanmax(np.abs(sw - 1)), 1e-12))
    checks.append(_check("partition of unity y", np.nanmax(np.abs(sv - 1)), 1e-12))
    checks.append(_check("partition of unity double", np.nanmax(np.abs(sd - 1)), 1e-12))

    segments = {
        Kind.SX: (Segment.G2, Segment.G3),
        Kind.SY: (Segment.G1, Segment.G3),
        Kind.PROD: (Segment.G3,),
        Kind.GBS: (Segment.G1, Segment.G2, Segment.G3),
    }
    for kind, segs in segments.items():
        op = OperatorSpec(kind, cfg.n1, cfg.n2, kernel, tri)
        for seg in segs:
            pts = tri.boundary_samples(seg, samples)
            fv = F(pts[:, 0], pts[:, 1])
            err = np.abs(apply(op, F, pts[:, 0], pts[:, 1]) - fv) / (1 + np.abs(fv))
            checks.append(_check(f"interpolation {kind.value} on {seg.value}", err.max(), 1e-12))

    for kind, other, seg in ((Kind.PROD, Kind.SX, Segment.G1), (Kind.PROD, Kind.SY, Segment.G2)):
        pts = tri.boundary_samples(seg, samples)
        lhs = apply(OperatorSpec(kind, cfg.n1, cfg.n2, kernel, tri), F, pts[:, 0], pts[:, 1])
        rhs = apply(OperatorSpec(other, cfg.n1, cfg.n2, kernel, tri), F, pts[:, 0], pts[:, 1])
        checks.append(_check(f"agreement {kind.value}={other.value} on {seg.value}",
                             np.max(np.abs(lhs - rhs)), 1e-13))

    res = cfg.resolution or analysis.DEFAULT_RESOLUTION
    for kind in BIVARIATE_KINDS:
        measured, bound, _ = analysis.check_bound(OperatorSpec(kind, cfg.n1, cfg.n2, kernel, tri), F, res)
        entry = _check(f"error bound {kind.value}", max(0.0, measured - bound), analysis.BOUND_SLACK)
        entry.update(measured=measured, bound=bound)
        checks.append(entry)

    return {
        "activation": cfg.activation_name,
        "m": kernel.m,
        "target": F.name,
        "a": float(tri.a),
        "n1": cfg.n1,
        "n2": cfg.n2,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }


def cmd_check(cfg: RunConfig) -> tuple[str, int]:
    report = run_checks(cfg)
    code = EXIT_OK if report["passed"] else EXIT_FAIL
    if cfg.fmt == "csv":
        rows = [[c["name"], "pass" if c["passed"] else "FAIL", c["max_violation"], c["tolerance"]]
                for c in report["checks"]]
        return _csv(["check", "status", "max_violation", "tolerance"], rows), code
    return _json(report) + "\n", code


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--activation", default="ramp",
                        help=f"one of {', '.join(activation_names())} (default: ramp)")
    common.add_argument("--a", type=float, default=1.0, help="leg length of the triangle")
    common.add_argument("--n1", type=int, default=15)
    common.add_argument("--n2", type=int, default=None, help="defaults to --n1")
    tgt = common.add_mutually_exclusive_group()
    tgt.add_argument("--target-name", default=None)
    tgt.add_argument("--target-expr", default=None, help='e.g. "sin(10*x)+cos(5*y)"')
    common.add_argument("--resolution", type=int, default=None, help="lattice intervals per leg")
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--out", default=None, help="output path (default: stdout)")

    parser = argparse.ArgumentParser(prog="trinn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate operators at one point")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--operators", default="SX,SY,PROD,GBS")

    p = sub.add_parser("table", parents=[common], help="sup-norm error table")
    p.add_argument("--node-counts", type=_int_list, default=list(analysis.DEFAULT_NODE_COUNTS))
    p.add_argument("--bounds", action="store_true", help="append theoretical bound columns")

    p = sub.add_parser("surface", parents=[common], help="export a surface grid")
    p.add_argument("--which", choices=SURFACE_CHOICES, default="target")

    p = sub.add_parser("check", parents=[common], help="verify kernel and operator properties")
    p.add_argument("--m", type=float, default=None, dest="m_override",
                   help="override the saturation parameter without validation (negative control)")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    default_fmt = "csv" if args.command in ("table", "surface") else "json"
    cfg = RunConfig(
        command=args.command,
        activation_name=args.activation,
        a=args.a,
        n1=args.n1,
        n2=args.n2 if args.n2 is not None else args.n1,
        target_name=args.target_name,
        target_expr=args.target_expr,
        resolution=args.resolution,
        out=args.out,
        fmt=args.format or default_fmt,
        m_override=getattr(args, "m_override", None),
    )
    code = EXIT_OK
    try:
        if cfg.a <= 0 or cfg.n1 < 1 or cfg.n2 < 1 or (cfg.resolution is not None and cfg.resolution < 1):
            raise ConfigError("--a, --n1, --n2 and --resolution must be positive")
        if cfg.m_override is not None and not cfg.m_override > 0:
            raise ConfigError("--m must be positive")
        if args.command == "eval":
            text = cmd_eval(cfg, args.x, args.y, _kinds(args.operators))
        elif args.command == "table":
            text = cmd_table(cfg, args.node_counts, args.bounds)
        elif args.command == "surface":
            text = cmd_surface(cfg, args.which)
        else:
            text, code = cmd_check(cfg)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ConfigError, UnknownActivationError, InvalidActivationError, UnknownTargetError,
            exprparse.ParseError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_CONFIG
    except (ZeroDivisionError, exprparse.EvalDomainError) as exc:
        print(f"error: target evaluation failed: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        _write(text, cfg.out)
    except OSError as exc:
        print(f"error: cannot write {cfg.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
