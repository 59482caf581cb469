"""Acceptance criteria, one test per criterion.

Each test records a one-line PASS/FAIL verdict; the lines are printed as
they happen and repeated in the pytest terminal summary (see conftest.py).
Run with ``pytest tests/test_acceptance.py -s`` to see them inline.
"""
import math
import time

import numpy as np
import pytest

from trinn import cli
from trinn.activation import kernel_from, make_activation, verify_kernel_properties
from trinn.analysis import PUBLISHED, SUSPECT_ENTRIES, SweepConfig, check_bound, run_sweep
from trinn.exprparse import ParseError, eval_expr, parse
from trinn.geometry import Segment, Triangle
from trinn.moduli import omega_bivariate, omega_mixed, omega_univariate
from trinn.operators import BIVARIATE_KINDS, Kind, OperatorSpec, apply, weight_sums
from trinn.targets import TargetFunction, get_target

from . import oracles

ACTS = ("ramp_smooth", "ramp", "piecewise_linear")
TRI = Triangle(1.0)
SIN_COS = get_target("sin_cos")
VERDICTS: list[str] = []


def verdict(tag: str, ok: bool, detail: str) -> None:
    line = f"{tag} {'PASS' if ok else 'FAIL'}  {detail}"
    VERDICTS.append(line)
    print(line)
    assert ok, line


def spec(kind, n1, n2, act):
    return OperatorSpec(kind, n1, n2, kernel_from(make_activation(act)), TRI)


def random_points(count, seed):
    u = np.random.default_rng(seed).random((count, 2))
    flip = u.sum(axis=1) > 1
    u[flip] = 1 - u[flip]
    return u


def test_ac01_kernel_lemma():
    t0 = time.perf_counter()
    worst = 0.0
    for act in ACTS:
        for prop in verify_kernel_properties(kernel_from(make_activation(act)), 10001).values():
            worst = max(worst, prop.max_violation)
    dt = time.perf_counter() - t0
    verdict("AC1 kernel P2-P4", worst <= 1e-12 and dt < 1.0, f"max violation {worst:.3e}, {dt:.2f}s")


def test_ac02_partition_of_unity():
    pts = random_points(1000, 2024)
    t0 = time.perf_counter()
    worst = 0.0
    for act in ACTS:
        for n1 in (5, 100):
            for n2 in (5, 100):
                for s in weight_sums(spec(Kind.SX, n1, n2, act), pts[:, 0], pts[:, 1]):
                    worst = max(worst, float(np.nanmax(np.abs(s - 1))))
    dt = time.perf_counter() - t0
    verdict("AC2 partition of unity", worst <= 1e-12 and dt < 1.0, f"max violation {worst:.3e}, {dt:.2f}s")


BOUNDARY_RULES = {
    Kind.SX: (Segment.G2, Segment.G3),
    Kind.SY: (Segment.G1, Segment.G3),
    Kind.PROD: (Segment.G3,),
    Kind.GBS: (Segment.G1, Segment.G2, Segment.G3),
}


def test_ac03_boundary_interpolation():
    t0 = time.perf_counter()
    worst = 0.0
    for act in ACTS:
        for n1, n2 in ((15, 15), (7, 11), (100, 5)):
            for kind, segs in BOUNDARY_RULES.items():
                for seg in segs:
                    pts = TRI.boundary_samples(seg, 501)
                    got = apply(spec(kind, n1, n2, act), SIN_COS, pts[:, 0], pts[:, 1])
                    worst = max(worst, float(np.max(np.abs(got - SIN_COS(pts[:, 0], pts[:, 1])))))
    dt = time.perf_counter() - t0
    verdict("AC3 boundary interpolation", worst <= 1e-12 and dt < 5.0, f"max error {worst:.3e}, {dt:.2f}s")


def test_ac04_prod_agrees_with_parametric_on_legs():
    worst = 0.0
    g1 = TRI.boundary_samples(Segment.G1, 501)
    g2 = TRI.boundary_samples(Segment.G2, 501)
    for act in ACTS:
        for n1, n2 in ((15, 15), (7, 11)):
            s = spec(Kind.PROD, n1, n2, act)
            p1 = apply(s, SIN_COS, g1[:, 0], g1[:, 1])
            p2 = apply(s, SIN_COS, g2[:, 0], g2[:, 1])
            sx = apply(spec(Kind.SX, n1, n2, act), SIN_COS, g1[:, 0], g1[:, 1])
            sy = apply(spec(Kind.SY, n1, n2, act), SIN_COS, g2[:, 0], g2[:, 1])
            worst = max(worst, float(np.max(np.abs(p1 - sx))), float(np.max(np.abs(p2 - sy))))
    verdict("AC4 PROD = SX on G1, PROD = SY on G2", worst <= 1e-13, f"max difference {worst:.3e}")


SEPARABLE = (
    SIN_COS,
    TargetFunction("exp_cubic", lambda x, y: np.exp(x) - 2 * y**3 + 0.5, separable=True),
)


@pytest.mark.parametrize("act", ACTS)
def test_ac05_gbs_separable_exact(act):
    t0 = time.perf_counter()
    pts = TRI.interior_grid(300)
    x, y = pts[:, 0], pts[:, 1]
    worst = 0.0
    for F in SEPARABLE:
        fv = F(x, y)
        for n in (5, 15, 30, 50, 75, 100):
            worst = max(worst, float(np.max(np.abs(apply(spec(Kind.GBS, n, n, act), F, x, y) - fv))))
    dt = time.perf_counter() - t0
    verdict(f"AC5 GBS separable exactness [{act}]", worst <= 1e-12 and dt < 30.0,
            f"max error {worst:.3e}, {dt:.2f}s")


@pytest.mark.parametrize("act", ["piecewise_linear", "ramp_smooth"])
def test_ac06_table_reproduction(act):
    reps = run_sweep(SweepConfig(node_counts=(50, 75, 100), activation_name=act,
                                 grid_resolution=300, with_bounds=False))
    worst = 1.0
    for r in reps:
        if r.operator_kind is Kind.GBS or (act, r.n1, r.operator_kind) in SUSPECT_ENTRIES:
            continue
        want = PUBLISHED[act][r.n1][BIVARIATE_KINDS.index(r.operator_kind)]
        ratio = r.measured_sup_error / want
        worst = max(worst, ratio, 1 / ratio)
    verdict(f"AC6 table columns SX,SY,PROD at n=50,75,100 [{act}]", worst <= 2.0,
            f"worst ratio to reference {worst:.3f}")


def test_ac07_error_bounds():
    t0 = time.perf_counter()
    failures = []
    count = 0
    for act in ACTS:
        for target in ("sin_cos", "gaussian"):
            F = get_target(target)
            for n in (5, 15, 30):
                for kind in BIVARIATE_KINDS:
                    measured, bound, ok = check_bound(spec(kind, n, n, act), F, 300, refine=2)
                    count += 1
                    if not ok:
                        failures.append((act, target, n, kind.value, measured, bound))
    dt = time.perf_counter() - t0
    verdict("AC7 error bounds", not failures and dt < 60.0,
            f"{count - len(failures)}/{count} satisfied, {dt:.2f}s" + (f", first failure {failures[0]}" if failures else ""))


def sc(x, y):
    return math.sin(10 * x) + math.cos(5 * y)


def test_ac08_oracle_equivalence():
    refs = {
        Kind.SX: lambda act, n1, n2, x, y: oracles.sx_full(act, sc, 1, n1, x, y),
        Kind.SY: lambda act, n1, n2, x, y: oracles.sy_full(act, sc, 1, n2, x, y),
        Kind.PROD: lambda act, n1, n2, x, y: oracles.prod_full(act, sc, 1, n1, n2, x, y),
        Kind.GBS: lambda act, n1, n2, x, y: oracles.gbs_full(act, sc, 1, n1, n2, x, y),
    }
    rng = np.random.default_rng(8)
    pts = random_points(200, 8)
    worst = 0.0
    for act in ACTS:
        for kind, ref in refs.items():
            n1s = rng.integers(1, 9, size=len(pts))
            n2s = rng.integers(1, 9, size=len(pts))
            for (x, y), n1, n2 in zip(pts, n1s, n2s):
                got = apply(spec(kind, int(n1), int(n2), act), SIN_COS, x, y)
                worst = max(worst, abs(got - ref(act, int(n1), int(n2), x, y)))
    verdict("AC8 fast path = full sum", worst <= 1e-13, f"max difference {worst:.3e}")


def test_ac09_moduli():
    const = max(
        omega_univariate(lambda x: 0 * x + 3.0, (0, 1), 0.3).value,
        omega_bivariate(lambda x, y: 0 * x + 3.0, TRI, 0.2, 0.1, 200).value,
        omega_mixed(lambda x, y: 0 * x + 3.0, TRI, 0.2, 0.1, 200).value,
    )
    # delta a multiple of the lattice spacing: 0.25 on 2000 intervals of [0, 1]
    ident = abs(omega_univariate(lambda x: x, (0, 1), 0.25, 2000).value - 0.25)
    sep = max(omega_mixed(F, TRI, d, d, 300).value for F in SEPARABLE for d in (0.05, 0.2))
    prod = abs(omega_mixed(lambda x, y: x * y, TRI, 0.1, 0.1, 400).value - 0.01)
    ok = const == 0.0 and ident <= 1e-15 and sep <= 1e-12 and prod <= 1e-6
    verdict("AC9 moduli", ok, f"const {const:.1e}, identity {ident:.1e}, separable mixed {sep:.1e}, xy {prod:.1e}")


def test_ac10_parser():
    table = eval_expr(parse("sin(10*x)+cos(5*y)"), 0.0, 0.0)
    surface = eval_expr(parse("-(1/7)*exp(-(81/16)*((x-0.2)^2+(y-0.3)^2))"), 0.2, 0.3)
    bad = ["x+", "(x", "x)", "sin x", "2 $ 3", "", "3x", "tan(x)", "(" * 3000 + "x" + ")" * 3000, "\x00"]
    positioned = 0
    for src in bad:
        try:
            parse(src)
        except ParseError as err:
            positioned += isinstance(err.position, int) and 0 <= err.position <= len(src)
    ok = abs(table - 1.0) <= 1e-15 and abs(surface + 1 / 7) <= 1e-15 and positioned == len(bad)
    verdict("AC10 parser", ok, f"table target {table!r}, surface target {surface!r}, "
                               f"{positioned}/{len(bad)} malformed inputs gave positioned errors")


def test_ac11_cli_determinism(tmp_path, capsys):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    codes = [cli.main(["table", "--node-counts", "5,15,30", "--out", str(p)]) for p in paths]
    identical = paths[0].read_bytes() == paths[1].read_bytes()
    check_code = cli.main(["check"])
    capsys.readouterr()
    ok = codes == [0, 0] and identical and check_code == 0
    verdict("AC11 CLI determinism", ok, f"table exit codes {codes}, byte-identical {identical}, check exit {check_code}")
