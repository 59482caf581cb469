"""Sup error against node count for every operator, with the empirical rate.

    python3 scripts/convergence_study.py --target gaussian --activation ramp_smooth

The rate column is the slope of log(error) against log(n) between
consecutive node counts, so -2 means second-order convergence.
"""
import argparse
import math

from trinn.analysis import SweepConfig, run_sweep
from trinn.operators import BIVARIATE_KINDS


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--activation", default="ramp")
    ap.add_argument("--target", default="gaussian")
    ap.add_argument("--resolution", type=int, default=300)
    ap.add_argument("--node-counts", default="4,8,16,32,64,128")
    args = ap.parse_args()

    counts = tuple(int(t) for t in args.node_counts.split(","))
    reports = run_sweep(SweepConfig(node_counts=counts, activation_name=args.activation,
                                    target_name=args.target, grid_resolution=args.resolution,
                                    with_bounds=False))
    for kind in BIVARIATE_KINDS:
        errs = [r.measured_sup_error for r in reports if r.operator_kind is kind]
        print(f"\n{kind.value}")
        prev = None
        for n, e in zip(counts, errs):
            rate = "" if prev is None or prev[1] == 0 or e == 0 else \
                f"{math.log(e / prev[1]) / math.log(n / prev[0]):7.3f}"
            print(f"{n:>5} {e:12.4e} {rate}")
            prev = (n, e)


if __name__ == "__main__":
    main()
