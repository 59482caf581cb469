"""Recompute the reference sup-error tables and print measured values next to them.

    python3 scripts/reproduce_tables.py [--resolution 300] [--bounds]
"""
import argparse

from trinn.analysis import PUBLISHED, SweepConfig, run_sweep
from trinn.operators import BIVARIATE_KINDS


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--resolution", type=int, default=300)
    ap.add_argument("--bounds", action="store_true", help="also compute the modulus-based bounds")
    args = ap.parse_args()

    for act, table in PUBLISHED.items():
        cfg = SweepConfig(node_counts=tuple(table), activation_name=act,
                          grid_resolution=args.resolution, with_bounds=args.bounds)
        reports = run_sweep(cfg)
        print(f"\n{act}  (grid resolution {args.resolution})")
        print(f"{'n':>4} {'kind':>5} {'measured':>12} {'reference':>12} {'ratio':>7}"
              + (f" {'bound':>12}" if args.bounds else ""))
        for r in reports:
            ref = table[r.n1][BIVARIATE_KINDS.index(r.operator_kind)]
            line = f"{r.n1:>4} {r.operator_kind.value:>5} {r.measured_sup_error:12.6g} {ref:12.6g} {r.measured_sup_error / ref:7.3f}"
            if args.bounds:
                line += f" {r.theoretical_bound:12.6g}"
            if r.notes:
                line += "  # " + "; ".join(r.notes)
            print(line)


if __name__ == "__main__":
    main()
