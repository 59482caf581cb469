"""Write the target and all four operator surfaces as CSV files for plotting.

    python3 scripts/export_surfaces.py --out-dir surfaces --n 15 --resolution 60
"""
import argparse
from pathlib import Path

from trinn import cli


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="surfaces")
    ap.add_argument("--activation", default="ramp")
    ap.add_argument("--target-name", default="gaussian")
    ap.add_argument("--n", type=int, default=15)
    ap.add_argument("--resolution", type=int, default=60)
    args = ap.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for which in cli.SURFACE_CHOICES:
        path = out / f"{args.target_name}_{which}.csv"
        code = cli.main(["surface", "--which", which, "--activation", args.activation,
                         "--target-name", args.target_name, "--n1", str(args.n), "--n2", str(args.n),
                         "--resolution", str(args.resolution), "--out", str(path)])
        if code:
            raise SystemExit(code)
        print(path)


if __name__ == "__main__":
    main()
