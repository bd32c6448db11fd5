"""Median completion time for growing matrix sizes, with the fitted log-log slope."""

import argparse

from demcomp import bench


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="10,20,40,80,160")
    ap.add_argument("--missing", type=float, default=0.3)
    ap.add_argument("--trials", type=int, default=20)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    spec = bench.BenchSpec(missing_fraction=args.missing, trials=args.trials)
    print(bench.scaling_csv(bench.scaling_ladder(sizes, spec)), end="")


if __name__ == "__main__":
    main()
