"""Time to find a 3-coloring of cycle graphs as the number of vertices grows."""

import argparse

import numpy as np

from vecasp import SolverOptions
from vecasp.bench import records_csv, run_bench


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[1000, 2000, 3000, 4000, 5000])
    ap.add_argument("--runs", type=int, default=5)
    ap.add_argument("--max-try", type=int, default=100)
    ap.add_argument("--max-itr", type=int, default=2000)
    ap.add_argument("-o", "--output", help="CSV file (default: stdout)")
    args = ap.parse_args()

    opts = SolverOptions(max_try=args.max_try, max_itr=args.max_itr)
    records = run_bench("cycle3col", args.sizes, opts, args.runs)
    text = records_csv(records)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    if len(records) > 1:
        slope = np.polyfit(np.log([r.n for r in records]), np.log([r.mean_seconds for r in records]), 1)[0]
        print(f"log-log slope of mean time: {slope:.2f}")


if __name__ == "__main__":
    main()
