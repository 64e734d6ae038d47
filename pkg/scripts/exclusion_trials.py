"""Searches needed to reach the stable model of p4(n), with and without excluding earlier models."""

import argparse

import numpy as np

from vecasp import SolverOptions
from vecasp.generators import gen_p4
from vecasp.solver import trials_to_stable


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[2, 4, 6, 8])
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--cap", type=int, default=50)
    args = ap.parse_args()

    print("n, exclusion, reached, mean_trials, mean_models_seen")
    for n in args.n:
        prog = gen_p4(n)
        for exclude in (True, False):
            outs = [trials_to_stable(prog, SolverOptions(seed=s), exclude, args.cap) for s in range(args.seeds)]
            reached = sum(o.reached for o in outs)
            print(f"{n}, {exclude}, {reached}/{args.seeds}, "
                  f"{np.mean([o.trials for o in outs]):.2f}, {np.mean([o.models_seen for o in outs]):.2f}")


if __name__ == "__main__":
    main()
