"""Effect of loop-formula heuristics and precomputation on finding the stable model of p4(n).

For every setting the search accepts supported models and checks stability,
excluding non-stable models, so the count of models seen measures how often
the heuristic steers into non-stable supported models.
"""

import argparse
import time

import numpy as np

from vecasp import SolverOptions
from vecasp.costs import CostWeights
from vecasp.generators import gen_p4
from vecasp.solver import trials_to_stable

SETTINGS = {
    "no_lf": dict(lf_heuristic="none"),
    "lf_max": dict(lf_heuristic="max"),
    "lf_min": dict(lf_heuristic="min"),
    "no_lf_pre": dict(lf_heuristic="none", use_precompute=True),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[10, 20, 40, 80])
    ap.add_argument("--repeats", type=int, default=10)
    ap.add_argument("--max-trials", type=int, default=100)
    args = ap.parse_args()

    base = SolverOptions(max_try=10, max_itr=100, weights=CostWeights(l2=0.1, l3=0.0, l4=1.0))
    print("n, setting, reached, mean_seconds, mean_models_seen")
    for n in args.n:
        prog = gen_p4(n)
        for label, changes in SETTINGS.items():
            secs, seen, reached = [], [], 0
            for s in range(args.repeats):
                t0 = time.perf_counter()
                out = trials_to_stable(prog, base.with_(seed=s, **changes), True, args.max_trials)
                secs.append(time.perf_counter() - t0)
                seen.append(out.models_seen)
                reached += out.reached
            print(f"{n}, {label}, {reached}/{args.repeats}, {np.mean(secs):.4f}, {np.mean(seen):.2f}")


if __name__ == "__main__":
    main()
