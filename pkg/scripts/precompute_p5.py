"""Precomputation on p5(n, n): atoms removed, matrix shapes, and time to a stable model."""

import argparse
import statistics
import time

from vecasp import SolverOptions, solve
from vecasp.generators import gen_p5
from vecasp.matricize import matricize
from vecasp.precompute import precompute


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[1000, 2000, 3000, 4000, 5000])
    ap.add_argument("--runs", type=int, default=10)
    args = ap.parse_args()

    print("n, false_atoms, D_before, D_after, precompute_s, mean_solve_s, found")
    for n in args.sizes:
        prog = gen_p5(n, n)
        t0 = time.perf_counter()
        res = precompute(prog)
        pre_s = time.perf_counter() - t0
        before, after = matricize(prog)[0].D.shape, matricize(res.reduced)[0].D.shape
        times, found = [], 0
        for r in range(args.runs):
            out = solve(prog, SolverOptions(mode="stable", use_precompute=True, seed=r, max_try=10, max_itr=100))
            times.append(out.trace.wall_time)
            found += out.found
        print(f"{n}, {len(res.false_atoms)}, {before}, {after}, {pre_s:.4f}, "
              f"{statistics.fmean(times):.4f}, {found}/{args.runs}")


if __name__ == "__main__":
    main()
