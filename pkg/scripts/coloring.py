"""3-coloring experiments: the four-vertex graph and cycle graphs.

Prints solve times for the four-vertex graph, the colorings found by repeated
enumeration, and oracle counts for small cycles.
"""

import argparse
import statistics
import time

from vecasp import SolverOptions, enumerate_solutions, solve
from vecasp.generators import FOUR_VERTEX_EDGES, gen_3col, gen_cycle3col
from vecasp.oracle import enumerate_models


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--runs", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    prog = gen_3col(FOUR_VERTEX_EDGES)
    print(f"four-vertex graph: {prog.n} atoms, {prog.m} rules, {len(prog.constraints)} constraints")
    times = []
    for r in range(args.runs):
        res = solve(prog, SolverOptions(seed=args.seed + r))
        times.append(res.trace.wall_time)
    print(f"solve: mean {statistics.fmean(times):.4f} s, std {statistics.pstdev(times):.4f} s over {args.runs} runs")

    t0 = time.perf_counter()
    models = enumerate_solutions(prog, SolverOptions(seed=args.seed), limit=10)
    print(f"enumerated {len(models)} colorings in {time.perf_counter() - t0:.3f} s")
    for m in models:
        print("  " + " ".join(prog.true_atoms(m)))

    print("cycle graphs: n, colorings (oracle), 2^n + 2(-1)^n")
    for n in range(3, 7):
        print(f"  {n}, {len(enumerate_models(gen_cycle3col(n), 'supported'))}, {2**n + 2 * (-1) ** n}")


if __name__ == "__main__":
    main()
