"""Hamiltonian cycles of a small digraph via the solver, checked against direct search."""

import argparse

from vecasp import SolverOptions, enumerate_solutions
from vecasp.generators import gen_hc, hc_edges_of_model
from vecasp.oracle import hamiltonian_cycles
from vecasp.precompute import precompute

# Both directions of a 6-cycle plus two chords.
DEFAULT_EDGES = "1-2,2-3,3-4,4-5,5-6,6-1,2-1,3-2,4-3,5-4,6-5,1-6,1-4,4-1"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--vertices", type=int, default=6)
    ap.add_argument("--edges", default=DEFAULT_EDGES)
    ap.add_argument("--limit", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    edges = [tuple(int(x) for x in e.split("-")) for e in args.edges.split(",")]
    prog = gen_hc(edges, args.vertices)
    stats = precompute(prog).stats()
    print(f"{prog.n} atoms, {prog.m} rules, {len(prog.constraints)} constraints; "
          f"precompute removes {stats['false_atoms']} atoms")
    models = enumerate_solutions(prog, SolverOptions(seed=args.seed, max_try=50, max_itr=100), args.limit)
    found = {hc_edges_of_model(prog, m) for m in models}
    truth = hamiltonian_cycles(args.vertices, edges)
    for cycle in sorted(found, key=sorted):
        print("  " + " ".join(f"{i}->{j}" for i, j in sorted(cycle)))
    print(f"solver found {len(found)} of {len(truth)} cycles; all valid: {found <= truth}")


if __name__ == "__main__":
    main()
