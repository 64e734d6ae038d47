"""Command-line entry point.

Exit status: 0 when a model is found or the task completes, 10 when no model
is found within the budget, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import FAMILY_MODES, records_csv, run_bench
from .costs import CostWeights
from .generators import cycle_edges, gen_3col, gen_hc, gen_p4, gen_p5
from .loops import DEFAULT_MAX_CYCLES
from .oracle import OracleRefusal, enumerate_models, enumerate_stable_by_guessing
from .parser import ParseError, read_program, render_program
from .precompute import precompute
from .solver import SolverOptions, enumerate_solutions, solve, solve_parallel

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NO_MODEL = 10


def _add_solver_flags(p: argparse.ArgumentParser, mode_default: str | None = "supported") -> None:
    p.add_argument("--mode", choices=("supported", "stable"), default=mode_default)
    p.add_argument("--lf", choices=("none", "max", "min", "all"), default="none", help="loop-formula heuristic")
    p.add_argument("--precompute", action="store_true", help="remove stable false atoms first")
    p.add_argument("--max-itr", type=int, default=50)
    p.add_argument("--max-try", type=int, default=20)
    p.add_argument("--l2", type=float, default=0.1)
    p.add_argument("--l3", type=float, default=0.1)
    p.add_argument("--l4", type=float, default=1.0)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--notches", type=int, default=20)
    p.add_argument("--max-cycles", type=int, default=DEFAULT_MAX_CYCLES)


def _options(args, mode: str | None = None) -> SolverOptions:
    return SolverOptions(
        mode=mode or args.mode,
        lf_heuristic=args.lf,
        use_precompute=args.precompute,
        max_itr=args.max_itr,
        max_try=args.max_try,
        weights=CostWeights(args.l2, args.l3, args.l4),
        alpha=args.alpha,
        seed=args.seed,
        max_cycles=args.max_cycles,
        notches=args.notches,
    )


def _braces(names) -> str:
    return "{" + ",".join(names) + "}"


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_solve(args) -> int:
    program = read_program(args.file)
    options = _options(args)
    if args.parallel_restarts > 1:
        res = solve_parallel(program, options, args.parallel_restarts)
    else:
        res = solve(program, options)
    if args.trace:
        res.trace.write_csv(args.trace)
    names = None if res.model is None else program.true_atoms(res.model)
    if args.json:
        seconds = 0.0 if args.no_timing else round(res.trace.wall_time, 6)
        out = {"model": names, "stable": res.verified_stable, "tries": res.tries_used, "seconds": seconds}
        print(json.dumps(out))
    elif names is not None:
        print(_braces(names))
    else:
        print("no model found", file=sys.stderr)
    return EXIT_OK if res.found else EXIT_NO_MODEL


def cmd_enumerate(args) -> int:
    program = read_program(args.file)
    models = enumerate_solutions(program, _options(args), args.limit)
    named = [program.true_atoms(m) for m in models]
    if args.json:
        print(json.dumps(named))
    else:
        for names in named:
            print(_braces(names))
    print(f"{len(named)} model(s)", file=sys.stderr)
    return EXIT_OK if named else EXIT_NO_MODEL


def cmd_oracle(args) -> int:
    program = read_program(args.file)
    respect = not args.ignore_constraints
    if args.method == "guess":
        if args.semantics != "stable":
            raise OracleRefusal("the guessing method only enumerates stable models")
        models = enumerate_stable_by_guessing(program, respect)
    else:
        models = enumerate_models(program, args.semantics, respect)
    print(json.dumps(models.atom_sets(program)))
    print(f"{len(models)} model(s)", file=sys.stderr)
    return EXIT_OK


def cmd_precompute(args) -> int:
    program = read_program(args.file)
    result = precompute(program)
    for key, value in result.stats().items():
        print(f"{key}: {value:.2f}" if isinstance(value, float) else f"{key}: {value}")
    if args.output:
        _write(render_program(result.reduced), args.output)
    return EXIT_OK


def _parse_edges(text: str) -> list[tuple[str, str]]:
    out = []
    for item in text.replace(" ", "").split(","):
        if not item:
            continue
        a, sep, b = item.partition("-")
        if not sep or not a or not b:
            raise ValueError(f"bad edge {item!r}; expected u-v")
        out.append((a, b))
    return out


def _int_edges(text: str) -> list[tuple[int, int]]:
    try:
        return [(int(a), int(b)) for a, b in _parse_edges(text)]
    except ValueError as exc:
        raise ValueError(f"edges must be integer pairs u-v: {exc}") from None


def cmd_gen(args) -> int:
    if args.family == "3col":
        if args.cycle:
            program = gen_3col(cycle_edges(args.cycle), list(range(1, args.cycle + 1)))
        elif args.edges:
            program = gen_3col(_parse_edges(args.edges))
        else:
            raise ValueError("3col needs --cycle N or --edges u-v,...")
    elif args.family == "hc":
        if not args.edges or not args.vertices:
            raise ValueError("hc needs --vertices N and --edges u-v,...")
        program = gen_hc(_int_edges(args.edges), args.vertices)
    elif args.family == "p4":
        program = gen_p4(args.n)
    else:
        program = gen_p5(args.n, args.k if args.k is not None else args.n)
    _write(render_program(program), args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    options = _options(args, mode=args.mode or FAMILY_MODES[args.family])
    records = run_bench(args.family, args.sizes, options, args.runs, args.k)
    _write(records_csv(records), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vecasp", description="Supported and stable models by cost minimization.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="search for one model")
    p.add_argument("file")
    _add_solver_flags(p)
    p.add_argument("--trace", metavar="CSVFILE", help="write the per-iteration trace")
    p.add_argument("--json", action="store_true", help="print a JSON result object")
    p.add_argument("--no-timing", action="store_true", help="report seconds as 0.0 for reproducible output")
    p.add_argument("--parallel-restarts", type=int, default=1, metavar="R")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("enumerate", help="find distinct models using exclusion constraints")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=10)
    p.add_argument("--json", action="store_true")
    _add_solver_flags(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("oracle", help="exhaustive ground truth as JSON")
    p.add_argument("file")
    p.add_argument("--semantics", choices=("supported", "stable"), default="stable")
    p.add_argument("--ignore-constraints", action="store_true")
    p.add_argument("--method", choices=("sweep", "guess"), default="sweep",
                   help="sweep all assignments, or guess only negatively occurring atoms")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("precompute", help="report and write the program without stable false atoms")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_precompute)

    p = sub.add_parser("gen", help="write a generated program")
    p.add_argument("family", choices=("3col", "hc", "p4", "p5"))
    p.add_argument("--cycle", type=int, help="3col: cycle graph on N vertices")
    p.add_argument("--edges", help="comma-separated u-v pairs")
    p.add_argument("--vertices", type=int, help="hc: number of vertices")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--k", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="seeded runs over an instance family, CSV summary")
    p.add_argument("family", choices=tuple(FAMILY_MODES))
    p.add_argument("--sizes", type=int, nargs="+", required=True)
    p.add_argument("--runs", type=int, default=5)
    p.add_argument("--k", type=int, help="p5: number of self-supporting atoms (default n)")
    p.add_argument("-o", "--output")
    _add_solver_flags(p, mode_default=None)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


run_cli = main

if __name__ == "__main__":
    sys.exit(main())
