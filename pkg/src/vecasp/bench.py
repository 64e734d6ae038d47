"""Repeated seeded runs over instance families, summarized as CSV rows."""

from __future__ import annotations

import csv
import io
import statistics
from dataclasses import asdict, dataclass
from typing import Callable, Iterable

from .core import Program
from .generators import gen_cycle3col, gen_p4, gen_p5
from .solver import SolverOptions, solve

FAMILY_MODES = {"cycle3col": "supported", "p4": "stable", "p5": "stable"}


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    n: int
    k: int
    atoms: int
    rules: int
    runs: int
    found: int
    solutions: int  # distinct models over all runs
    median_seconds: float
    mean_seconds: float
    std_seconds: float
    median_tries: float

    def __post_init__(self):
        if min(self.median_seconds, self.mean_seconds, self.std_seconds) < 0:
            raise ValueError("wall times must be non-negative")


BENCH_HEADER = tuple(BenchRecord.__dataclass_fields__)


def family_instance(family: str, n: int, k: int | None = None) -> Program:
    if family == "cycle3col":
        return gen_cycle3col(n)
    if family == "p4":
        return gen_p4(n)
    if family == "p5":
        return gen_p5(n, n if k is None else k)
    raise ValueError(f"unknown family {family!r}")


def bench_program(
    name: str,
    program: Program,
    options: SolverOptions,
    runs: int = 5,
    n: int = 0,
    k: int = 0,
    on_run: Callable[[int, float], None] | None = None,
) -> BenchRecord:
    """Solve ``program`` with seeds ``seed, seed+1, ...`` and summarize."""
    if runs < 1:
        raise ValueError("runs must be >= 1")
    times, tries, models = [], [], set()
    found = 0
    for r in range(runs):
        res = solve(program, options.with_(seed=options.seed + r))
        times.append(res.trace.wall_time)
        tries.append(res.tries_used)
        if res.found:
            found += 1
            models.add(res.model.tobytes())
        if on_run:
            on_run(r, res.trace.wall_time)
    return BenchRecord(
        instance=name, n=n, k=k, atoms=program.n, rules=program.m, runs=runs, found=found,
        solutions=len(models),
        median_seconds=statistics.median(times),
        mean_seconds=statistics.fmean(times),
        std_seconds=statistics.pstdev(times),
        median_tries=float(statistics.median(tries)),
    )


def run_bench(family: str, sizes: Iterable[int], options: SolverOptions, runs: int = 5, k: int | None = None) -> list[BenchRecord]:
    out = []
    for n in sizes:
        prog = family_instance(family, n, k)
        kk = (n if k is None else k) if family == "p5" else 0
        out.append(bench_program(family, prog, options, runs, n=n, k=kk))
    return out


def records_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=BENCH_HEADER, lineterminator="\n")
    w.writeheader()
    for rec in records:
        w.writerow(asdict(rec))
    return buf.getvalue()
