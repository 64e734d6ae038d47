"""Newton-style search for supported and stable models.

The search keeps a continuous assignment ``u``. Each iteration thresholds
``u`` into binary candidates and accepts one whose supported residual and
constraint violations are both zero (in stable mode it must also pass the
exact reduct check). Otherwise ``u`` takes a Newton step on the total cost.
When a try runs out of iterations or stalls, ``u`` is perturbed and the
search retries.

Random streams: ``SeedSequence(seed).spawn(max_try + 1)`` gives child 0 for
the initial draw and child ``i`` for the perturbation before try ``i``.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from .core import Constraint, Literal, Program, as_model
from .costs import CostWeights, cost_total
from .loops import DEFAULT_MAX_CYCLES, LoopSet, empty_loopset, loops_all, loops_cycles, loops_scc
from .matricize import ConstraintMatrix, MatricizedProgram, matricize
from .precompute import expand_model, is_stable_model, precompute
from .semantics import min1

MODES = ("supported", "stable")
LF_HEURISTICS = ("none", "max", "min", "all")
STAGNATION_EPS = 1e-12
TRACE_HEADER = ("try", "itr", "total", "j_sq", "j_nrm", "j_c", "j_lf", "cand_err")


@dataclass(frozen=True)
class SolverOptions:
    mode: str = "supported"
    lf_heuristic: str = "none"
    use_precompute: bool = False
    max_itr: int = 50
    max_try: int = 20
    weights: CostWeights = field(default_factory=CostWeights)
    alpha: float = 1.0
    seed: int = 0
    max_cycles: int = DEFAULT_MAX_CYCLES
    notches: int = 20
    max_loops: int = 10_000

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.lf_heuristic not in LF_HEURISTICS:
            raise ValueError(f"lf_heuristic must be one of {LF_HEURISTICS}")
        if self.max_itr < 1 or self.max_try < 1:
            raise ValueError("max_itr and max_try must be >= 1")
        if not self.alpha > 0:
            raise ValueError("alpha must be positive")
        if self.notches < 2:
            raise ValueError("notches must be >= 2")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.max_cycles < 1 or self.max_loops < 1:
            raise ValueError("max_cycles and max_loops must be >= 1")

    def with_(self, **changes) -> SolverOptions:
        return replace(self, **changes)


@dataclass(frozen=True)
class TraceRecord:
    try_index: int
    itr: int
    total: float
    j_sq: float
    j_nrm: float
    j_c: float
    j_lf: float
    cand_err: float


@dataclass
class SolveTrace:
    records: list[TraceRecord] = field(default_factory=list)
    wall_time: float = 0.0
    outcome: str = "exhausted"  # found | exhausted | infeasible
    loops_truncated: bool = False

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(TRACE_HEADER)
        for r in self.records:
            w.writerow([r.try_index, r.itr, repr(r.total), repr(r.j_sq), repr(r.j_nrm),
                        repr(r.j_c), repr(r.j_lf), repr(r.cand_err)])
        return buf.getvalue()

    def write_csv(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(self.to_csv())


@dataclass
class SolveResult:
    model: np.ndarray | None
    verified_stable: bool
    trace: SolveTrace
    tries_used: int

    @property
    def found(self) -> bool:
        return self.model is not None


def newton_step(u: np.ndarray, cost: float, grad: np.ndarray, alpha: float = 1.0) -> tuple[np.ndarray, bool]:
    """One update ``u - alpha * cost / (g.g) * g``; returns ``(u_new, stagnated)``."""
    u = np.asarray(u, dtype=np.float64)
    grad = np.asarray(grad, dtype=np.float64)
    if grad.shape != u.shape:
        raise ValueError("gradient and u differ in shape")
    gg = float(grad @ grad)
    if gg < STAGNATION_EPS:
        return u.copy(), True
    return u - alpha * (cost / gg) * grad, False


def threshold_candidates(u, notches: int = 20) -> np.ndarray:
    """Distinct binary vectors ``[u >= theta]`` over an even grid of thresholds.

    Rows come in increasing-threshold order. A constant ``u`` yields the
    all-ones and all-zeros vectors.
    """
    if notches < 2:
        raise ValueError("notches must be >= 2")
    u = np.asarray(u, dtype=np.float64)
    if u.size == 0:
        return np.zeros((1, 0), dtype=np.uint8)
    lo, hi = float(u.min()), float(u.max())
    if lo == hi:
        return np.vstack([np.ones(u.size, dtype=np.uint8), np.zeros(u.size, dtype=np.uint8)])
    thetas = np.linspace(lo, hi, notches)
    # Candidates are nested as theta grows, so equal rows have equal popcounts.
    counts = np.searchsorted(np.sort(u), thetas, side="left")
    _, first = np.unique(counts, return_index=True)
    keep = thetas[np.sort(first)]
    return (u[None, :] >= keep[:, None]).astype(np.uint8)


def candidate_errors(mp: MatricizedProgram, cm: ConstraintMatrix, cands: np.ndarray) -> np.ndarray:
    """Squared supported residual plus violated-constraint count, one per row of ``cands``."""
    U = np.asarray(cands, dtype=np.float64).T  # n x C
    N = mp.Q1 @ (1.0 - U) + mp.Q2 @ U
    d = mp.D @ (1.0 - min1(N))
    err = np.sum((U - min1(d)) ** 2, axis=0)
    if cm.k:
        Nc = cm.Qc1 @ (1.0 - U) + cm.Qc2 @ U
        err = err + np.sum(1.0 - min1(Nc), axis=0)
    return np.asarray(err).ravel()


def candidate_error(mp: MatricizedProgram, cm: ConstraintMatrix, u_star) -> float:
    bits = as_model(u_star, mp.n)
    return float(candidate_errors(mp, cm, bits[None, :])[0])


def perturbate(u, rng: np.random.Generator) -> np.ndarray:
    u = np.asarray(u, dtype=np.float64)
    return 0.5 * (u + rng.standard_normal(u.shape) + 0.5)


def select_loops(program: Program, options: SolverOptions) -> LoopSet:
    if options.lf_heuristic == "max":
        return loops_scc(program)
    if options.lf_heuristic == "min":
        return loops_cycles(program, options.max_cycles)
    if options.lf_heuristic == "all":
        return loops_all(program, options.max_loops, options.max_cycles)
    return empty_loopset(program)


def _search(program: Program, options: SolverOptions, seq: np.random.SeedSequence, trace: SolveTrace):
    """Run the double loop on ``program``; returns ``(model or None, tries_used)``."""
    mp, cm = matricize(program)
    loops = select_loops(program, options)
    trace.loops_truncated = loops.truncated
    streams = [np.random.default_rng(s) for s in seq.spawn(options.max_try + 1)]
    stable_mode = options.mode == "stable"

    def accept(cands: np.ndarray, errs: np.ndarray):
        for idx in np.flatnonzero(errs == 0):
            if not stable_mode or is_stable_model(program, cands[idx]):
                return cands[idx]
        return None

    if mp.n == 0:
        empty = np.zeros((1, 0), dtype=np.uint8)
        return accept(empty, candidate_errors(mp, cm, empty)), 1

    u = streams[0].standard_normal(mp.n) + 0.5
    for t in range(options.max_try):
        if t:
            u = perturbate(u, streams[t])
        for j in range(options.max_itr):
            cands = threshold_candidates(u, options.notches)
            errs = candidate_errors(mp, cm, cands)
            cb = cost_total(mp, cm, loops, u, options.weights)
            trace.records.append(TraceRecord(t + 1, j + 1, cb.total, cb.j_sq, cb.j_nrm, cb.j_c, cb.j_lf, float(errs.min())))
            found = accept(cands, errs)
            if found is not None:
                return found, t + 1
            if cb.total == 0.0:
                # A root whose candidates were all rejected: nothing left to descend.
                break
            u, stagnated = newton_step(u, cb.total, cb.grad, options.alpha)
            if stagnated:
                break
    return None, options.max_try


def _solve(program: Program, options: SolverOptions, seq: np.random.SeedSequence) -> SolveResult:
    trace = SolveTrace()
    start = time.perf_counter()
    model = None
    tries = 0
    if options.use_precompute:
        pre = precompute(program)
        if pre.infeasible:
            trace.outcome = "infeasible"
        else:
            reduced_model, tries = _search(pre.reduced, options, seq, trace)
            if reduced_model is not None:
                model = expand_model(pre, reduced_model)
    else:
        model, tries = _search(program, options, seq, trace)
    stable = False
    if model is not None:
        model = as_model(model, program.n)
        stable = is_stable_model(program, model)
        if options.mode == "stable" and not stable:
            model = None
    if model is not None:
        trace.outcome = "found"
    trace.wall_time = time.perf_counter() - start
    return SolveResult(model, stable, trace, tries)


def solve(program: Program, options: SolverOptions | None = None) -> SolveResult:
    options = options or SolverOptions()
    return _solve(program, options, np.random.SeedSequence(options.seed))


def exclusion_constraint(model) -> Constraint:
    """The conjunction of all literals true in ``model``, as a constraint."""
    bits = np.asarray(model)
    return Constraint(tuple(Literal(i, not bool(b)) for i, b in zip(range(bits.size), bits)))


def enumerate_solutions(program: Program, options: SolverOptions | None = None, limit: int = 10) -> list[np.ndarray]:
    """Repeated solving, excluding each found model before the next run.

    Run ``i`` draws from ``SeedSequence([seed, i])``.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    options = options or SolverOptions()
    found: list[np.ndarray] = []
    current = program
    for i in range(limit):
        res = _solve(current, options, np.random.SeedSequence([options.seed, i]))
        if res.model is None:
            break
        found.append(res.model)
        current = current.with_constraints(current.constraints + (exclusion_constraint(res.model),))
    return found


@dataclass(frozen=True)
class TrialsOutcome:
    trials: int
    reached: bool
    models_seen: int


def trials_to_stable(
    program: Program,
    options: SolverOptions | None = None,
    exclude_found: bool = True,
    max_trials: int = 50,
) -> TrialsOutcome:
    """Count independent searches until one returns a stable model.

    Each trial runs the search with supported-model acceptance and then checks
    stability exactly. With ``exclude_found`` every non-stable model returned
    is forbidden for later trials. If no trial succeeds, ``trials`` equals
    ``max_trials``.
    """
    options = (options or SolverOptions()).with_(mode="supported")
    current = program
    seen = 0
    for i in range(max_trials):
        res = _solve(current, options, np.random.SeedSequence([options.seed, i]))
        if res.model is None:
            continue
        seen += 1
        if res.verified_stable:
            return TrialsOutcome(i + 1, True, seen)
        if exclude_found:
            current = current.with_constraints(current.constraints + (exclusion_constraint(res.model),))
    return TrialsOutcome(max_trials, False, seen)


def solve_parallel(program: Program, options: SolverOptions | None = None, restarts: int = 2) -> SolveResult:
    """Independent seeded searches run concurrently; the lowest-index success wins.

    Restart ``r`` draws from ``SeedSequence([seed, r])``. The result does not
    depend on scheduling.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    options = options or SolverOptions()
    seqs = [np.random.SeedSequence([options.seed, r]) for r in range(restarts)]
    with ThreadPoolExecutor(max_workers=restarts) as pool:
        results = list(pool.map(lambda s: _solve(program, options, s), seqs))
    for res in results:
        if res.found:
            return res
    return results[0]


def model_names(program: Program, model: Sequence[int] | None) -> list[str] | None:
    return None if model is None else program.true_atoms(model)
