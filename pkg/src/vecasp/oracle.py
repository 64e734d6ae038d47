"""Ground truth by enumeration, kept free of the matrix machinery.

Everything here works on the symbolic program. It is slow on purpose: the
point is that it is obviously right.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import Program, as_model, body_true, gl_reduct

MAX_SWEEP_ATOMS = 25
MAX_GUESS_ATOMS = 22


class OracleRefusal(ValueError):
    """Raised when an exhaustive sweep would exceed the supported size."""


@dataclass(frozen=True)
class ModelSet:
    models: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "models", tuple(sorted(set(map(tuple, self.models)))))

    def __len__(self) -> int:
        return len(self.models)

    def __iter__(self):
        return iter(self.models)

    def __contains__(self, model) -> bool:
        return tuple(int(b) for b in model) in set(self.models)

    def atom_sets(self, program: Program) -> list[list[str]]:
        return [program.true_atoms(m) for m in self.models]


def is_supported(program: Program, model) -> bool:
    """The model satisfies the completion: each atom is true iff some rule for it fires."""
    bits = as_model(model, program.n)
    fired = np.zeros(program.n, dtype=bool)
    for r in program.rules:
        if not fired[r.head] and body_true(r.body, bits):
            fired[r.head] = True
    return bool(np.array_equal(fired, bits.astype(bool)))


def naive_least_model(definite: Program) -> np.ndarray:
    """Least model by repeated full passes until nothing changes."""
    true = np.zeros(definite.n, dtype=np.uint8)
    changed = True
    while changed:
        changed = False
        for r in definite.rules:
            if not true[r.head] and all(true[a] for a in r.positive):
                true[r.head] = 1
                changed = True
    return true


def is_stable(program: Program, model) -> bool:
    bits = as_model(model, program.n)
    return bool(np.array_equal(naive_least_model(gl_reduct(program, bits)), bits))


def satisfies_constraints(program: Program, model) -> bool:
    bits = as_model(model, program.n)
    return not any(body_true(c.body, bits) for c in program.constraints)


def enumerate_models(program: Program, semantics: str = "stable", respect_constraints: bool = True) -> ModelSet:
    """All supported or stable models by a plain sweep over ``2**n`` assignments."""
    if semantics not in ("supported", "stable"):
        raise ValueError("semantics must be 'supported' or 'stable'")
    if program.n > MAX_SWEEP_ATOMS:
        raise OracleRefusal(f"exhaustive sweep limited to {MAX_SWEEP_ATOMS} atoms, program has {program.n}")
    check = is_stable if semantics == "stable" else is_supported
    found = []
    for bits in itertools.product((0, 1), repeat=program.n):
        if check(program, bits) and (not respect_constraints or satisfies_constraints(program, bits)):
            found.append(bits)
    return ModelSet(tuple(found))


def enumerate_stable_by_guessing(
    program: Program,
    respect_constraints: bool = True,
    max_guess_atoms: int = MAX_GUESS_ATOMS,
    chunk: int = 1 << 14,
) -> ModelSet:
    """Stable models by guessing only the atoms that occur negatively in rules.

    The reduct depends on the model only through those atoms, so each guess
    ``S`` has exactly one candidate ``LM(P^S)``, which is stable iff it agrees
    with ``S``. This reaches programs with many more atoms than the plain sweep.
    """
    neg = sorted({a for r in program.rules for a in r.negative})
    if len(neg) > max_guess_atoms:
        raise OracleRefusal(f"guessing limited to {max_guess_atoms} negative atoms, program has {len(neg)}")
    n, m = program.n, program.m
    pos = np.zeros((m, n), dtype=np.float32)
    negm = np.zeros((m, n), dtype=np.float32)
    heads = np.zeros((m, n), dtype=np.float32)
    for j, r in enumerate(program.rules):
        pos[j, list(r.positive)] = 1
        negm[j, list(r.negative)] = 1
        heads[j, r.head] = 1
    need = pos.sum(axis=1)
    found = []
    total = 1 << len(neg)
    for lo in range(0, total, chunk):
        codes = np.arange(lo, min(total, lo + chunk), dtype=np.int64)
        guess = ((codes[:, None] >> np.arange(len(neg))[None, :]) & 1).astype(np.float32)
        xg = np.zeros((len(codes), n), dtype=np.float32)
        xg[:, neg] = guess
        active = (xg @ negm.T) == 0
        x = np.zeros((len(codes), n), dtype=np.float32)
        while True:
            fired = active & ((x @ pos.T) == need)
            nxt = np.maximum(x, ((fired.astype(np.float32) @ heads) > 0).astype(np.float32))
            if np.array_equal(nxt, x):
                break
            x = nxt
        ok = np.all(x[:, neg] == guess, axis=1)
        for row in x[ok].astype(np.uint8):
            if not respect_constraints or satisfies_constraints(program, row):
                found.append(tuple(int(b) for b in row))
    return ModelSet(tuple(found))


def hamiltonian_cycles(n_vertices: int, edges: Iterable[tuple[int, int]]) -> set[frozenset[tuple[int, int]]]:
    """Hamiltonian cycles of a digraph on vertices ``1..n_vertices``, as edge sets."""
    edges = set(edges)
    succ = {v: sorted(w for (u, w) in edges if u == v) for v in range(1, n_vertices + 1)}
    out: set[frozenset[tuple[int, int]]] = set()
    if n_vertices == 1:
        if (1, 1) in edges:
            out.add(frozenset({(1, 1)}))
        return out

    def extend(path: list[int], visited: set[int]):
        v = path[-1]
        if len(path) == n_vertices:
            if 1 in succ[v]:
                cyc = path + [1]
                out.add(frozenset(zip(cyc, cyc[1:])))
            return
        for w in succ[v]:
            if w not in visited:
                visited.add(w)
                path.append(w)
                extend(path, visited)
                path.pop()
                visited.discard(w)

    extend([1], {1})
    return out


def models_as_sets(program: Program, models: Sequence) -> list[frozenset[str]]:
    return [frozenset(program.true_atoms(m)) for m in models]
