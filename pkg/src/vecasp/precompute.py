"""Removing atoms that are false in every stable model.

Stripping negative literals gives a definite program ``P+`` whose least model
contains every stable model, so atoms outside ``LM(P+)`` can be deleted
together with the rules and constraints they make irrelevant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import AtomTable, Constraint, Literal, Program, Rule, as_model, gl_reduct


def positivize(program: Program) -> Program:
    """Drop every negative body literal (and all constraints)."""
    rules = tuple(Rule(r.head, tuple(Literal(a) for a in r.positive)) for r in program.rules)
    return Program(program.atoms, rules, ())


def least_model(definite: Program) -> np.ndarray:
    """Least model of a definite program by counter-based forward chaining.

    Each rule keeps the number of positive body atoms not yet derived; deriving
    an atom decrements the counters of the rules it occurs in, so the total work
    is linear in the number of atom occurrences. Constraints are ignored.
    """
    if not definite.is_definite:
        raise ValueError("least_model needs a definite program (no negative literals)")
    n = definite.n
    remaining = []
    watch: list[list[int]] = [[] for _ in range(n)]
    queue = []
    for j, r in enumerate(definite.rules):
        pos = r.positive
        remaining.append(len(pos))
        for a in pos:
            watch[a].append(j)
        if not pos:
            queue.append(r.head)
    derived = np.zeros(n, dtype=np.uint8)
    rules = definite.rules
    while queue:
        a = queue.pop()
        if derived[a]:
            continue
        derived[a] = 1
        for j in watch[a]:
            remaining[j] -= 1
            if remaining[j] == 0:
                queue.append(rules[j].head)
    return derived


def is_stable_model(program: Program, model) -> bool:
    """Exact check: the model equals the least model of its reduct."""
    bits = as_model(model, program.n)
    return bool(np.array_equal(least_model(gl_reduct(program, bits)), bits))


@dataclass(frozen=True)
class PrecomputeResult:
    false_atoms: frozenset[int]
    reduced: Program
    atom_map: tuple[int, ...]  # reduced atom index -> original atom index
    n_original: int
    # A constraint made only of negated stable false atoms is violated by every stable model.
    infeasible: bool = False

    def stats(self) -> dict:
        n, n_red = self.n_original, self.reduced.n
        return {
            "atoms": n,
            "atoms_reduced": n_red,
            "false_atoms": len(self.false_atoms),
            "atom_reduction_pct": 100.0 * (n - n_red) / n if n else 0.0,
            "rules_reduced": self.reduced.m,
            "constraints_reduced": len(self.reduced.constraints),
            "infeasible": self.infeasible,
        }


def precompute(program: Program) -> PrecomputeResult:
    lm = least_model(positivize(program))
    false = frozenset(int(i) for i in np.flatnonzero(lm == 0))
    atom_map = tuple(i for i in range(program.n) if i not in false)
    new_index = {old: new for new, old in enumerate(atom_map)}

    def shrink(body):
        return tuple(
            Literal(new_index[l.atom], l.negated) for l in body
            if not (l.negated and l.atom in false)
        )

    rules = []
    for r in program.rules:
        if r.head in false or false.intersection(r.positive):
            continue
        rules.append(Rule(new_index[r.head], shrink(r.body)))
    constraints = []
    infeasible = False
    for c in program.constraints:
        if false.intersection(c.positive):
            continue
        body = shrink(c.body)
        if body:
            constraints.append(Constraint(body))
        else:
            infeasible = True
    atoms = AtomTable(program.atoms[i] for i in atom_map)
    return PrecomputeResult(false, Program(atoms, tuple(rules), tuple(constraints)), atom_map, program.n, infeasible)


def expand_model(result: PrecomputeResult, reduced_model) -> np.ndarray:
    """Lift a model of the reduced program back to the original atoms; removed atoms are false."""
    bits = as_model(reduced_model, len(result.atom_map))
    full = np.zeros(result.n_original, dtype=np.uint8)
    full[list(result.atom_map)] = bits
    return full
