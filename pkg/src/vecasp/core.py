"""Symbolic ground normal logic programs.

Atoms are addressed by 0-based index into an :class:`AtomTable`; the order of
the table fixes the column order of every matrix built from a program, and
rule order fixes the row order. All types are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class AtomTable:
    """Ordered, duplicate-free collection of atom names."""

    __slots__ = ("_names", "_index")

    def __init__(self, names: Iterable[str] = ()):
        names = tuple(names)
        index = {name: i for i, name in enumerate(names)}
        if len(index) != len(names):
            seen = set()
            dup = next(n for n in names if n in seen or seen.add(n))
            raise ValueError(f"duplicate atom name {dup!r}")
        self._names = names
        self._index = index

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    def index(self, name: str) -> int:
        return self._index[name]

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self._names)

    def __getitem__(self, i: int) -> str:
        return self._names[i]

    def __iter__(self):
        return iter(self._names)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AtomTable):
            return NotImplemented
        return self._names == other._names

    def __hash__(self) -> int:
        return hash(self._names)

    def __repr__(self) -> str:
        return f"AtomTable({list(self._names)!r})"


@dataclass(frozen=True, order=True)
class Literal:
    atom: int
    negated: bool = False

    def __neg__(self) -> Literal:
        return Literal(self.atom, not self.negated)


def _dedupe(body: Iterable[Literal]) -> tuple[Literal, ...]:
    # Keeps first occurrence order; a and not-a are distinct literals and both stay.
    return tuple(dict.fromkeys(body))


@dataclass(frozen=True)
class Rule:
    head: int
    body: tuple[Literal, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "body", _dedupe(self.body))

    @property
    def positive(self) -> tuple[int, ...]:
        return tuple(l.atom for l in self.body if not l.negated)

    @property
    def negative(self) -> tuple[int, ...]:
        return tuple(l.atom for l in self.body if l.negated)


@dataclass(frozen=True)
class Constraint:
    body: tuple[Literal, ...]

    def __post_init__(self):
        body = _dedupe(self.body)
        if not body:
            raise ValueError("constraint body must be non-empty")
        object.__setattr__(self, "body", body)

    @property
    def positive(self) -> tuple[int, ...]:
        return tuple(l.atom for l in self.body if not l.negated)

    @property
    def negative(self) -> tuple[int, ...]:
        return tuple(l.atom for l in self.body if l.negated)


@dataclass(frozen=True)
class Program:
    atoms: AtomTable = field(default_factory=AtomTable)
    rules: tuple[Rule, ...] = ()
    constraints: tuple[Constraint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        n = len(self.atoms)
        for j, r in enumerate(self.rules):
            if not 0 <= r.head < n or any(not 0 <= l.atom < n for l in r.body):
                raise ValueError(f"rule {j} refers to an atom outside the table")
        for j, c in enumerate(self.constraints):
            if any(not 0 <= l.atom < n for l in c.body):
                raise ValueError(f"constraint {j} refers to an atom outside the table")

    @property
    def n(self) -> int:
        return len(self.atoms)

    @property
    def m(self) -> int:
        return len(self.rules)

    @property
    def is_definite(self) -> bool:
        return not any(l.negated for r in self.rules for l in r.body)

    def with_constraints(self, constraints: Iterable[Constraint]) -> Program:
        return Program(self.atoms, self.rules, tuple(constraints))

    def model(self, true_atoms: Iterable[str] = ()) -> np.ndarray:
        """Vectorize a set of atom names into a 0/1 model over this program's atoms."""
        bits = np.zeros(self.n, dtype=np.uint8)
        for name in true_atoms:
            bits[self.atoms.index(name)] = 1
        return bits

    def true_atoms(self, model: Sequence[int]) -> list[str]:
        return [self.atoms[i] for i, b in enumerate(model) if b]


def build_program(
    rules: Iterable[tuple[str, Sequence[str]]] = (),
    constraints: Iterable[Sequence[str]] = (),
    atoms: Sequence[str] = (),
) -> Program:
    """Build a program from names; ``"not x"`` denotes a negative literal.

    Atom order is ``atoms`` first, then first occurrence in rules, then in
    constraints (heads before bodies), which is the order the parser produces.
    """
    names: dict[str, int] = {a: i for i, a in enumerate(dict.fromkeys(atoms))}

    def lit(text: str) -> Literal:
        text = text.strip()
        neg = text.startswith("not ")
        name = text[4:].strip() if neg else text
        return Literal(names.setdefault(name, len(names)), neg)

    built_rules = []
    for head, body in rules:
        h = names.setdefault(head, len(names))
        built_rules.append(Rule(h, tuple(lit(b) for b in body)))
    built_constraints = [Constraint(tuple(lit(b) for b in body)) for body in constraints]
    return Program(AtomTable(names), tuple(built_rules), tuple(built_constraints))


def as_model(model, n: int) -> np.ndarray:
    """Validate a 0/1 vector of length ``n`` and return it as uint8."""
    arr = np.asarray(model)
    if arr.ndim != 1 or arr.shape[0] != n:
        raise ValueError(f"model must be a vector of length {n}, got shape {arr.shape}")
    if arr.size and not np.all((arr == 0) | (arr == 1)):
        raise ValueError("model entries must be 0 or 1")
    return arr.astype(np.uint8)


def body_true(body: Iterable[Literal], model: Sequence[int]) -> bool:
    return all(bool(model[l.atom]) != l.negated for l in body)


def completion_bodies(program: Program, atom: int) -> list[int]:
    """Indices of the rules whose head is ``atom``, in program order.

    An empty result means the completed rule for the atom is ``atom <=> false``.
    """
    if not 0 <= atom < program.n:
        raise ValueError(f"atom index {atom} out of range for {program.n} atoms")
    return [j for j, r in enumerate(program.rules) if r.head == atom]


def gl_reduct(program: Program, model) -> Program:
    """Gelfond-Lifschitz reduct of ``program`` by ``model``.

    Rules with a negative literal false in the model are dropped, the negative
    literals of the surviving rules are deleted. Constraints are not carried over.
    """
    bits = as_model(model, program.n)
    kept = []
    for r in program.rules:
        if any(bits[a] for a in r.negative):
            continue
        kept.append(Rule(r.head, tuple(Literal(a) for a in r.positive)))
    return Program(program.atoms, tuple(kept), ())


def violated_constraints(program: Program, model) -> list[int]:
    bits = as_model(model, program.n)
    return [j for j, c in enumerate(program.constraints) if body_true(c.body, bits)]
