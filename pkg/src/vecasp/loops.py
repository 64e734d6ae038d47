"""Positive dependency graphs, loops and the matrices behind loop formulas.

A loop is a non-empty set of atoms whose induced subgraph of the positive
dependency graph is strongly connected; a singleton ``{a}`` counts only when
``a`` has a self-loop. For loop ``L`` a rule ``h <- G`` is a support rule when
``h`` is in ``L`` and no positive atom of ``G`` is. A :class:`LoopSet` encodes
a family of loops as

* ``Lmem`` (``t x n``): ``Lmem[s, i] = 1`` iff atom ``i`` is in loop ``s``;
* ``Lsup`` (``t x m``): ``Lsup[s, j] = 1`` iff rule ``j`` supports loop ``s``.

These two matrices are all the cost module needs to evaluate the conjunctive
loop formula ``(h1 & ... & hp) -> (H1 | ... | Hq)`` of every loop.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np
import scipy.sparse as sp

from .core import Program

DEFAULT_MAX_CYCLES = 100_000


@dataclass(frozen=True)
class PositiveDependencyGraph:
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, succ in enumerate(self.adjacency) for b in succ]

    def has_self_loop(self, a: int) -> bool:
        return a in self.adjacency[a]


def build_pdg(program: Program) -> PositiveDependencyGraph:
    """Edge ``a -> b`` iff some rule for ``a`` has ``b`` as a positive body literal."""
    succ: list[dict[int, None]] = [{} for _ in range(program.n)]
    for r in program.rules:
        for b in r.positive:
            succ[r.head].setdefault(b)
    return PositiveDependencyGraph(tuple(tuple(sorted(s)) for s in succ))


def tarjan_scc(adjacency: Sequence[Sequence[int]]) -> list[list[int]]:
    """Strongly connected components, iterative Tarjan, ``O(|V| + |E|)``.

    Components come out in reverse topological order (sinks first).
    """
    n = len(adjacency)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pos = work[-1]
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            succ = adjacency[v]
            while pos < len(succ):
                w = succ[pos]
                pos += 1
                if index[w] == -1:
                    work[-1] = (v, pos)
                    work.append((w, 0))
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp.append(w)
                        if w == v:
                            break
                    comps.append(sorted(comp))
    return comps


def _cycles_through(start: int, adj: dict[int, list[int]]) -> Iterator[list[int]]:
    # Johnson's circuit search with blocking, restricted to one component.
    path = [start]
    blocked = {start}
    B: dict[int, set[int]] = defaultdict(set)
    stack = [(start, iter(adj[start]))]
    closed = [False]
    while stack:
        v, nbrs = stack[-1]
        for w in nbrs:
            if w == start:
                yield path[:]
                closed[-1] = True
            elif w not in blocked:
                path.append(w)
                blocked.add(w)
                closed.append(False)
                stack.append((w, iter(adj[w])))
                break
        else:
            stack.pop()
            path.pop()
            found = closed.pop()
            if found:
                if closed:
                    closed[-1] = True
                todo = [v]
                while todo:
                    x = todo.pop()
                    if x in blocked:
                        blocked.discard(x)
                        todo.extend(B[x])
                        B[x].clear()
            else:
                for w in adj[v]:
                    B[w].add(v)


def elementary_cycles(adjacency: Sequence[Sequence[int]]) -> Iterator[list[int]]:
    """Yield every elementary cycle once, as a vertex list starting at its least vertex."""
    n = len(adjacency)
    for v in range(n):
        if v in adjacency[v]:
            yield [v]
    # Drop self-loops, then peel off the least vertex of each component in turn.
    base = [[w for w in succ if w != v] for v, succ in enumerate(adjacency)]
    pending = [c for c in tarjan_scc(base) if len(c) > 1]
    while pending:
        comp = pending.pop()
        members = set(comp)
        start = comp[0]
        adj = {v: [w for w in base[v] if w in members] for v in comp}
        yield from _cycles_through(start, adj)
        rest = comp[1:]
        rest_set = set(rest)
        local = {v: i for i, v in enumerate(rest)}
        sub = [[local[w] for w in adj[v] if w in rest_set] for v in rest]
        for c in tarjan_scc(sub):
            if len(c) > 1:
                pending.append(sorted(rest[i] for i in c))


@dataclass(frozen=True, eq=False)
class LoopSet:
    loops: tuple[tuple[int, ...], ...]
    Lmem: sp.csr_matrix
    Lsup: sp.csr_matrix
    truncated: bool = False

    @property
    def t(self) -> int:
        return len(self.loops)

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(l) for l in self.loops}


def _rules_by_head(program: Program) -> dict[int, list[int]]:
    by_head: dict[int, list[int]] = defaultdict(list)
    for j, r in enumerate(program.rules):
        by_head[r.head].append(j)
    return by_head


def support_rules(program: Program, loop: Iterable[int], by_head=None) -> list[int]:
    members = set(loop)
    by_head = _rules_by_head(program) if by_head is None else by_head
    return sorted(
        j for h in members for j in by_head.get(h, ())
        if members.isdisjoint(program.rules[j].positive)
    )


def make_loopset(program: Program, loops: Iterable[Iterable[int]], truncated: bool = False) -> LoopSet:
    loops = tuple(tuple(sorted(set(l))) for l in loops)
    by_head = _rules_by_head(program)
    rows_m, cols_m, rows_s, cols_s = [], [], [], []
    for s, loop in enumerate(loops):
        rows_m.extend([s] * len(loop))
        cols_m.extend(loop)
        sup = support_rules(program, loop, by_head)
        rows_s.extend([s] * len(sup))
        cols_s.extend(sup)
    t = len(loops)

    def csr(r, c, shape):
        return sp.csr_matrix((np.ones(len(r)), (np.asarray(r, dtype=np.int64), np.asarray(c, dtype=np.int64))), shape=shape)

    return LoopSet(loops, csr(rows_m, cols_m, (t, program.n)), csr(rows_s, cols_s, (t, program.m)), truncated)


def empty_loopset(program: Program) -> LoopSet:
    return make_loopset(program, ())


def is_loop(pdg: PositiveDependencyGraph, atoms: Iterable[int]) -> bool:
    members = sorted(set(atoms))
    if not members:
        return False
    if len(members) == 1:
        return pdg.has_self_loop(members[0])
    local = {v: i for i, v in enumerate(members)}
    sub = [[local[w] for w in pdg.adjacency[v] if w in local] for v in members]
    return len(tarjan_scc(sub)) == 1


def loops_scc(program: Program) -> LoopSet:
    """One loop per strongly connected component (singletons only with a self-loop)."""
    pdg = build_pdg(program)
    comps = [c for c in tarjan_scc(pdg.adjacency) if len(c) > 1 or pdg.has_self_loop(c[0])]
    comps.sort(key=lambda c: c[0])
    return make_loopset(program, comps)


def loops_cycles(program: Program, max_cycles: int = DEFAULT_MAX_CYCLES) -> LoopSet:
    """Vertex sets of the elementary cycles, enumerating at most ``max_cycles`` cycles."""
    if max_cycles < 1:
        raise ValueError("max_cycles must be >= 1")
    pdg = build_pdg(program)
    seen: dict[frozenset[int], None] = {}
    truncated = False
    gen = elementary_cycles(pdg.adjacency)
    for count, cyc in enumerate(gen):
        if count == max_cycles:
            truncated = True
            break
        seen.setdefault(frozenset(cyc))
    return make_loopset(program, seen, truncated)


def loops_all(program: Program, max_loops: int = 10_000, max_cycles: int = DEFAULT_MAX_CYCLES) -> LoopSet:
    """Every loop of the program, up to ``max_loops`` of them.

    A strongly connected vertex set is a union of elementary cycles chained by
    shared vertices, so closing the cycle vertex sets under unions of
    intersecting pairs produces exactly the loops.
    """
    cyc = loops_cycles(program, max_cycles)
    truncated = cyc.truncated
    found: dict[frozenset[int], None] = {}
    queue = [frozenset(l) for l in cyc.loops]
    for l in queue:
        found.setdefault(l)
    by_atom: dict[int, list[frozenset[int]]] = defaultdict(list)
    for l in found:
        for a in l:
            by_atom[a].append(l)
    i = 0
    while i < len(queue) and not truncated:
        cur = queue[i]
        i += 1
        partners = {k for a in cur for k in by_atom[a]}
        for k in partners:
            u = cur | k
            if u in found:
                continue
            if len(found) >= max_loops:
                truncated = True
                break
            found[u] = None
            queue.append(u)
            for a in u:
                by_atom[a].append(u)
    loops = sorted(found, key=lambda s: (len(s), sorted(s)))
    if len(loops) > max_loops:
        loops, truncated = loops[:max_loops], True
    return make_loopset(program, loops, truncated)

