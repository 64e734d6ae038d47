"""Programs for the benchmark families: graph coloring, Hamiltonian cycles and two loopy families."""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .core import AtomTable, Constraint, Literal, Program, Rule

# The four-vertex graph used for the six-solution coloring check.
FOUR_VERTEX_EDGES = (("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("d", "c"))


class _Builder:
    def __init__(self):
        self.names: dict[str, int] = {}
        self.rules: list[Rule] = []
        self.constraints: list[Constraint] = []

    def atom(self, name: str) -> int:
        return self.names.setdefault(name, len(self.names))

    def pos(self, name: str) -> Literal:
        return Literal(self.atom(name))

    def neg(self, name: str) -> Literal:
        return Literal(self.atom(name), True)

    def rule(self, head: str, body: Iterable[Literal] = ()) -> None:
        h = self.atom(head)
        self.rules.append(Rule(h, tuple(body)))

    def constraint(self, body: Iterable[Literal]) -> None:
        self.constraints.append(Constraint(tuple(body)))

    def exactly_one_rules(self, names: Sequence[str]) -> None:
        # a_i <- not a_{i+1}, ..., not a_{i-1}, cyclically.
        k = len(names)
        for name in names:
            self.atom(name)
        for i in range(k):
            self.rule(names[i], [self.neg(names[(i + s) % k]) for s in range(1, k)])

    def exactly_one_constraints(self, names: Sequence[str]) -> None:
        for a, b in combinations(names, 2):
            self.constraint([self.pos(a), self.pos(b)])
        self.constraint([self.neg(a) for a in names])

    def build(self) -> Program:
        return Program(AtomTable(self.names), tuple(self.rules), tuple(self.constraints))


def _label(v: Hashable) -> str:
    return str(v)


def gen_3col(edges: Iterable[tuple[Hashable, Hashable]], vertices: Sequence[Hashable] | None = None) -> Program:
    """Three-coloring: atoms ``col(v,1..3)``, one exclusive choice per vertex, one clash constraint per edge and color.

    Vertices default to their order of first appearance in ``edges``.
    """
    edges = [tuple(e) for e in edges]
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u!r} cannot be colored")
    if vertices is None:
        vertices = list(dict.fromkeys(x for e in edges for x in e))
    else:
        known = set(vertices)
        missing = {x for e in edges for x in e} - known
        if missing:
            raise ValueError(f"edges mention unknown vertices {sorted(map(str, missing))}")
    b = _Builder()
    for v in vertices:
        b.exactly_one_rules([f"col({_label(v)},{k})" for k in (1, 2, 3)])
    for u, v in edges:
        for k in (1, 2, 3):
            b.constraint([b.pos(f"col({_label(u)},{k})"), b.pos(f"col({_label(v)},{k})")])
    return b.build()


def cycle_edges(n: int) -> list[tuple[int, int]]:
    if n < 3:
        raise ValueError("a cycle graph needs at least 3 vertices")
    return [(i, i % n + 1) for i in range(1, n + 1)]


def gen_cycle3col(n: int) -> Program:
    return gen_3col(cycle_edges(n), list(range(1, n + 1)))


def gen_hc(edges: Iterable[tuple[int, int]], n_vertices: int) -> Program:
    """Hamiltonian cycles of a digraph on vertices ``1..n_vertices`` as a tight program with constraints.

    ``h(i,j)`` selects edge ``i -> j``; ``u(j,q)`` says vertex ``j`` is visited at step ``q``.
    Rules pick one outgoing edge per vertex and propagate visit times from
    ``u(1,1)``. Constraints demand one incoming edge per vertex, one visit step
    per vertex, and that the edge back to vertex 1 leaves from step ``n``.
    A vertex without outgoing or incoming edges gets a constraint that always fails.
    """
    if n_vertices < 1:
        raise ValueError("need at least one vertex")
    edges = list(dict.fromkeys(tuple(e) for e in edges))
    if not edges:
        raise ValueError("edge list is empty")
    for i, j in edges:
        if not (1 <= i <= n_vertices and 1 <= j <= n_vertices):
            raise ValueError(f"edge {(i, j)} leaves the vertex range 1..{n_vertices}")
    N = n_vertices
    b = _Builder()
    for i, j in edges:
        b.atom(f"h({i},{j})")
    for j in range(1, N + 1):
        for q in range(1, N + 1):
            b.atom(f"u({j},{q})")
    start = "u(1,1)"
    never = [b.pos(start)]  # violated in every model, since u(1,1) is a fact

    for i in range(1, N + 1):
        out = [f"h({i},{j})" for (s, j) in edges if s == i]
        if out:
            b.exactly_one_rules(out)
        else:
            b.constraint(never)
    for i, j in edges:
        for q in range(2, N + 1):
            b.rule(f"u({j},{q})", [b.pos(f"h({i},{j})"), b.pos(f"u({i},{q - 1})")])
    b.rule(start)

    for j in range(1, N + 1):
        inc = [f"h({i},{j})" for (i, t) in edges if t == j]
        if inc:
            b.exactly_one_constraints(inc)
        else:
            b.constraint(never)
    for i, j in edges:
        if j == 1 and i != 1:
            b.constraint([b.pos(f"h({i},1)"), b.neg(f"u({i},{N})")])
    for i in range(1, N + 1):
        b.exactly_one_constraints([f"u({i},{q})" for q in range(1, N + 1)])
    return b.build()


def hc_edges_of_model(program: Program, model) -> frozenset[tuple[int, int]]:
    """Edges selected by a model of a :func:`gen_hc` program."""
    out = set()
    for name in program.true_atoms(model):
        if name.startswith("h("):
            i, j = name[2:-1].split(",")
            out.add((int(i), int(j)))
    return frozenset(out)


def _check_even(n: int) -> None:
    if n < 2 or n % 2:
        raise ValueError("n must be even and >= 2")


def gen_p4(n: int) -> Program:
    """The loopy family with ``n + 2`` atoms ``a0..a{n+1}`` and ``2n + 3`` rules.

    ``a0 <- a1, ..., an``; ``a0 <- not a{n+1}``; each pair ``(a{2i-1}, a{2i})``
    mutually derives itself or from ``a0``; ``a{n+1} <- a{n+1}``.
    """
    _check_even(n)
    return _loopy(n, 1)


def gen_p5(n: int, k: int) -> Program:
    """Like :func:`gen_p4` with ``k`` self-supporting atoms ``a{n+1}..a{n+k}`` blocking ``a0``."""
    _check_even(n)
    if k < 1:
        raise ValueError("k must be >= 1")
    return _loopy(n, k)


def _loopy(n: int, k: int) -> Program:
    b = _Builder()
    for i in range(n + k + 1):
        b.atom(f"a{i}")
    b.rule("a0", [b.pos(f"a{i}") for i in range(1, n + 1)])
    b.rule("a0", [b.neg(f"a{n + j}") for j in range(1, k + 1)])
    for i in range(1, n // 2 + 1):
        odd, even = f"a{2 * i - 1}", f"a{2 * i}"
        b.rule(odd, [b.pos("a0")])
        b.rule(odd, [b.pos(even)])
        b.rule(even, [b.pos("a0")])
        b.rule(even, [b.pos(odd)])
    for j in range(1, k + 1):
        b.rule(f"a{n + j}", [b.pos(f"a{n + j}")])
    return b.build()
