from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from vecasp.core import AtomTable, Constraint, Literal, Program, Rule
from vecasp.parser import parse_program

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

P0_TEXT = "p :- q, not r.\np :- not q.\nq.\n"


@pytest.fixture
def p0() -> Program:
    return parse_program(P0_TEXT)


def all_assignments(n: int):
    return (np.array(bits, dtype=np.uint8) for bits in itertools.product((0, 1), repeat=n))


@st.composite
def bodies(draw, n: int, max_len: int = 3, min_len: int = 0):
    size = draw(st.integers(min_len, max_len))
    return tuple(Literal(draw(st.integers(0, n - 1)), draw(st.booleans())) for _ in range(size))


@st.composite
def programs(draw, max_atoms: int = 6, max_rules: int = 10, max_constraints: int = 0, min_atoms: int = 1):
    n = draw(st.integers(min_atoms, max_atoms))
    m = draw(st.integers(0, max_rules))
    rules = [Rule(draw(st.integers(0, n - 1)), draw(bodies(n))) for _ in range(m)]
    k = draw(st.integers(0, max_constraints)) if max_constraints else 0
    cons = [Constraint(draw(bodies(n, min_len=1))) for _ in range(k)]
    return Program(AtomTable(f"x{i}" for i in range(n)), tuple(rules), tuple(cons))


def random_program(rng: np.random.Generator, n: int, m: int, k: int = 0, max_len: int = 3, neg_p: float = 0.4) -> Program:
    def body(min_len=0):
        size = int(rng.integers(min_len, max_len + 1))
        return tuple(Literal(int(rng.integers(n)), bool(rng.random() < neg_p)) for _ in range(size))

    rules = tuple(Rule(int(rng.integers(n)), body()) for _ in range(m))
    cons = tuple(Constraint(body(1)) for _ in range(k))
    return Program(AtomTable(f"x{i}" for i in range(n)), rules, cons)


def tight_program(rng: np.random.Generator, n: int, m: int) -> Program:
    """Positive body atoms always have a larger index than the head, so the dependency graph is acyclic."""
    rules = []
    for _ in range(m):
        h = int(rng.integers(n))
        body = []
        for _ in range(int(rng.integers(0, 4))):
            a = int(rng.integers(n))
            neg = a <= h or bool(rng.random() < 0.4)
            body.append(Literal(a, neg))
        rules.append(Rule(h, tuple(body)))
    return Program(AtomTable(f"x{i}" for i in range(n)), tuple(rules), ())


ACCEPTANCE_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_LINES] = []


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
