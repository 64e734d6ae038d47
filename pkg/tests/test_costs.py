import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from vecasp.core import build_program
from vecasp.costs import CostWeights, cost_constraints, cost_lf, cost_su, cost_total
from vecasp.generators import gen_p4
from vecasp.loops import empty_loopset, loops_all, loops_scc
from vecasp.matricize import constraint_matrix, matricize
from vecasp.oracle import is_stable, is_supported, satisfies_constraints
from vecasp.parser import parse_program

import gradcheck
from conftest import all_assignments, programs, random_program


def test_cost_su_root_of_p0(p0):
    mp, _ = matricize(p0)
    value, grad = cost_su(mp, [1, 1, 0], 0.1)
    assert value == 0
    np.testing.assert_array_equal(grad, 0)


def test_cost_su_p0_at_zero(p0):
    mp, _ = matricize(p0)
    value, _ = cost_su(mp, [0, 0, 0], 0.1)
    assert value == 1.0


def test_cost_su_length_mismatch(p0):
    mp, _ = matricize(p0)
    with pytest.raises(ValueError):
        cost_su(mp, [0, 0], 0.1)


def test_constraint_cost_counts_violations():
    prog = parse_program(":- p, q.\nr.")
    cm = constraint_matrix(prog)
    assert cost_constraints(cm, [1, 1, 0])[0] == 1
    assert cost_constraints(cm, [1, 0, 0])[0] == 0


def test_empty_constraint_matrix(p0):
    value, grad = cost_constraints(constraint_matrix(p0), [0.3, 0.2, 0.9])
    assert value == 0 and not grad.any()


def test_lf_cost_on_two_cycle():
    prog = parse_program("a :- b.\nb :- a.")
    mp, _ = matricize(prog)
    loops = loops_scc(prog)
    assert cost_lf(mp, loops, [1, 1])[0] == 1
    assert cost_lf(mp, loops, [0, 0])[0] == 0


def test_lf_cost_empty_loopset(p0):
    mp, _ = matricize(p0)
    value, grad = cost_lf(mp, empty_loopset(p0), [0.2, 0.4, 0.6])
    assert value == 0 and not grad.any()


def test_total_at_p0_root(p0):
    mp, cm = matricize(p0)
    assert cost_total(mp, cm, empty_loopset(p0), [1, 1, 0], CostWeights()).total == 0


def test_total_zero_at_p4_stable_model():
    prog = gen_p4(4)
    mp, cm = matricize(prog)
    u = prog.model(["a0", "a1", "a2", "a3", "a4"]).astype(float)
    assert cost_total(mp, cm, loops_scc(prog), u, CostWeights()).total == 0


def test_total_breakdown_formula():
    rng = np.random.default_rng(5)
    prog = random_program(rng, 6, 10, 3)
    mp, cm = matricize(prog)
    loops = loops_all(prog)
    w = CostWeights(0.3, 0.7, 1.9)
    u = rng.random(6)
    b = cost_total(mp, cm, loops, u, w)
    assert b.total == pytest.approx(0.5 * (b.j_sq + w.l2 * b.j_nrm) + w.l3 * b.j_c + w.l4 * b.j_lf, rel=1e-14)


def test_zero_weights_remove_terms():
    prog = parse_program("a :- b.\nb :- a.\n:- a.")
    mp, cm = matricize(prog)
    loops = loops_scc(prog)
    u = np.array([0.9, 0.8])
    full = cost_total(mp, cm, loops, u, CostWeights(0.1, 0.0, 0.0))
    su_value, su_grad = cost_su(mp, u, 0.1)
    assert full.total == su_value
    np.testing.assert_array_equal(full.grad, su_grad)
    assert full.j_c > 0 and full.j_lf > 0  # still reported


def test_dimension_mismatch():
    a = parse_program("a :- b.")
    b = parse_program("a :- b, c.")
    mp, _ = matricize(a)
    with pytest.raises(ValueError):
        cost_total(mp, constraint_matrix(b), empty_loopset(a), [0.5, 0.5], CostWeights())


def test_negative_weights_rejected():
    with pytest.raises(ValueError):
        CostWeights(l2=-0.1)


@given(programs(max_atoms=6, max_rules=10, max_constraints=3))
def test_supported_roots_match_oracle(prog):
    mp, cm = matricize(prog)
    loops = empty_loopset(prog)
    for bits in all_assignments(prog.n):
        su = cost_su(mp, bits.astype(float), 0.1)[0]
        assert (su == 0) == is_supported(prog, bits)
        total = cost_total(mp, cm, loops, bits.astype(float), CostWeights(l4=0.0)).total
        assert (total == 0) == (is_supported(prog, bits) and satisfies_constraints(prog, bits))


@given(programs(max_atoms=6, max_rules=10, max_constraints=2))
def test_all_loop_roots_are_exactly_stable_models(prog):
    mp, cm = matricize(prog)
    loops = loops_all(prog)
    assert not loops.truncated
    for bits in all_assignments(prog.n):
        total = cost_total(mp, cm, loops, bits.astype(float), CostWeights()).total
        assert (total == 0) == (is_stable(prog, bits) and satisfies_constraints(prog, bits))


@given(programs(max_atoms=6, max_rules=10, max_constraints=3), st.integers(0, 2**32 - 1))
def test_costs_are_non_negative_on_unit_cube(prog, seed):
    rng = np.random.default_rng(seed)
    mp, cm = matricize(prog)
    loops = loops_all(prog)
    for u in rng.random((20, prog.n)):
        b = cost_total(mp, cm, loops, u, CostWeights())
        assert min(b.j_sq, b.j_nrm, b.j_c, b.j_lf, b.total) >= 0


def test_gradients_match_finite_differences():
    rng = np.random.default_rng(17)
    w = CostWeights(0.1, 0.1, 1.0)
    for _ in range(5):
        prog = random_program(rng, 6, 12, 3)
        mp, cm = matricize(prog)
        loops = loops_all(prog)
        pts = gradcheck.sample_points(rng, mp, cm, loops, 50)
        assert len(pts) == 50
        for name, err in gradcheck.worst_errors(mp, cm, loops, w, pts).items():
            assert err <= 1e-6, name


def test_lf_gradient_on_loopy_program():
    prog = gen_p4(4)
    mp, cm = matricize(prog)
    loops = loops_all(prog)
    rng = np.random.default_rng(0)
    pts = gradcheck.sample_points(rng, mp, cm, loops, 30)
    assert gradcheck.worst_errors(mp, cm, loops, CostWeights(), pts)["cost_lf"] <= 1e-6


def test_kink_gradient_takes_active_branch():
    # a :- not b. at u = (0, 0): N = 0 <= 1 and d = 1 <= 1, both branches active.
    prog = build_program([("a", ["not b"])])
    mp, _ = matricize(prog)
    _, grad = cost_su(mp, [0.0, 0.0], 0.0)
    # E = min1(d) - u = (1, 0); dJ/db = W^T [N<=1] D^T [d<=1] E = -1
    np.testing.assert_array_equal(grad, [-1.0, -1.0])
