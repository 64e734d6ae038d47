import math

import numpy as np
import pytest
from hypothesis import given

from vecasp.core import Literal, Program, Rule
from vecasp.matricize import matricize
from vecasp.oracle import is_supported
from vecasp.parser import parse_program
from vecasp.semantics import dualize, eval_vectors, min1, reduct_residual, supported_residual

from conftest import all_assignments, programs


def test_dualize():
    np.testing.assert_array_equal(dualize([1, 1, 0]), [1, 1, 0, 0, 0, 1])
    assert dualize([]).size == 0
    np.testing.assert_array_equal(dualize([0.5]), [0.5, 0.5])


def test_min1_has_no_lower_clamp():
    np.testing.assert_array_equal(min1(np.array([-2.0, 0.5, 3.0])), [-2.0, 0.5, 1.0])


def test_eval_vectors_p0_at_pq(p0):
    ev = eval_vectors(matricize(p0)[0], [1, 1, 0])
    np.testing.assert_array_equal(ev.N, [0, 1, 0])
    np.testing.assert_array_equal(ev.M, [1, 0, 1])
    np.testing.assert_array_equal(ev.d, [1, 1, 0])
    np.testing.assert_array_equal(ev.u_delta, [1, 1, 0, 0, 0, 1])


def test_eval_vectors_p0_at_zero(p0):
    ev = eval_vectors(matricize(p0)[0], [0, 0, 0])
    np.testing.assert_array_equal(ev.d, [1, 1, 0])


def test_eval_vectors_facts_only():
    mp, _ = matricize(parse_program("a.\nb."))
    np.testing.assert_array_equal(eval_vectors(mp, [0.3, 0.9]).M, [1, 1])


def test_eval_vectors_length_mismatch(p0):
    with pytest.raises(ValueError):
        eval_vectors(matricize(p0)[0], [1, 0])


def test_residuals_on_p0(p0):
    mp, _ = matricize(p0)
    assert supported_residual(mp, [1, 1, 0]) == 0
    assert supported_residual(mp, [0, 0, 0]) == pytest.approx(math.sqrt(2), abs=1e-15)
    assert reduct_residual(mp, [1, 1, 0]) == 0


def test_residual_of_empty_program():
    mp, _ = matricize(Program())
    assert supported_residual(mp, []) == 0


def test_residuals_reject_relaxed_vectors(p0):
    mp, _ = matricize(p0)
    with pytest.raises(ValueError):
        supported_residual(mp, [0.5, 1, 0])
    with pytest.raises(ValueError):
        reduct_residual(mp, [1, 1, 2])


def test_binary_counts_match_symbolic_counts(p0):
    mp, _ = matricize(p0)
    for bits in all_assignments(3):
        ev = eval_vectors(mp, bits)
        for j, r in enumerate(p0.rules):
            false = sum(bool(bits[l.atom]) == l.negated for l in r.body)
            assert ev.N[j] == false


@given(programs(max_atoms=6, max_rules=10))
def test_supported_and_reduct_residuals_agree(prog):
    mp, _ = matricize(prog)
    for bits in all_assignments(prog.n):
        r = supported_residual(mp, bits)
        assert r == reduct_residual(mp, bits)
        assert (r == 0) == is_supported(prog, bits)


def test_definite_program_residuals_agree():
    prog = parse_program("a :- b.\nb :- c, a.\nc.")
    mp, _ = matricize(prog)
    for bits in all_assignments(3):
        assert supported_residual(mp, bits) == reduct_residual(mp, bits)


def test_adding_true_bodied_rule_raises_d():
    prog = parse_program("a :- b.\nb.")
    bits = np.array([1, 1])
    before = eval_vectors(matricize(prog)[0], bits).d[0]
    grown = Program(prog.atoms, prog.rules + (Rule(0, (Literal(1),)),))
    after = eval_vectors(matricize(grown)[0], bits).d[0]
    assert after == before + 1
