"""Supported and stable models of normal logic programs by cost minimization over sparse matrices."""

from .core import AtomTable, Constraint, Literal, Program, Rule, build_program, completion_bodies, gl_reduct
from .costs import CostBreakdown, CostWeights, cost_constraints, cost_lf, cost_su, cost_total
from .loops import LoopSet, build_pdg, loops_all, loops_cycles, loops_scc
from .matricize import ConstraintMatrix, MatricizedProgram, matricize, relu_view
from .parser import ParseError, parse_program, render_program
from .precompute import expand_model, least_model, positivize, precompute
from .semantics import dualize, eval_vectors, reduct_residual, supported_residual
from .solver import SolveResult, SolverOptions, enumerate_solutions, solve

__all__ = [
    "AtomTable", "Constraint", "Literal", "Program", "Rule", "build_program", "completion_bodies", "gl_reduct",
    "CostBreakdown", "CostWeights", "cost_constraints", "cost_lf", "cost_su", "cost_total",
    "LoopSet", "build_pdg", "loops_all", "loops_cycles", "loops_scc",
    "ConstraintMatrix", "MatricizedProgram", "matricize", "relu_view",
    "ParseError", "parse_program", "render_program",
    "expand_model", "least_model", "positivize", "precompute",
    "dualize", "eval_vectors", "reduct_residual", "supported_residual",
    "SolveResult", "SolverOptions", "enumerate_solutions", "solve",
]
