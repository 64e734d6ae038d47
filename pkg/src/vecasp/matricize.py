"""Matrix encoding of programs and constraints.

A program with ``n`` atoms and ``m`` rules becomes a pair ``(D, Q)``: ``D`` is
``n x m`` with ``D[i, j] = 1`` iff rule ``j`` has head ``i``, and
``Q = [Q1 Q2]`` is ``m x 2n`` with the positive (``Q1``) and negative
(``Q2``) body occurrences of each rule. Constraint bodies are encoded the same
way in ``Qc = [Qc1 Qc2]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .core import Program


def _bool_csr(rows, cols, shape) -> sp.csr_matrix:
    data = np.ones(len(rows), dtype=np.float64)
    mat = sp.csr_matrix((data, (np.asarray(rows, dtype=np.int64), np.asarray(cols, dtype=np.int64))), shape=shape)
    mat.sum_duplicates()
    mat.data[:] = 1.0
    return mat


def _body_matrices(bodies, n: int):
    r1, c1, r2, c2 = [], [], [], []
    for j, body in enumerate(bodies):
        for l in body:
            if l.negated:
                r2.append(j)
                c2.append(l.atom)
            else:
                r1.append(j)
                c1.append(l.atom)
    k = len(bodies)
    return _bool_csr(r1, c1, (k, n)), _bool_csr(r2, c2, (k, n))


@dataclass(frozen=True, eq=False)
class MatricizedProgram:
    D: sp.csr_matrix
    Q1: sp.csr_matrix
    Q2: sp.csr_matrix
    DT: sp.csr_matrix = field(init=False, repr=False)
    W: sp.csr_matrix = field(init=False, repr=False)
    WT: sp.csr_matrix = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "DT", self.D.T.tocsr())
        W = (self.Q1 - self.Q2).tocsr()
        object.__setattr__(self, "W", W)
        object.__setattr__(self, "WT", W.T.tocsr())

    @property
    def n(self) -> int:
        return self.D.shape[0]

    @property
    def m(self) -> int:
        return self.D.shape[1]

    @property
    def Q(self) -> sp.csr_matrix:
        return sp.hstack([self.Q1, self.Q2], format="csr")


@dataclass(frozen=True, eq=False)
class ConstraintMatrix:
    Qc1: sp.csr_matrix
    Qc2: sp.csr_matrix
    WcT: sp.csr_matrix = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "WcT", (self.Qc1 - self.Qc2).T.tocsr())

    @property
    def k(self) -> int:
        return self.Qc1.shape[0]

    @property
    def n(self) -> int:
        return self.Qc1.shape[1]

    @property
    def Qc(self) -> sp.csr_matrix:
        return sp.hstack([self.Qc1, self.Qc2], format="csr")


@dataclass(frozen=True, eq=False)
class ReluView:
    """``M = ReLU(W u + b)`` with ``W = Q1 - Q2`` and ``b = 1 - Q1 1``."""

    W: np.ndarray
    b: np.ndarray

    def hidden(self, u) -> np.ndarray:
        return np.maximum(self.W @ np.asarray(u, dtype=np.float64) + self.b, 0.0)


def matricize(program: Program) -> tuple[MatricizedProgram, ConstraintMatrix]:
    n, m = program.n, program.m
    D = _bool_csr([r.head for r in program.rules], list(range(m)), (n, m))
    Q1, Q2 = _body_matrices([r.body for r in program.rules], n)
    Qc1, Qc2 = _body_matrices([c.body for c in program.constraints], n)
    return MatricizedProgram(D, Q1, Q2), ConstraintMatrix(Qc1, Qc2)


def constraint_matrix(program: Program) -> ConstraintMatrix:
    return ConstraintMatrix(*_body_matrices([c.body for c in program.constraints], program.n))


def relu_view(mp: MatricizedProgram) -> ReluView:
    W = (mp.Q1 - mp.Q2).toarray().astype(np.int64)
    b = 1 - np.asarray(mp.Q1.sum(axis=1)).ravel().astype(np.int64)
    return ReluView(W, b)


def dump_triplets(mp: MatricizedProgram, cm: ConstraintMatrix) -> str:
    """Debug dump: header ``n m k``, then ``row col value`` lines for D, Q and Qc.

    Sections are introduced by ``# D``, ``# Q`` and ``# Qc`` lines; indices are
    1-based and Q/Qc columns run over the dualized ``2n`` range.
    """
    out = [f"{mp.n} {mp.m} {cm.k}"]
    for tag, mat in (("D", mp.D), ("Q", mp.Q), ("Qc", cm.Qc)):
        out.append(f"# {tag}")
        coo = mat.tocoo()
        for i, j, v in sorted(zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist())):
            out.append(f"{i + 1} {j + 1} {int(v)}")
    return "\n".join(out) + "\n"
