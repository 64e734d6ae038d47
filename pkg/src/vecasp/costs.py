"""Non-negative cost functions whose binary roots are the wanted models.

With ``N = Q1 (1 - u) + Q2 u``, ``M = 1 - min1(N)``, ``d = D M``,
``E = min1(d) - u`` and ``F = u * (1 - u)``:

* ``J_SU = 0.5 * (E.E + l2 * F.F)``       zero iff ``u`` is a supported model
* ``J_c  = sum(1 - min1(Nc))``            number of violated constraints on binary ``u``
* ``J_LF = sum_s (1 - min1(A_s))``        with ``A_s = Lmem[s] (1 - u) + Lsup[s] M``

and ``total = J_SU + l3 * J_c + l4 * J_LF``. Gradients use ``[x <= 1]`` as the
derivative of ``min1`` at and below the kink.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .loops import LoopSet
from .matricize import ConstraintMatrix, MatricizedProgram
from .semantics import min1


@dataclass(frozen=True)
class CostWeights:
    l2: float = 0.1
    l3: float = 0.1
    l4: float = 1.0

    def __post_init__(self):
        if min(self.l2, self.l3, self.l4) < 0:
            raise ValueError("cost weights must be non-negative")


@dataclass(frozen=True)
class CostBreakdown:
    j_sq: float
    j_nrm: float
    j_c: float
    j_lf: float
    total: float
    grad: np.ndarray


def _vec(u, n: int) -> np.ndarray:
    u = np.asarray(u, dtype=np.float64)
    if u.ndim != 1 or u.shape[0] != n:
        raise ValueError(f"expected a vector of length {n}, got shape {u.shape}")
    return u


def _su_parts(mp: MatricizedProgram, u: np.ndarray, N: np.ndarray, M: np.ndarray):
    d = mp.D @ M
    E = min1(d) - u
    F = u * (1.0 - u)
    back = mp.DT @ ((d <= 1.0) * E)
    g_sq = mp.WT @ ((N <= 1.0) * back) - E
    g_nrm = (1.0 - 2.0 * u) * F
    return float(E @ E), float(F @ F), g_sq, g_nrm


def _lf_parts(mp: MatricizedProgram, loops: LoopSet, u: np.ndarray, N: np.ndarray, M: np.ndarray):
    if loops.t == 0:
        return 0.0, np.zeros_like(u)
    A = loops.Lmem @ (1.0 - u) + loops.Lsup @ M
    value = float(np.sum(1.0 - min1(A)))
    act = (A <= 1.0).astype(np.float64)
    grad = loops.Lmem.T @ act - mp.WT @ ((N <= 1.0) * (loops.Lsup.T @ act))
    return value, grad


def _c_parts(cm: ConstraintMatrix, u: np.ndarray):
    if cm.k == 0:
        return 0.0, np.zeros_like(u)
    Nc = cm.Qc1 @ (1.0 - u) + cm.Qc2 @ u
    value = float(np.sum(1.0 - min1(Nc)))
    grad = cm.WcT @ (Nc <= 1.0).astype(np.float64)
    return value, grad


def _forward(mp: MatricizedProgram, u: np.ndarray):
    N = mp.Q1 @ (1.0 - u) + mp.Q2 @ u
    return N, 1.0 - min1(N)


def cost_su(mp: MatricizedProgram, u, l2: float) -> tuple[float, np.ndarray]:
    u = _vec(u, mp.n)
    N, M = _forward(mp, u)
    j_sq, j_nrm, g_sq, g_nrm = _su_parts(mp, u, N, M)
    return 0.5 * (j_sq + l2 * j_nrm), g_sq + l2 * g_nrm


def cost_constraints(cm: ConstraintMatrix, u) -> tuple[float, np.ndarray]:
    return _c_parts(cm, _vec(u, cm.n))


def cost_lf(mp: MatricizedProgram, loops: LoopSet, u) -> tuple[float, np.ndarray]:
    u = _vec(u, mp.n)
    N, M = _forward(mp, u)
    return _lf_parts(mp, loops, u, N, M)


def cost_total(
    mp: MatricizedProgram,
    cm: ConstraintMatrix,
    loops: LoopSet,
    u,
    weights: CostWeights,
) -> CostBreakdown:
    u = _vec(u, mp.n)
    if cm.n != mp.n or loops.Lmem.shape[1] != mp.n or loops.Lsup.shape[1] != mp.m:
        raise ValueError("program, constraint and loop matrices disagree in size")
    N, M = _forward(mp, u)
    j_sq, j_nrm, g_sq, g_nrm = _su_parts(mp, u, N, M)
    total = 0.5 * (j_sq + weights.l2 * j_nrm)
    grad = g_sq + weights.l2 * g_nrm
    j_c = j_lf = 0.0
    if cm.k:
        j_c, g_c = _c_parts(cm, u)
        if weights.l3:
            total += weights.l3 * j_c
            grad = grad + weights.l3 * g_c
    if loops.t:
        j_lf, g_lf = _lf_parts(mp, loops, u, N, M)
        if weights.l4:
            total += weights.l4 * j_lf
            grad = grad + weights.l4 * g_lf
    return CostBreakdown(j_sq, j_nrm, j_c, j_lf, total, grad)
