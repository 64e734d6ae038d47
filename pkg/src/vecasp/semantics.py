"""Evaluation of programs over (possibly relaxed) truth vectors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import as_model
from .matricize import MatricizedProgram


def min1(x):
    """Component-wise ``min(x, 1)``; nothing is clamped below."""
    return np.minimum(x, 1.0)


def dualize(u) -> np.ndarray:
    u = np.asarray(u, dtype=np.float64)
    return np.concatenate([u, 1.0 - u])


@dataclass(frozen=True)
class EvalVectors:
    u: np.ndarray
    u_delta: np.ndarray
    N: np.ndarray  # false-literal counts per rule body
    M: np.ndarray  # body truth values
    d: np.ndarray  # true-disjunct counts per atom


def _as_vector(u, n: int) -> np.ndarray:
    u = np.asarray(u, dtype=np.float64)
    if u.ndim != 1 or u.shape[0] != n:
        raise ValueError(f"expected a vector of length {n}, got shape {u.shape}")
    return u


def false_counts(mp: MatricizedProgram, u: np.ndarray) -> np.ndarray:
    return mp.Q1 @ (1.0 - u) + mp.Q2 @ u


def eval_vectors(mp: MatricizedProgram, u) -> EvalVectors:
    u = _as_vector(u, mp.n)
    N = false_counts(mp, u)
    M = 1.0 - min1(N)
    d = mp.D @ M
    return EvalVectors(u, dualize(u), N, M, d)


def supported_residual(mp: MatricizedProgram, u) -> float:
    """``||u - min1(d)||_2`` for a binary ``u``; zero iff ``u`` is a supported model."""
    bits = as_model(u, mp.n).astype(np.float64)
    ev = eval_vectors(mp, bits)
    return float(np.linalg.norm(bits - min1(ev.d)))


def reduct_residual(mp: MatricizedProgram, u) -> float:
    """Same residual computed through the matricized reduct of the program by ``u``."""
    bits = as_model(u, mp.n).astype(np.float64)
    M2 = 1.0 - min1(mp.Q2 @ bits)
    M1 = M2 * (1.0 - min1(mp.Q1 @ (1.0 - bits)))
    d_plus = mp.D @ M1
    return float(np.linalg.norm(bits - min1(d_plus)))
