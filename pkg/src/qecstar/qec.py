"""Quadratic embedding constants of finite graphs.

    QEC(G) = max { <f, D f> : <f, f> = 1, <1, f> = 0 }

where D is the distance matrix.  The maximum is the top eigenvalue of D
compressed to the all-ones complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.linalg import cholesky, solve_triangular

from ._linalg import fix_sign, helmert_basis
from .graphs import Graph, distance_matrix

__all__ = [
    "QECResult",
    "qec_exact",
    "qec_rayleigh",
    "qec_path_pencil",
    "path_pencil_result",
    "thm56_bounds",
    "alternating_witness",
    "tree_qec_bound_check",
]

ORTHO_TOL = 1e-10


@dataclass(frozen=True)
class QECResult:
    value: float
    optimizer: np.ndarray
    method: str
    residual: float


def _constrained_residual(D: np.ndarray, f: np.ndarray, value: float) -> float:
    g = D @ f
    g -= g.mean()
    return float(np.max(np.abs(g - value * f)))


def qec_exact(g: Graph) -> QECResult:
    """Largest eigenvalue of H^T D H for the Helmert basis H, with its eigenvector.

    ``residual`` is the max-norm of P D f - QEC f, P the projection onto the
    all-ones complement.
    """
    n = g.vertex_count
    if n < 2:
        raise ValueError("QEC needs a graph with at least 2 vertices")
    D = distance_matrix(g).astype(float)
    H = helmert_basis(n)
    w, V = np.linalg.eigh(H.T @ D @ H)
    f = H @ V[:, -1]
    f = fix_sign(f / np.linalg.norm(f))
    value = float(w[-1])
    return QECResult(value, f, "projected_eigen", _constrained_residual(D, f, value))


def qec_rayleigh(g: Graph, f) -> float:
    """<f, D f> / <f, f> for nonzero f with <1, f> = 0."""
    f = np.asarray(f, dtype=float)
    if f.shape != (g.vertex_count,):
        raise ValueError("f must have one entry per vertex")
    norm2 = float(f @ f)
    if norm2 == 0:
        raise ValueError("f must be nonzero")
    if abs(f.sum()) > ORTHO_TOL * max(1.0, np.sqrt(norm2)):
        raise ValueError("f is not orthogonal to the all-ones vector")
    D = distance_matrix(g)
    return float(f @ (D @ f)) / norm2


def _pencil(m: int) -> tuple[np.ndarray, np.ndarray]:
    idx = np.arange(1, m + 1)
    M = 2.0 * np.minimum.outer(idx, idx)
    L = cholesky(np.ones((m, m)) + np.eye(m), lower=True)
    X = solve_triangular(L, M, lower=True)
    C = solve_triangular(L, X.T, lower=True)
    return 0.5 * (C + C.T), L


def qec_path_pencil(n: int) -> float:
    """QEC(P_n) = -c, c the smallest eigenvalue of the pencil (2 min(i,j), J + I)
    of size n - 1, reduced to a symmetric problem through the Cholesky factor
    of J + I."""
    if n < 2:
        raise ValueError("path pencil needs n >= 2")
    C, _ = _pencil(n - 1)
    return -float(np.linalg.eigvalsh(C)[0])


def path_pencil_result(n: int) -> QECResult:
    """:func:`qec_path_pencil` with the optimizer rebuilt on the vertices of P_n."""
    if n < 2:
        raise ValueError("path pencil needs n >= 2")
    C, L = _pencil(n - 1)
    w, V = np.linalg.eigh(C)
    x = solve_triangular(L.T, V[:, 0], lower=False)
    f = np.concatenate(([-x.sum()], x))
    f = fix_sign(f / np.linalg.norm(f))
    D = _path_distances(n)
    value = -float(w[0])
    return QECResult(value, f, "path_pencil", _constrained_residual(D, f, value))


def _path_distances(n: int) -> np.ndarray:
    idx = np.arange(n)
    return np.abs(idx[:, None] - idx[None, :]).astype(float)


def thm56_bounds(n: int) -> tuple[Fraction, Fraction]:
    """Exact bounds  -(2n^4 + 20n^2 - 7 + 15(-1)^n) / (4n^4 - 4 + 15n + 15n(-1)^n) <= QEC(P_n) <= -1/2."""
    if n < 2:
        raise ValueError("bounds hold for n >= 2")
    s = (-1) ** n
    lower = -Fraction(2 * n**4 + 20 * n**2 - 7 + 15 * s, 4 * n**4 - 4 + 15 * n + 15 * n * s)
    return lower, Fraction(-1, 2)


def alternating_witness(n: int) -> np.ndarray:
    """Integer vector f(i) = i(n-i)(-1)^i on 1..n-1, f(0) = -sum; <1, f> = 0."""
    if n < 2:
        raise ValueError("witness needs n >= 2")
    i = np.arange(1, n, dtype=np.int64)
    tail = i * (n - i) * np.where(i % 2 == 0, 1, -1)
    return np.concatenate(([-tail.sum()], tail))


def tree_qec_bound_check(g: Graph) -> bool:
    """Whether QEC(g) < -1/(|V| - 1) for a tree g (the bound is strict from |V| = 3 on)."""
    if not g.is_tree():
        raise ValueError("graph is not a tree")
    return qec_exact(g).value < -1.0 / (g.vertex_count - 1)
