"""Conditional minimum of

    phi(x0, x_1, ..., x_r) = sum_j a_j (<x_j, x_j> + <1, x_j>^2)

over x0^2 + sum |x_j|^2 = 1 and x0 + sum <1, x_j> = 0.

Computed as the smallest eigenvalue of phi's matrix restricted to the
all-ones complement.  Nothing here calls into :mod:`qecstar.minroot`; the two
routes are meant to check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.sparse.linalg import LinearOperator, eigsh

from ._linalg import fix_sign, helmert_basis

__all__ = [
    "PhiInstance",
    "JShiftSolution",
    "phi_eval",
    "phi_matrix",
    "cond_min",
    "cond_min_zero_case",
    "stationarity_residual",
    "solve_J_shift",
]

# above this size the dense eigensolver is replaced by a matrix-free Lanczos run
DENSE_LIMIT = 1500
FEASIBILITY_TOL = 1e-8


@dataclass(frozen=True)
class PhiInstance:
    a: tuple[float, ...]
    d: tuple[int, ...]

    def __post_init__(self):
        a = tuple(float(x) for x in self.a)
        d = tuple(int(x) for x in self.d)
        if not a or len(a) != len(d):
            raise ValueError("a and d must be nonempty and of equal length")
        if any(x != y for x, y in zip(d, self.d)) or any(x < 1 for x in d):
            raise ValueError("d must consist of positive integers")
        if any(not x > 0 for x in a):
            raise ValueError("a must be positive; use cond_min_zero_case for a_j = 0")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "d", d)

    @property
    def dim(self) -> int:
        return 1 + sum(self.d)

    def split(self, z: np.ndarray) -> tuple[float, list[np.ndarray]]:
        offsets = np.cumsum((1,) + self.d)
        return float(z[0]), [z[lo:hi] for lo, hi in zip(offsets[:-1], offsets[1:])]


def _check_blocks(inst: PhiInstance, xs: Sequence[np.ndarray]) -> list[np.ndarray]:
    xs = [np.asarray(x, dtype=float).ravel() for x in xs]
    if len(xs) != len(inst.d) or any(x.size != d for x, d in zip(xs, inst.d)):
        raise ValueError(f"block sizes {[x.size for x in xs]} do not match d={inst.d}")
    return xs


def phi_eval(inst: PhiInstance, x0: float, xs: Sequence[np.ndarray]) -> float:
    """Value of phi; ``x0`` does not enter."""
    xs = _check_blocks(inst, xs)
    return float(sum(a * (x @ x + x.sum() ** 2) for a, x in zip(inst.a, xs)))


def phi_matrix(inst: PhiInstance) -> np.ndarray:
    """Block diagonal diag(0, a_1 (I + J), ..., a_r (I + J))."""
    N = inst.dim
    Q = np.zeros((N, N))
    start = 1
    for a, d in zip(inst.a, inst.d):
        Q[start:start + d, start:start + d] = a * (np.eye(d) + np.ones((d, d)))
        start += d
    return Q


def _smallest_dense(inst: PhiInstance) -> np.ndarray:
    H = helmert_basis(inst.dim)
    B = H.T @ phi_matrix(inst) @ H
    _, V = np.linalg.eigh(B)
    return H @ V[:, 0]


def _smallest_lanczos(inst: PhiInstance) -> np.ndarray:
    # P Phi P + sigma * 11^T/N: the ones direction is pushed to sigma, above the spectrum
    N = inst.dim
    a = np.repeat(np.concatenate(([0.0], inst.a)), (1,) + inst.d)
    starts = np.concatenate(([0], np.cumsum((1,) + inst.d)[:-1]))
    sigma = 2.0 * max(x * (d + 1) for x, d in zip(inst.a, inst.d))

    def matvec(z):
        z = np.ravel(z)
        zp = z - z.mean()
        sums = np.add.reduceat(zp, starts)
        sums[0] = 0.0
        y = a * (zp + np.repeat(sums, (1,) + inst.d))
        return y - y.mean() + sigma * z.mean()

    op = LinearOperator((N, N), matvec=matvec, dtype=float)
    v0 = np.linspace(-1.0, 1.0, N)
    _, V = eigsh(op, k=1, which="SA", v0=v0, tol=1e-14, maxiter=20 * N)
    v = V[:, 0]
    return v - v.mean()


def cond_min(inst: PhiInstance, method: str = "auto") -> tuple[float, tuple[float, list[np.ndarray]]]:
    """Conditional minimum and a minimizer ``(x0, [x_1, ..., x_r])``.

    ``method`` is ``dense`` (Helmert basis + full symmetric eigensolve),
    ``lanczos`` (matrix-free, for large d) or ``auto``.  The minimizer is a
    unit vector whose first non-negligible coordinate is positive; the
    returned value is phi evaluated there.
    """
    if method == "auto":
        method = "dense" if inst.dim <= DENSE_LIMIT else "lanczos"
    if method == "dense":
        z = _smallest_dense(inst)
    elif method == "lanczos":
        z = _smallest_lanczos(inst)
    else:
        raise ValueError(f"unknown method {method!r}")
    z = fix_sign(z / np.linalg.norm(z))
    x0, xs = inst.split(z)
    return phi_eval(inst, x0, xs), (x0, xs)


def cond_min_zero_case(a: Sequence[float], d: Sequence[int]) -> float:
    """The conditional minimum when some a_j vanishes: exactly 0."""
    if len(a) != len(d) or not a:
        raise ValueError("a and d must be nonempty and of equal length")
    if any(x < 0 for x in a):
        raise ValueError("a must be nonnegative")
    if all(x > 0 for x in a):
        raise ValueError("no a_j is zero; use cond_min")
    return 0.0


def stationarity_residual(inst: PhiInstance, x0: float, xs: Sequence[np.ndarray], lam: float) -> float:
    """Max-norm of the Lagrange residual 2a x + 2a <1,x> 1 - 2 lam x - mu 1, mu = -2 lam x0.

    Raises if (x0, xs) violates either constraint by more than 1e-8.
    """
    xs = _check_blocks(inst, xs)
    norm = x0 ** 2 + sum(x @ x for x in xs)
    total = x0 + sum(x.sum() for x in xs)
    if abs(norm - 1.0) > FEASIBILITY_TOL or abs(total) > FEASIBILITY_TOL:
        raise ValueError(f"infeasible point: |z|^2={norm}, <1,z>={total}")
    mu = -2.0 * lam * x0
    return max(
        float(np.max(np.abs(2 * a * x + 2 * a * x.sum() - 2 * lam * x - mu)))
        for a, x in zip(inst.a, xs)
    )


@dataclass(frozen=True)
class JShiftSolution:
    """Solution set of (J - alpha I) x = beta 1.

    kind is ``unique``, ``affine`` (particular + ker J), ``span_ones`` or
    ``none``; ``particular`` is None when there is no solution.
    """

    kind: str
    particular: np.ndarray | None
    kernel_dim: int


def solve_J_shift(m: int, alpha: float, beta: float) -> JShiftSolution:
    if m < 1:
        raise ValueError("m must be >= 1")
    ones = np.ones(m)
    if alpha == 0:
        kind = "unique" if m == 1 else "affine"
        return JShiftSolution(kind, beta / m * ones, m - 1)
    if alpha == m:
        if beta == 0:
            return JShiftSolution("span_ones", np.zeros(m), 1)
        return JShiftSolution("none", None, 0)
    return JShiftSolution("unique", beta / (m - alpha) * ones, 0)
