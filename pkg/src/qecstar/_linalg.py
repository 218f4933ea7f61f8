"""Shared helpers for eigenproblems restricted to the hyperplane <1, x> = 0."""

from __future__ import annotations

import numpy as np


def helmert_basis(n: int) -> np.ndarray:
    """Orthonormal basis of the all-ones complement in R^n, as an n x (n-1) array.

    Column k-1 (k = 1..n-1) has k leading entries 1/sqrt(k(k+1)) followed by
    -k/sqrt(k(k+1)) at position k.
    """
    if n < 1:
        raise ValueError("n must be positive")
    k = np.arange(1, n, dtype=float)
    scale = 1.0 / np.sqrt(k * (k + 1.0))
    rows = np.arange(n)[:, None]
    cols = np.arange(1, n)[None, :]
    H = np.where(rows < cols, scale, 0.0)
    H[np.arange(1, n), np.arange(n - 1)] = -k * scale
    return H


def fix_sign(v: np.ndarray, atol: float = 1e-12) -> np.ndarray:
    """Flip ``v`` so that its first non-negligible coordinate is positive."""
    nz = np.flatnonzero(np.abs(v) > atol)
    if nz.size and v[nz[0]] < 0:
        return -v
    return v
