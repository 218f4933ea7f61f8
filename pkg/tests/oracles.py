"""Independent reference computations used by the tests.

None of these call into the package's root finders or eigen solvers.
"""

import math

import mpmath
import numpy as np

mpmath.mp.dps = 40


def mp_min_root(a, d):
    """Minimal root at 40 digits by the Illinois method on [harmonic, min a]."""
    a = [mpmath.mpf(x) for x in a]

    def f(lam):
        s = mpmath.mpf(0)
        for aj, dj in zip(a, d):
            s += 1 / aj if math.isinf(dj) else mpmath.mpf(dj) / (aj * dj + aj - lam)
        return s - 1 / lam

    lo = 1 / mpmath.fsum(1 / x for x in a)
    if all(math.isinf(x) for x in d):
        return float(lo)
    if len(a) == 1:
        return float(a[0])
    hi = min(a)
    return float(mpmath.findroot(f, (lo, hi), solver="illinois", tol=mpmath.mpf(10) ** -35))


def helmert_free_cond_min(a, d):
    """Smallest eigenvalue of Phi on the ones-complement, via a QR basis
    (not the Helmert construction used by the package)."""
    N = 1 + sum(d)
    Phi = np.zeros((N, N))
    pos = 1
    for aj, dj in zip(a, d):
        Phi[pos:pos + dj, pos:pos + dj] = aj * (np.eye(dj) + np.ones((dj, dj)))
        pos += dj
    Q, _ = np.linalg.qr(np.column_stack([np.ones(N), np.random.default_rng(1).standard_normal((N, N - 1))]))
    B = Q[:, 1:]
    return float(np.linalg.eigvalsh(B.T @ Phi @ B)[0])


def mp_qec(D):
    """QEC at 30 digits via mpmath's symmetric eigen solver on the projected matrix."""
    n = len(D)
    with mpmath.workdps(30):
        P = mpmath.eye(n) - mpmath.ones(n, n) / n
        M = P * mpmath.matrix(D.tolist()) * P
        w = mpmath.eigsy(M, eigvals_only=True)
        # the ones vector contributes an extra 0 eigenvalue; QEC <= 0 vs > 0 both handled
        vals = sorted(float(x) for x in w)
    # drop the eigenvalue belonging to the ones direction (exactly 0)
    idx = int(np.argmin(np.abs(vals)))
    vals.pop(idx)
    return max(vals)
