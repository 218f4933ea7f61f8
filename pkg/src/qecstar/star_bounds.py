"""Bounds on the QEC of a star product from the factors' QECs and sizes.

A factor is summarised by ``q = QEC(G_j) <= 0`` and ``n = |V_j| - 1``
(a positive integer or ``INF``).  With all ``q < 0``,

    max q_j  <=  QEC(G_1 * ... * G_r)  <=  -Lambda,

Lambda being the minimal root of sum n_j / (-q_j n_j - q_j - lam) = 1/lam.
If some ``q_j = 0`` the product's QEC is exactly 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .minroot import INF, ParamPair, closed_form_r2, min_root

__all__ = [
    "INF",
    "FactorSummary",
    "StarBoundReport",
    "lambda_upper",
    "qec_sandwich",
    "zero_rule",
    "harmonic_corollary",
    "q12",
    "q12_radical",
    "star_bound_report",
]

FULL_PRECISION = 1e-15


@dataclass(frozen=True)
class FactorSummary:
    q: float
    n: float

    def __post_init__(self):
        if not self.q <= 0:
            raise ValueError(f"factor QEC must be <= 0, got {self.q}")
        if not (self.n >= 1 or math.isinf(self.n)):
            raise ValueError(f"factor size n must be >= 1 or inf, got {self.n}")


def _require_negative(factors: Sequence[FactorSummary]) -> None:
    if not factors:
        raise ValueError("need at least one factor")
    if any(f.q == 0 for f in factors):
        raise ValueError("a factor has q = 0; the zero rule applies instead")


def lambda_upper(factors: Sequence[FactorSummary]) -> float:
    """Lambda, the minimal root for a = (-q_j), d = (n_j), bisected to full precision."""
    _require_negative(factors)
    p = ParamPair([-f.q for f in factors], [f.n for f in factors])
    return min_root(p, tol=FULL_PRECISION).lam


def qec_sandwich(factors: Sequence[FactorSummary]) -> tuple[float, float]:
    """(max q_j, -Lambda)."""
    return max(f.q for f in factors), -lambda_upper(factors)


def zero_rule(factors: Sequence[FactorSummary]) -> float | None:
    """0.0 when some factor has q = 0, else None."""
    if not factors:
        raise ValueError("need at least one factor")
    return 0.0 if any(f.q == 0 for f in factors) else None


def harmonic_corollary(factors: Sequence[FactorSummary]) -> float:
    """(1/q_1 + ... + 1/q_r)^-1, an upper bound weaker than -Lambda; r >= 2."""
    _require_negative(factors)
    if len(factors) < 2:
        raise ValueError("harmonic bound needs r >= 2")
    return 1.0 / math.fsum(1.0 / f.q for f in factors)


def q12(q1: float, q2: float, n1: float, n2: float) -> float:
    """Two-factor upper bound, evaluated through the stable r = 2 root formula."""
    if not (q1 < 0 and q2 < 0):
        raise ValueError("q12 needs negative q1, q2")
    return -closed_form_r2(-q1, -q2, n1, n2)


def q12_radical(q1: float, q2: float, n1: float, n2: float) -> float:
    """Two-factor bound written directly in terms of q1, q2:

        2 q1 q2 / (q1 + q2 - sqrt((q1 + q2)^2 - 4 k q1 q2)),
        k = (n1 + n2 + 1) / ((n1 + 1)(n2 + 1)),

    with k -> 1/(n1 + 1) as n2 -> inf and k = 0 when both are infinite.
    Loses accuracy when q1 ~ q2 and both sizes are large; kept as a check on
    :func:`q12`.
    """
    if not (q1 < 0 and q2 < 0):
        raise ValueError("q12 needs negative q1, q2")
    inf1, inf2 = math.isinf(n1), math.isinf(n2)
    if inf1 and inf2:
        k = 0.0
    elif inf1 or inf2:
        k = 1.0 / ((n2 if inf1 else n1) + 1.0)
    else:
        k = (n1 + n2 + 1.0) / ((n1 + 1.0) * (n2 + 1.0))
    s = q1 + q2
    return 2.0 * q1 * q2 / (s - math.sqrt(s * s - 4.0 * k * q1 * q2))


@dataclass(frozen=True)
class StarBoundReport:
    lower: float
    lam: float | None
    upper: float
    q12: float | None
    harmonic: float | None


def star_bound_report(factors: Sequence[FactorSummary]) -> StarBoundReport:
    """Every bound that applies, routing any q = 0 factor to the zero rule."""
    zero = zero_rule(factors)
    if zero is not None:
        return StarBoundReport(0.0, None, 0.0, None, None)
    lower, upper = qec_sandwich(factors)
    two = None
    if len(factors) == 2:
        f1, f2 = factors
        two = q12(f1.q, f2.q, f1.n, f2.n)
    harmonic = harmonic_corollary(factors) if len(factors) >= 2 else None
    return StarBoundReport(lower, -upper, upper, two, harmonic)

