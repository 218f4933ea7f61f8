"""Roots of  sum_j d_j / (a_j d_j + a_j - lam) = 1 / lam.

The counts ``d_j`` are positive reals or :data:`INF`.  An infinite count is
never used in arithmetic: its term is replaced by the constant ``1 / a_j``.

The left-hand side minus ``1/lam`` is strictly increasing between
consecutive poles ``c_i = a_j d_j + a_j``, so every root is found by
bisection on a sign-change bracket.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

__all__ = [
    "INF",
    "ParamPair",
    "RootSolution",
    "SharpBounds",
    "eval_f",
    "breakpoints",
    "min_root",
    "all_roots",
    "closed_form_r2",
    "bounds_basic",
    "bounds_sharp",
    "truncated",
]

INF = math.inf

MAX_ITER = 200
DEFAULT_TOL = 1e-12
MERGE_RTOL = 1e-14


def is_inf(x: float) -> bool:
    return math.isinf(x)


def _check_count(d: float) -> float:
    d = float(d)
    if math.isnan(d) or not (d > 0):
        raise ValueError(f"counts must be positive or inf, got {d}")
    return d


@dataclass(frozen=True)
class ParamPair:
    a: tuple[float, ...]
    d: tuple[float, ...]

    def __init__(self, a: Sequence[float], d: Sequence[float]):
        a = tuple(float(x) for x in a)
        d = tuple(_check_count(x) for x in d)
        if not a:
            raise ValueError("need at least one parameter pair")
        if len(a) != len(d):
            raise ValueError(f"length mismatch: {len(a)} a-values, {len(d)} d-values")
        if any(not (x > 0) or math.isinf(x) for x in a):
            raise ValueError("every a_j must be a positive finite real")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "d", d)

    @property
    def r(self) -> int:
        return len(self.a)

    @property
    def all_infinite(self) -> bool:
        return all(map(is_inf, self.d))

    def harmonic(self) -> float:
        """(1/a_1 + ... + 1/a_r)^-1, the root when every count is infinite."""
        return 1.0 / math.fsum(1.0 / x for x in self.a)


@dataclass(frozen=True)
class RootSolution:
    lam: float
    bracket: tuple[float, float]
    residual: float
    method: str


class SharpBounds(NamedTuple):
    lower_est1: float
    lower_est2: float
    upper_est1: float


def _term(a: float, d: float, lam: float) -> float:
    if is_inf(d):
        return 1.0 / a
    return d / (a * d + a - lam)


def eval_f(p: ParamPair, lam: float) -> float:
    """sum_j d_j/(a_j d_j + a_j - lam) - 1/lam."""
    if not lam > 0:
        raise ValueError(f"lam must be positive, got {lam}")
    for a, d in zip(p.a, p.d):
        if not is_inf(d) and a * d + a == lam:
            raise ValueError(f"lam={lam} is a pole")
    return math.fsum(_term(a, d, lam) for a, d in zip(p.a, p.d)) - 1.0 / lam


def _merged(p: ParamPair) -> tuple[list[tuple[float, float]], float]:
    """Distinct finite poles with accumulated coefficients, plus the constant
    contributed by infinite counts."""
    const = math.fsum(1.0 / a for a, d in zip(p.a, p.d) if is_inf(d))
    poles = sorted((a * d + a, d) for a, d in zip(p.a, p.d) if not is_inf(d))
    merged: list[list[float]] = []
    for c, d in poles:
        if merged and c - merged[-1][0] <= MERGE_RTOL * c:
            merged[-1][1] += d
        else:
            merged.append([c, d])
    return [(c, d) for c, d in merged], const


def breakpoints(p: ParamPair) -> list[float]:
    """Sorted distinct values of a_j d_j + a_j; INF last if some count is infinite."""
    finite, _ = _merged(p)
    out = [c for c, _ in finite]
    if any(map(is_inf, p.d)):
        out.append(INF)
    return out


def _scaled_residual(p: ParamPair, lam: float) -> float:
    terms = [_term(a, d, lam) for a, d in zip(p.a, p.d)]
    value = math.fsum(terms) - 1.0 / lam
    scale = math.fsum(abs(t) for t in terms) + 1.0 / lam
    return abs(value) / scale


def _bisect(p: ParamPair, lo: float, hi: float, tol: float) -> tuple[float, float, float]:
    """Bisect on [lo, hi] assuming f(lo) < 0 < f(hi) (endpoints never evaluated).

    Stops once hi - lo <= tol * hi or the floats between lo and hi run out.
    """
    for _ in range(MAX_ITER):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi or hi - lo <= tol * hi:
            break
        if eval_f(p, mid) < 0:
            lo = mid
        else:
            hi = mid
    # report whichever admissible point of the final bracket has the smallest |f|
    candidates = [x for x in (lo, 0.5 * (lo + hi), hi) if x > 0 and not _is_pole(p, x)]
    lam = min(candidates, key=lambda x: abs(eval_f(p, x)))
    return lam, lo, hi


def _is_pole(p: ParamPair, x: float) -> bool:
    return any(not is_inf(d) and a * d + a == x for a, d in zip(p.a, p.d))


def _check_tol(tol: float) -> None:
    if not (tol > 0) or math.isinf(tol):
        raise ValueError(f"tolerance must be a positive finite number, got {tol}")


def min_root(p: ParamPair, tol: float = DEFAULT_TOL) -> RootSolution:
    """The minimal solution, bracketed by [harmonic, min a_j].

    All counts infinite gives the harmonic value exactly (method ``limit``);
    a single finite pair gives ``a_1`` (method ``closed_form_r1``).
    """
    _check_tol(tol)
    if p.all_infinite:
        lam = p.harmonic()
        return RootSolution(lam, (lam, lam), 0.0, "limit")
    if p.r == 1:
        lam = p.a[0]
        return RootSolution(lam, (lam, lam), _scaled_residual(p, lam), "closed_form_r1")
    lo, hi = p.harmonic(), min(p.a)
    lam, lo, hi = _bisect(p, lo, hi, tol)
    return RootSolution(lam, (lo, hi), _scaled_residual(p, lam), "bisection")


def all_roots(p: ParamPair, tol: float = DEFAULT_TOL) -> list[RootSolution]:
    """One root in each gap (c_{i-1}, c_i) of the breakpoints, c_0 = 0."""
    _check_tol(tol)
    cs = breakpoints(p)
    roots = [min_root(p, tol)]
    for lo, hi in zip(cs[:-1], cs[1:]):
        if is_inf(hi):
            hi = 2.0 * lo
            while eval_f(p, hi) <= 0:
                lo, hi = hi, 2.0 * hi
        lam, blo, bhi = _bisect(p, lo, hi, tol)
        roots.append(RootSolution(lam, (blo, bhi), _scaled_residual(p, lam), "bisection"))
    return roots


def _ratio(d: float) -> float:
    return 1.0 if is_inf(d) else d / (d + 1.0)


def closed_form_r2(a1: float, a2: float, d1: float, d2: float) -> float:
    """Minimal root for r = 2 in the cancellation-free form

        2 a1 a2 / (a1 + a2 + sqrt((a1 - a2)^2 + 4 t1 t2 a1 a2)),  t = d/(d+1).
    """
    ParamPair((a1, a2), (d1, d2))
    t = _ratio(d1) * _ratio(d2)
    return 2.0 * a1 * a2 / (a1 + a2 + math.sqrt((a1 - a2) ** 2 + 4.0 * t * a1 * a2))


def bounds_basic(p: ParamPair) -> tuple[float, float]:
    """(harmonic lower bound, strict upper bound min a_j); needs r >= 2."""
    if p.r < 2:
        raise ValueError("basic bounds need r >= 2")
    return p.harmonic(), min(p.a)


def bounds_sharp(p: ParamPair) -> SharpBounds:
    """Lower/upper estimates built from the smallest finite breakpoint c_1.

    Ordering: harmonic < lower_est1 <= lower_est2 <= lam_1 < upper_est1,
    with both lower estimates exact iff all breakpoints coincide.
    """
    if p.all_infinite:
        raise ValueError("sharp bounds need at least one finite count")
    c1 = min(a * d + a for a, d in zip(p.a, p.d) if not is_inf(d))
    lam0 = p.harmonic()
    s = math.fsum(_term(a, d, 0.0) for a, d in zip(p.a, p.d))
    lower1 = 1.0 / (1.0 / c1 + s)
    upper1 = 1.0 / s
    w = math.fsum((c1 - lam0) * _term(a, d, lam0) for a, d in zip(p.a, p.d))
    lower2 = c1 / (1.0 + w)
    return SharpBounds(lower1, lower2, upper1)


def truncated(p: ParamPair, n: float) -> ParamPair:
    """Replace every count d_j by min(d_j, n)."""
    if not n >= 1:
        raise ValueError("truncation level must be >= 1")
    return ParamPair(p.a, [min(d, n) for d in p.d])
