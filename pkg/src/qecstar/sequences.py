"""Exact integer identities behind the path-graph estimate.

Everything here is integer or :class:`fractions.Fraction` arithmetic.  The
brute-force sums use numpy ``int64`` only while the sum of absolute values of
the summands provably fits in 63 bits, and Python integers beyond that.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

__all__ = [
    "lemma61_lhs",
    "lemma61_printed_lhs",
    "lemma61_closed",
    "alternating_power_sum",
    "alternating_power_sum_closed",
    "a_closed",
    "a_series",
    "series_coefficients",
    "b_ceil",
    "convolution_check",
    "bareiss_det",
    "A_matrix",
    "det_An",
    "det_Anu",
    "CheckResult",
    "run_suite",
    "SUITES",
]

# n^7 / 16 < 2**63 for n <= 500
_INT64_SAFE_N = 500


def _int_array(values: Iterable[int], n: int) -> np.ndarray:
    return np.array(list(values), dtype=np.int64 if n <= _INT64_SAFE_N else object)


def _signed_weights(n: int) -> np.ndarray:
    return _int_array((i * (n - i) * (-1) ** i for i in range(1, n + 1)), n)


def lemma61_lhs(which: int, n: int) -> int:
    """Brute-force left-hand side of identity 1, 2 or 3 (sums over i, j = 1..n).

    1: sum min(i,j) i(n-i) j(n-j) (-1)^(i+j)
    2: sum i(n-i) j(n-j) (-1)^(i+j)
    3: sum i^2 (n-i)^2
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0
    if which == 1:
        w = _signed_weights(n)
        idx = _int_array(range(1, n + 1), n)
        return int((np.minimum.outer(idx, idx) * np.multiply.outer(w, w)).sum())
    if which == 2:
        w = _signed_weights(n)
        return int(np.multiply.outer(w, w).sum())
    if which == 3:
        return sum(i * i * (n - i) ** 2 for i in range(1, n + 1))
    raise ValueError(f"identity index must be 1, 2 or 3, got {which}")


def lemma61_printed_lhs(n: int) -> int:
    """Identity 1 with the summand min(i,j) i(n-j) j(n-j) (-1)^(i+j), i.e. with
    (n-j) in place of (n-i).  It does not match the closed form; kept so the
    mismatch stays checkable."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            total += min(i, j) * i * (n - j) * j * (n - j) * (-1) ** (i + j)
    return total


def lemma61_closed(which: int, n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be >= 0")
    s = (-1) ** n
    if which == 1:
        return Fraction(n * (2 * n**4 + 20 * n**2 - 7 + 15 * s), 240)
    if which == 2:
        return Fraction((1 + s) * n * n, 8)
    if which == 3:
        return Fraction(n**5 - n, 30)
    raise ValueError(f"identity index must be 1, 2 or 3, got {which}")


def alternating_power_sum(power: int, n: int) -> int:
    """sum_{i=1}^n i^power (-1)^i."""
    return sum(i**power * (-1) ** i for i in range(1, n + 1))


def alternating_power_sum_closed(power: int, n: int) -> Fraction:
    """Closed forms for power 1, 2, 3 (the cubic one uses (-1)^n throughout)."""
    s = (-1) ** n
    if power == 1:
        return Fraction(2 * n * s + s - 1, 4)
    if power == 2:
        return Fraction(n * (n + 1) * s, 2)
    if power == 3:
        return Fraction(4 * n**3 * s + 6 * n**2 * s - s + 1, 8)
    raise ValueError("closed forms are known for powers 1, 2, 3")


def a_closed(n: int) -> int:
    """a_n = n (2n^4 + 20n^2 - 7 + 15(-1)^n) / 240, always an integer."""
    if n < 0:
        raise ValueError("n must be >= 0")
    num = n * (2 * n**4 + 20 * n**2 - 7 + 15 * (-1) ** n)
    q, rem = divmod(num, 240)
    assert rem == 0, f"a_{n} is not an integer"
    return q


def _poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def _poly_pow(p: Sequence[int], k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out = _poly_mul(out, p)
    return out


def series_coefficients(num: Sequence[int], den: Sequence[int], N: int) -> list[int]:
    """Taylor coefficients 0..N of num/den for integer polynomials with den[0] = +-1."""
    if den[0] not in (1, -1):
        raise ValueError("constant term of the denominator must be +-1")
    c: list[int] = []
    for k in range(N + 1):
        acc = num[k] if k < len(num) else 0
        acc -= sum(den[i] * c[k - i] for i in range(1, min(k, len(den) - 1) + 1))
        c.append(acc * den[0])
    return c


def a_series(N: int) -> list[int]:
    """Coefficients 0..N of z^2 (1 + z^2)^2 / ((1 + z)^2 (1 - z)^6)."""
    if N < 0:
        raise ValueError("N must be >= 0")
    num = _poly_mul([0, 0, 1], _poly_pow([1, 0, 1], 2))
    den = _poly_mul(_poly_pow([1, 1], 2), _poly_pow([1, -1], 6))
    return series_coefficients(num, den, N)


def b_ceil(n: int) -> int:
    """ceil(n^2 / 2)."""
    return (n * n + 1) // 2


def convolution_check(n: int) -> int:
    """sum_{k=0}^n b_k b_{n-k}; equals a_n."""
    return sum(b_ceil(k) * b_ceil(n - k) for k in range(n + 1))


def bareiss_det(M: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if pivot is None:
                return 0
            A[k], A[pivot] = A[pivot], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def A_matrix(n: int, u: int | None = None) -> list[list[int]]:
    """[4 min(i,j) - 1 - delta_ij]_{i,j=1..n}, with entry (n, n) replaced by u if given."""
    if n < 1:
        raise ValueError("n must be >= 1")
    A = [[4 * min(i, j) - 1 - (i == j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    if u is not None:
        A[n - 1][n - 1] = int(u)
    return A


def det_An(n: int) -> int:
    return bareiss_det(A_matrix(n))


def det_Anu(n: int, u: int) -> int:
    return bareiss_det(A_matrix(n, u))


LISTED_A_TERMS = (0, 0, 1, 4, 14, 36, 83, 168, 316, 552, 917, 1452, 2218, 3276, 4711, 6608)


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    counterexample: str | None = None


def _first_failure(name: str, cases: Iterable, check: Callable) -> CheckResult:
    count = 0
    for case in cases:
        count += 1
        ok, detail = check(case)
        if not ok:
            return CheckResult(name, False, count, detail)
    return CheckResult(name, True, count)


def _suite_lemma61(max_n: int, seed: int) -> list[CheckResult]:
    out = []
    for which in (1, 2, 3):
        def check(n, which=which):
            lhs, rhs = lemma61_lhs(which, n), lemma61_closed(which, n)
            return lhs == rhs, f"n={n}: brute force {lhs} != closed form {rhs}"
        out.append(_first_failure(f"lemma61.identity{which}", range(max_n + 1), check))
    for power in (1, 2, 3):
        def check(n, power=power):
            lhs, rhs = alternating_power_sum(power, n), alternating_power_sum_closed(power, n)
            return lhs == rhs, f"n={n}: {lhs} != {rhs}"
        out.append(_first_failure(f"alternating_sum.power{power}", range(max_n + 1), check))
    return out


def _suite_detA(max_n: int, seed: int) -> list[CheckResult]:
    rng = random.Random(seed)
    top = min(max_n, 60)
    pairs = [(rng.randint(1, 30), rng.randint(-10**6, 10**6)) for _ in range(50)]
    return [
        _first_failure(
            "detA.n_plus_1", range(1, top + 1),
            lambda n: (det_An(n) == n + 1, f"n={n}: det={det_An(n)}"),
        ),
        _first_failure(
            "detA.auxiliary", pairs,
            lambda nu: (
                det_Anu(*nu) == nu[0] * nu[1] - (nu[0] - 1) * (4 * nu[0] + 1),
                f"n={nu[0]}, u={nu[1]}: det={det_Anu(*nu)}",
            ),
        ),
        _first_failure(
            "detA.specialisation", range(1, top + 1),
            lambda n: (A_matrix(n) == A_matrix(n, 4 * n - 2), f"n={n}"),
        ),
    ]


def _suite_series(max_n: int, seed: int) -> list[CheckResult]:
    top = min(max_n, 64)
    series = a_series(top)
    return [
        _first_failure(
            "series.listing", enumerate(LISTED_A_TERMS),
            lambda kv: (a_closed(kv[0]) == kv[1], f"a_{kv[0]}={a_closed(kv[0])}, listed {kv[1]}"),
        ),
        _first_failure(
            "series.generating_function", range(top + 1),
            lambda n: (series[n] == a_closed(n), f"n={n}: series {series[n]} != {a_closed(n)}"),
        ),
        _first_failure(
            "series.convolution", range(top + 1),
            lambda n: (convolution_check(n) == a_closed(n), f"n={n}: {convolution_check(n)}"),
        ),
    ]


SUITES = {"lemma61": _suite_lemma61, "detA": _suite_detA, "series": _suite_series}


def run_suite(name: str, max_n: int = 300, seed: int = 0) -> list[CheckResult]:
    """Run one named identity suite, or ``all`` of them."""
    if name == "all":
        return [r for key in SUITES for r in SUITES[key](max_n, seed)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](max_n, seed)
