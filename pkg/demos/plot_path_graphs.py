"""
QEC of path graphs
==================

The quadratic embedding constant of the path P_n increases with n and
approaches -1/2 from below.  Here we compute it two ways, compare with an
exact rational lower bound, and look at the integer vector that attains it.
"""

from fractions import Fraction

import numpy as np

from qecstar import named_graph, qec_exact, qec_path_pencil, thm56_bounds, alternating_witness

# The projected eigenproblem works for any graph; the pencil only for paths.
for n in range(2, 11):
    exact = qec_exact(named_graph("path", n)).value
    print(f"P_{n:<2d} {exact: .12f}  pencil gap {abs(exact - qec_path_pencil(n)):.1e}")

# -QEC(P_7) is the smallest root of 7c^3 - 28c^2 + 28c - 8.
c7 = -qec_exact(named_graph("path", 7)).value
print("cubic residual at P_7:", np.polyval([7, -28, 28, -8], c7))

###############################################################################
# The lower bound is a ratio of quartics in n, so it is exact rational
# arithmetic all the way.

for n in (2, 3, 10, 50, 200):
    lower, upper = thm56_bounds(n)
    print(n, lower, f"{float(lower):.8f}", f"{qec_path_pencil(n):.8f}", upper)

###############################################################################
# The bound is the Rayleigh quotient of f(i) = i(n-i)(-1)^i, with f(0)
# chosen so the entries sum to zero.  Integer arithmetic reproduces it.

n = 12
f = [int(x) for x in alternating_witness(n)]
quad = sum(f[i] * f[j] * abs(i - j) for i in range(n) for j in range(n))
print(f)
print(Fraction(quad, sum(x * x for x in f)) == thm56_bounds(n)[0])
