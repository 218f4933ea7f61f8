"""
An integer sequence from the path bound
=======================================

The numerator of the path-graph lower bound, divided by 240, is an integer
a_n for every n.  It has a rational generating function and is the
self-convolution of ceil(n^2/2).  Everything below is exact.
"""

from qecstar import a_closed, a_series, b_ceil, convolution_check, det_An, det_Anu, run_suite

print([a_closed(n) for n in range(16)])
print(a_series(15))
print([convolution_check(n) for n in range(16)])
print([b_ceil(n) for n in range(10)])

###############################################################################
# The matrices [4 min(i,j) - 1 - delta_ij] have determinant n + 1, and
# replacing the corner entry by u gives n u - (n-1)(4n+1).

print([det_An(n) for n in range(1, 11)])
print(det_Anu(7, 10), 7 * 10 - 6 * 29)

###############################################################################
# The same checks, packaged as suites.

for result in run_suite("all", max_n=100):
    print("PASS" if result.passed else "FAIL", result.name, result.checked)
