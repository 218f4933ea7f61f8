"""
The minimal root and the conditional minimum
============================================

The equation sum_j d_j / (a_j d_j + a_j - lam) = 1/lam has one root in each
gap between its poles.  The smallest one equals the minimum of a block
quadratic form on the unit sphere orthogonal to the ones vector.  We find it
by bisection, check it against a plain eigenvalue computation, and print the
bounds around it.
"""

import math

from qecstar import PhiInstance, ParamPair, all_roots, bounds_sharp, breakpoints, cond_min, min_root

p = ParamPair((1.0, 2.0, 3.5), (3, 2, 4))
print("poles:", breakpoints(p))
for root in all_roots(p):
    print(f"  root {root.lam:.12f}  scaled |f| {root.residual:.1e}")

###############################################################################
# The eigenvalue route never touches the root finder.

value, (x0, xs) = cond_min(PhiInstance(p.a, tuple(int(d) for d in p.d)))
print("eigenvalue:", value, " bisection:", min_root(p).lam)

###############################################################################
# Lower and upper estimates from the smallest pole.  All of them coincide with
# the root when the poles coincide.

b = bounds_sharp(p)
print(f"{p.harmonic():.6f} < {b.lower_est1:.6f} <= {b.lower_est2:.6f} <= {min_root(p).lam:.6f} < {b.upper_est1:.6f}")
same = ParamPair((1.0, 0.75), (2, 3))
print(bounds_sharp(same), min_root(same, tol=1e-15).lam)

###############################################################################
# Infinite counts contribute 1/a_j each; truncating them converges like 1/n.

q = ParamPair((1.0, 2.0), (math.inf, 5))
target = min_root(q, tol=1e-15).lam
for n in (10, 100, 1000, 10000):
    lam = min_root(ParamPair(q.a, (n, 5)), tol=1e-15).lam
    print(n, f"{lam - target:.3e}", f"n * gap = {(lam - target) * n:.4f}")
