"""
Star products and their bounds
==============================

Gluing graphs at one vertex each gives a star product.  Its QEC is squeezed
between the largest factor QEC and -Lambda, where Lambda is the minimal root
of a rational equation built from the factors.
"""

from qecstar import FactorSummary, named_graph, q12, qec_exact, qec_sandwich, star_product

k2, k3 = named_graph("complete", 2), named_graph("complete", 3)
p3, c4 = named_graph("path", 3), named_graph("cycle", 4)

# Two triangles sharing a vertex.
g, maps = star_product([(k3, 0), (k3, 0)])
print("K3*K3:", qec_exact(g).value, "vertex maps", maps)

###############################################################################
# The product depends on the chosen roots.  Gluing P3 at an end or at its
# middle gives non-isomorphic graphs, and only one of them meets the bound.

bound = q12(-1.0, -2.0 / 3.0, 2, 2)
for root in (0, 1):
    g, _ = star_product([(k3, 0), (p3, root)])
    print(f"K3*P3 rooted at {root}: {qec_exact(g).value:.12f}  (bound {bound:.12f})")

###############################################################################
# A factor with QEC exactly 0 forces the product to 0 as well.

g, _ = star_product([(k2, 0), (c4, 0)])
print("K2*C4:", qec_exact(g).value)

###############################################################################
# With more factors only the sandwich is available.  Rooting every factor at
# a centre lands on the upper bound here; moving roots to the ends does not.

for factors in (
    [(k3, 1), (p3, 1), (named_graph("star", 5), 0)],
    [(k3, 1), (p3, 0), (named_graph("path", 4), 1)],
):
    g, _ = star_product(factors)
    summary = [FactorSummary(qec_exact(h).value, h.vertex_count - 1) for h, _ in factors]
    lower, upper = qec_sandwich(summary)
    print(f"{lower:.9f} <= {qec_exact(g).value:.9f} <= {upper:.9f}")
