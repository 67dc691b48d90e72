"""Proper, locating and distinguishing colourings of a small graph."""

from locdist import (
    ColorPartition,
    color_code,
    invariant_report,
    is_distinguishing,
    is_locating,
    metric_dimension,
)
from locdist.graph import Graph

# a triangle with a pendant path hanging off one corner
g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])

c = ColorPartition((1, 2, 3, 1, 2))
for v in range(g.n):
    print(f"vertex {v}: colour {c[v]}, code {color_code(g, c, v)}")
print("locating:", is_locating(g, c), "distinguishing:", is_distinguishing(g, c))

# the colouring breaks the swap of 0 and 1, but vertices 0 and 3 share
# colour 1 and code (0, 1, 1), so it does not locate
r = invariant_report(g)
print(f"chi={r.chi} chi_D={r.chi_D} chi_L={r.chi_L} dim={r.dim} |Aut|={r.aut_order}")
print("lex-least witnesses:", r.witnesses)

size, basis = metric_dimension(g)
print("a smallest resolving set:", basis)
