"""Building small graphs, reading graph6, and looking at their symmetries."""

import numpy as np

from locdist import automorphisms, canonical_form, distances, parse_graph6, write_graph6
from locdist.graph import FamilySpec, generate

# families are generated from a tag plus integer parameters
g = generate(FamilySpec.parse("cycle", "6"))
print("C6 as graph6:", write_graph6(g))

# the distance matrix is a plain (read-only) numpy array
d = distances(g)
print(d)
print("eccentricities:", d.max(axis=1), "diameter:", int(d.max()))

# graph6 round trip
h = parse_graph6(write_graph6(g))
assert h == g

# the dihedral group of the hexagon has 12 elements
group = automorphisms(g)
print("|Aut(C6)| =", group.order)
for perm in group.elements[:4]:
    print("  ", perm)

# relabelling a graph leaves its canonical key unchanged
rng = np.random.default_rng(7)
perm = rng.permutation(g.n).tolist()
print("canonical keys agree:", canonical_form(g) == canonical_form(g.relabel(perm)))
