"""A 3-colouring of the path on seven vertices that breaks every symmetry
yet fails to locate: two vertices end up with the same colour code."""

from locdist import ColorPartition, color_code, invariant_report, is_distinguishing, is_locating
from locdist.graph import path
from locdist.lab import P7_CLASSES, reproduce_p7_example

g = path(7)
c = ColorPartition.from_classes(P7_CLASSES, 7)
print("colouring:", list(c))
for v in range(7):
    print(f"  a{v + 1}: {color_code(g, c, v)}")

print("distinguishing:", is_distinguishing(g, c))
print("locating:", is_locating(g, c))

r = invariant_report(g)
print("still chi_D = chi_L =", r.chi_D, "via", r.witnesses["chi_L"])

print(reproduce_p7_example().to_json())
