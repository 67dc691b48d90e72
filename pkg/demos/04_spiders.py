"""Spider graphs: a centre with (n-1)^2 legs of length two plus m-n
pendant leaves.  The exact solvers handle n = 3; larger n is refused."""

from locdist import SizeCapError
from locdist.graph import spider
from locdist.lab import revalidate, verify_spider

for m in (3, 4, 5):
    g = spider(3, m)
    v = verify_spider(3, m)
    ev = v.evidence
    print(f"spider(3,{m}): {g.n} vertices, centre degree {g.degree(0)}, "
          f"chi_D={ev['chi_D']} chi_L={ev['chi_L']} -> {v.status} {v.flag or ''}")
    if v.flag:
        # the locating witness is re-checked from scratch
        print("   witness", ev["witness_chi_L"], "revalidates:", revalidate(v))

try:
    verify_spider(4, 4)
except SizeCapError as exc:
    print("spider(4,4):", exc)
