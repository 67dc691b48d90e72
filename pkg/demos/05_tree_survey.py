"""Which trees have chi_D = chi_L = 3?  Compare with the symmetric trees
whose locating number is 3, and show where the two sets disagree."""

from collections import Counter

from locdist.lab import VIOLATED, survey_chi3

survey = survey_chi3(9, graph_nmax=0)
print(len(survey.trees), "trees up to 9 vertices")

by_n = Counter(r.report.n for r in survey.tree_census)
print("chi_D = chi_L = 3 by order:", dict(sorted(by_n.items())))

for v in survey.verdicts:
    if v.status == VIOLATED:
        ev = v.evidence
        print(f"{v.graph_key}: |Aut|={ev['aut_order']} but chi_D={ev['chi_D']}, "
              f"e.g. {ev['distinguishing_coloring']}")
