"""Conjugacy classes from a non-abelian 2-cocycle on the transpositions of S5.

The cocycle takes values in the symmetric group on {3, 4, 5}.  Along each
component the cocycle values at under-crossings multiply to an element
whose conjugacy class is an invariant of the colored link.

Run: python demos/hopf_link_conjugacy.py
"""

from collections import Counter

from quandle_cocycles.braids import closure_colorings, parse_braid
from quandle_cocycles.cocycles import transposition_section_cocycle, verify_nonabelian_2cocycle
from quandle_cocycles.invariants import class_labels, conjugacy_invariant

beta = transposition_section_cocycle(5)
X = beta.X
print("quandle:", X.name, "with", len(X), "elements")
print("cocycle values in", beta.H.name, "|", verify_nonabelian_2cocycle(beta))

hopf = parse_braid("1 1")
res = conjugacy_invariant(hopf, X, beta, name="Hopf link")
cols = closure_colorings(hopf, X)
print(f"\nHopf link: {len(cols)} colorings")
a, b = X.labels.index("(1 4)"), X.labels.index("(2 3)")
i = [c.colors for c in cols].index((a, b))
print("coloring ((1 4), (2 3)) gives classes", class_labels(res)[i])
print("(classes are named by their least element, so [(4 5)] is the class of (3 4))")

print("\nall colorings:")
for labels, n in sorted(Counter(class_labels(res)).items()):
    print(f"  {n:3d} x {labels}")

res = conjugacy_invariant(parse_braid("1 1 1"), X, beta, name="3_1")
print("\ntrefoil:")
for labels, n in sorted(Counter(class_labels(res)).items()):
    print(f"  {n:3d} x {labels}")
