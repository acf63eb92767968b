"""A 2-cocycle with wreath coefficients detects chirality.

Mirroring a closed braid (inverting every letter) negates every value,
so a knot whose value multiset is not symmetric under v -> -v is chiral.

Run: python demos/chirality.py
"""

from collections import Counter

from quandle_cocycles import linforms as lf
from quandle_cocycles.braids import mirror
from quandle_cocycles.cocycles import is_coboundary, verify_cocycle
from quandle_cocycles.invariants import chirality_report, generalized_2cocycle_invariant
from quandle_cocycles.io import load_cochain
from quandle_cocycles.tables import validated_knots

f, X, A = load_cochain("builtin:r3-example2")
print("cocycle check:", verify_cocycle(f, A))
print("is a coboundary:", is_coboundary(f, A))


def values(word):
    res = generalized_2cocycle_invariant(word, X, A, f)
    c = Counter({lf.reduce(v, A.q): n for v, n in res.counter().items()})
    return ", ".join(f"{n}x{lf.numeric(v)}" for v, n in sorted(c.items()))


knots = validated_knots()
for name in ["3_1", "8_18", "8_19"]:
    w = knots[name]["braid"]
    print(f"\n{name}:        {values(w)}")
    print(f"{name} mirror: {values(mirror(w))}")

chiral, unknown = [], []
for name, entry in knots.items():
    if len(entry["braid"]) == 0:
        continue
    rep = chirality_report(entry["braid"], X, A, f, name=name)
    (chiral if rep.verdict == "chiral" else unknown).append(name)
print(f"\n{len(chiral)} of {len(chiral) + len(unknown)} bundled knots are detected as chiral")
print("inconclusive:", " ".join(unknown))
