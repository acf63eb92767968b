"""3-cocycle invariants of twist-spun knots and non-invertibility.

The invariant is a state sum over the triple points of a diagram of the
twist-spun knot, read off from a closed braid of the knot.  Comparing the
two orientations of the spun surface can prove that it is not invertible.

Run: python demos/twist_spins.py
"""

from quandle_cocycles import linforms as lf
from quandle_cocycles.braids import parse_braid
from quandle_cocycles.invariants import REVERSED, invertibility_report, twist_scaling_check, twistspin_invariant
from quandle_cocycles.io import load_cochain, load_knot_table

f, X, A = load_cochain("builtin:r3-example3")
print("coefficients: wreath module over", X.name, "with parameters", f.params)

knots = load_knot_table()


def show(res):
    for v, n in sorted(res.counter().items(), key=lambda kv: (-kv[1], kv[0])):
        print(f"    {n:2d} x {lf.format_vector(v, f.params)}")


for name in ["3_1", "8_18", "8_20"]:
    w = knots[name]["braid"]
    rep = invertibility_report(w, X, A, f, name=name)
    print(f"\n{name}, two twists, forward:")
    show(rep.first)
    print("  reversed:")
    show(rep.second)
    print("  verdict:", rep.verdict)

# values are additive in the number of twists
print("\nfour twists equal twice two twists on 8_18:", twist_scaling_check(knots["8_18"]["braid"], X, A, f, 2))

# the state sum depends on the braid word, not only on the knot: the two
# sides of the braid relation can give different multisets
for word in ["1 2 1 -2 -1 -2", "", "1 2 1 2 1 2 1 2", "2 1 2 1 2 1 2 1"]:
    w = parse_braid(word, 3)
    res = twistspin_invariant(w, X, A, f, 2, REVERSED)
    print(f"\nreversed, word '{word}':")
    show(res)
