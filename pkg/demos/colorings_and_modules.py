"""Colorings of closed braids by dihedral quandles and the module invariant.

Run: python demos/colorings_and_modules.py
"""

from quandle_cocycles.braids import closure_colorings, color_grid, parse_braid
from quandle_cocycles.io import load_knot_table
from quandle_cocycles.modules import braid_matrix, module_invariant, wreath_action
from quandle_cocycles.quandles import dihedral

R3 = dihedral(3)
print("R3 operation table (row x, column y gives x*y):")
for row in R3.op:
    print("  ", row)

trefoil = parse_braid("1 1 1")
cols = closure_colorings(trefoil, R3)
print(f"\nthe closed braid 1 1 1 has {len(cols)} colorings by R3:")
for c in cols:
    kind = "trivial" if c.trivial else "non-trivial"
    print("  top colors", c.colors, kind)

# follow one non-trivial coloring down the braid
top = next(c.colors for c in cols if not c.trivial)
grid = color_grid(trefoil, R3, top)
print("\nlevels of the coloring", top)
for s, level in enumerate(grid.levels):
    print(f"  level {s}: {level}")

# each coloring gives an affine map on beads; the cokernel of M - I is the invariant value
A = wreath_action(R3)
M = braid_matrix(trefoil, top, A).linear
print(f"\ncolored braid matrix is {len(M)}x{len(M)} (2 strands, rank {A.m} beads)")

knots = load_knot_table()
for name in ["3_1", "8_18", "8_19"]:
    res = module_invariant(knots[name]["braid"], R3, A, name=name)
    print(f"\n{name}:")
    for e in res.entries:
        print(f"  {e.count:3d} x  {e.value}  ({e.coloring_type})")

R5 = dihedral(5)
res = module_invariant(knots["4_1"]["braid"], R5, wreath_action(R5), name="4_1")
print("\n4_1 over R5:")
for e in res.entries:
    print(f"  {e.count:3d} x  {e.value}  ({e.coloring_type})")
