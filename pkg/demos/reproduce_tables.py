"""Recompute every bundled table and summarize the agreement row by row.

Run: python demos/reproduce_tables.py
"""

from collections import Counter

from quandle_cocycles.calibration import calibration_lock, describe
from quandle_cocycles.tables import TABLES, format_counter, reproduce_table

for table in TABLES:
    rows = reproduce_table(table, jobs=4)
    kind = TABLES[table][0]
    stats = Counter(r.status for r in rows)
    print(f"table {table:9s} {stats['PASS']:3d} pass {stats['FAIL']:3d} fail {stats['SKIPPED']:3d} skipped")
    for r in rows:
        if r.status == "FAIL":
            flag = " (caution)" if r.caution else ""
            print(f"    {r.knot}{flag}: expected {format_counter(kind, r.expected)}")
            print(f"    {' ' * len(r.knot)}  computed {format_counter(kind, r.got)}")
            if r.note:
                print(f"    {' ' * len(r.knot)}  {r.note}")

print("\ncalibration of the reading convention and twist-spin frame:")
print(describe(calibration_lock()))
