"""Exhaustive extremal tables: for each order, the largest minimum status in
the class and how many graphs reach it.

The 4-connected triangulations are shown up to 13 vertices; pass a class tag
and range to see another one, e.g. ``python demos/tables.py quad 4 13``.
"""

import sys

from planeprox import GraphClass, extremal_table

tag, lo, hi = (sys.argv[1], int(sys.argv[2]), int(sys.argv[3])) if len(sys.argv) > 3 else ("tri4", 6, 13)
print(f"{'n':>3} {'max min status':>15} {'attained by':>12} {'of':>8}")
for row in extremal_table(GraphClass.from_tag(tag), lo, hi):
    status = "-" if row.max_min_status is None else row.max_min_status
    print(f"{row.order:>3} {status:>15} {row.count:>12} {row.total_classes:>8}")
