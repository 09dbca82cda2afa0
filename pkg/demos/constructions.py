"""Build each extremal family over a range of orders and compare the
minimum status of the built graph with the closed form.

A ``*`` marks an order where the two disagree.
"""

import sys

from planeprox import verify_construction
from planeprox.constructions import FAMILIES, supported_orders

upto = int(sys.argv[1]) if len(sys.argv) > 1 else 40
for fam in FAMILIES:
    cells = []
    for n in supported_orders(fam, upto):
        r = verify_construction(fam, n)
        cells.append(f"{n}:{r.built_min_status}{'' if r.match else '*'}")
    print(f"{fam:3}", " ".join(cells))
