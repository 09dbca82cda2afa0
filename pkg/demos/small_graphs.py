"""Distance invariants of the Platonic solids that are triangulations or
quadrangulations, and how their BFS layers sit against the layer bounds.

Run with ``python demos/small_graphs.py``.
"""

from planeprox import bfs_layers, check_bound, classify, cube, icosahedron, invariants, k4, octahedron

for name, g in [("K4", k4()), ("octahedron", octahedron()), ("cube", cube()), ("icosahedron", icosahedron())]:
    inv = invariants(g)
    bound = check_bound(g)
    print(f"{name:12} class={classify(g)!s:18} min_status={inv.min_status:3} "
          f"proximity={inv.proximity} remoteness={inv.remoteness} wiener={inv.wiener}")
    print(f"{'':12} layers from vertex 0: {bfs_layers(g, 0).counts}   bound on proximity: {bound.bound}")
