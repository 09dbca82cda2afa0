"""Published numbers of isomorphism classes of plane graphs, used as an
independent completeness check for the generator.

Sources: OEIS A000109 (triangulations), A007021 (4-connected
triangulations), A111358 (5-connected triangulations), A113201 (simple
quadrangulations), A007022 (3-connected quadrangulations).
"""

CENSUS = {
    "tri": dict(zip(range(4, 15), [1, 1, 2, 5, 14, 50, 233, 1249, 7595, 49566, 339722])),
    "tri4": dict(zip(range(6, 15), [1, 1, 2, 4, 10, 25, 87, 313, 1357])),
    "tri5": dict(zip(range(12, 19), [1, 0, 1, 1, 3, 4, 12])),
    "quad": dict(zip(range(4, 16), [1, 1, 2, 3, 9, 18, 62, 198, 803, 3378, 15882, 77185])),
    "quad3": dict(zip(range(8, 17), [1, 0, 1, 1, 3, 3, 11, 18, 58])),
}
