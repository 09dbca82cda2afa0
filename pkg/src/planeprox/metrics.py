"""Distance invariants of plane graphs.

All averages are returned as :class:`fractions.Fraction` so that they can be
compared with closed forms without any tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .planegraph import DomainError, PlaneGraph


@dataclass(frozen=True)
class LayerSequence:
    root: int
    counts: tuple[int, ...]

    @property
    def eccentricity(self) -> int:
        return len(self.counts) - 1

    def total_distance(self) -> int:
        return sum(i * c for i, c in enumerate(self.counts))


@dataclass(frozen=True)
class InvariantReport:
    sigma: tuple[int, ...]
    min_status: int
    proximity: Fraction
    remoteness: Fraction
    wiener: int
    radius: int
    diameter: int
    central_vertices: tuple[int, ...]


def distance_matrix(g: PlaneGraph) -> np.ndarray:
    """All-pairs hop distances as an ``int64`` matrix."""
    rows = [u for u, r in enumerate(g.rotation) for _ in r]
    cols = [v for r in g.rotation for v in r]
    a = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(g.n, g.n))
    d = shortest_path(a, directed=False, unweighted=True)
    if np.isinf(d).any():
        raise DomainError("graph is not connected")
    return d.astype(np.int64)


def bfs_layers(g: PlaneGraph, v: int) -> LayerSequence:
    dist = distance_matrix(g)[v] if g.n > 1 else np.zeros(1, np.int64)
    return LayerSequence(v, tuple(int(c) for c in np.bincount(dist)))


def layers(g: PlaneGraph, v: int) -> list[set[int]]:
    """The sets N_0(v), N_1(v), ... of vertices at each distance from ``v``."""
    dist = distance_matrix(g)[v]
    out: list[set[int]] = [set() for _ in range(int(dist.max()) + 1)]
    for x, d in enumerate(dist):
        out[int(d)].add(x)
    return out


def active_vertices(g: PlaneGraph, v: int, i: int) -> set[int]:
    """Vertices at distance ``i`` from ``v`` with a neighbour at distance ``i + 1``."""
    dist = distance_matrix(g)[v]
    ecc = int(dist.max())
    if not 1 <= i <= ecc - 1:
        raise DomainError(f"layer index {i} outside 1..{ecc - 1}")
    return {x for x in range(g.n) if dist[x] == i and any(dist[y] == i + 1 for y in g.neighbors(x))}


def invariants(g: PlaneGraph) -> InvariantReport:
    if g.n < 2:
        raise DomainError("distance averages need at least two vertices")
    d = distance_matrix(g)
    sigma = d.sum(axis=1)
    ecc = d.max(axis=1)
    rad = int(ecc.min())
    lo = int(sigma.min())
    return InvariantReport(
        sigma=tuple(int(s) for s in sigma),
        min_status=lo,
        proximity=Fraction(lo, g.n - 1),
        remoteness=Fraction(int(sigma.max()), g.n - 1),
        wiener=int(sigma.sum()) // 2,
        radius=rad,
        diameter=int(ecc.max()),
        central_vertices=tuple(int(v) for v in np.flatnonzero(ecc == rad)),
    )


def min_status(g: PlaneGraph) -> int:
    return invariants(g).min_status


def proximity(g: PlaneGraph) -> Fraction:
    return invariants(g).proximity
