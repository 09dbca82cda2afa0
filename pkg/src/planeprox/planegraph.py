"""Plane graphs stored as rotation systems.

A :class:`PlaneGraph` keeps, for every vertex ``0..n-1``, the clockwise cyclic
order of its neighbours.  Faces are traced by arriving at a vertex along an
edge and leaving along the next edge clockwise, so the embedding (and not
just the abstract graph) decides which cycles are faces.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional, Sequence

import networkx as nx
import numpy as np

from . import _kernels


class StructuralError(ValueError):
    """The rotation system does not describe a simple connected plane graph."""


class DomainError(ValueError):
    """An operation was called outside the range where it is defined."""


class Kind(Enum):
    TRIANGULATION = "triangulation"
    QUADRANGULATION = "quadrangulation"


@dataclass(frozen=True)
class GraphClass:
    kind: Kind
    min_connectivity: int

    def __post_init__(self):
        if (self.kind, self.min_connectivity) not in _LEGAL:
            raise DomainError(f"no graph class {self.kind.value} with connectivity {self.min_connectivity}")

    @property
    def tag(self) -> str:
        return _TAGS[(self.kind, self.min_connectivity)]

    @classmethod
    def from_tag(cls, tag: str) -> "GraphClass":
        for key, name in _TAGS.items():
            if name == tag:
                return cls(*key)
        raise DomainError(f"unknown class tag {tag!r}; expected one of {', '.join(_TAGS.values())}")

    def __str__(self) -> str:
        return f"{self.kind.value}-{self.min_connectivity}"


_TAGS = {
    (Kind.TRIANGULATION, 3): "tri",
    (Kind.TRIANGULATION, 4): "tri4",
    (Kind.TRIANGULATION, 5): "tri5",
    (Kind.QUADRANGULATION, 2): "quad",
    (Kind.QUADRANGULATION, 3): "quad3",
}
_LEGAL = set(_TAGS)

TRI = GraphClass(Kind.TRIANGULATION, 3)
TRI4 = GraphClass(Kind.TRIANGULATION, 4)
TRI5 = GraphClass(Kind.TRIANGULATION, 5)
QUAD = GraphClass(Kind.QUADRANGULATION, 2)
QUAD3 = GraphClass(Kind.QUADRANGULATION, 3)
ALL_CLASSES = (TRI, TRI4, TRI5, QUAD, QUAD3)


class PlaneGraph:
    """Simple connected plane graph given by its clockwise rotation system.

    >>> k4 = PlaneGraph([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]])
    >>> len(k4.faces)
    4
    """

    __slots__ = ("_rotation", "_pos", "__dict__")

    def __init__(self, rotation: Sequence[Iterable[int]]):
        rot = tuple(tuple(int(x) for x in r) for r in rotation)
        n = len(rot)
        if n == 0:
            raise StructuralError("a plane graph needs at least one vertex")
        pos = []
        for v, r in enumerate(rot):
            if len(set(r)) != len(r):
                raise StructuralError(f"vertex {v} lists a neighbour twice")
            for x in r:
                if not 0 <= x < n:
                    raise StructuralError(f"vertex {v} has neighbour {x} outside 0..{n - 1}")
                if x == v:
                    raise StructuralError(f"self-loop at vertex {v}")
            pos.append({x: i for i, x in enumerate(r)})
        for v, r in enumerate(rot):
            for x in r:
                if v not in pos[x]:
                    raise StructuralError(f"edge {v}-{x} is not listed at {x}")
        self._rotation = rot
        self._pos = pos
        if not self._connected():
            raise StructuralError("graph is not connected")
        if self.m and n - self.m + len(self.faces) != 2:
            raise StructuralError("rotation system is not planar (Euler's formula fails)")

    # construction helpers -------------------------------------------------

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: Optional[int] = None) -> "PlaneGraph":
        """Embed an abstract planar graph on vertices ``0..n-1``."""
        g = nx.Graph()
        if n is not None:
            g.add_nodes_from(range(n))
        g.add_edges_from(edges)
        ok, emb = nx.check_planarity(g)
        if not ok:
            raise StructuralError("graph is not planar")
        nodes = sorted(g)
        if nodes != list(range(len(nodes))):
            raise StructuralError("vertices must be 0..n-1")
        return cls([list(emb.neighbors_cw_order(v)) for v in nodes])

    @classmethod
    def from_arrays(cls, adj: np.ndarray, deg: np.ndarray) -> "PlaneGraph":
        return cls([adj[v, : deg[v]].tolist() for v in range(len(deg))])

    def relabel(self, perm: Sequence[int]) -> "PlaneGraph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        rot: list = [None] * self.n
        for v, r in enumerate(self._rotation):
            rot[perm[v]] = [perm[x] for x in r]
        return PlaneGraph(rot)

    def mirror(self) -> "PlaneGraph":
        return PlaneGraph([r[::-1] for r in self._rotation])

    # basic data -----------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._rotation)

    vertex_count = n

    @property
    def rotation(self) -> tuple[tuple[int, ...], ...]:
        return self._rotation

    @cached_property
    def m(self) -> int:
        return sum(len(r) for r in self._rotation) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._rotation[v]

    def degree(self, v: int) -> int:
        return len(self._rotation[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, r in enumerate(self._rotation) for v in r if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._pos[u]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    @cached_property
    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Padded neighbour matrix and degree vector used by compiled code."""
        width = max(len(r) for r in self._rotation) + 1
        adj = np.full((self.n, width), -1, np.int32)
        deg = np.zeros(self.n, np.int32)
        for v, r in enumerate(self._rotation):
            adj[v, : len(r)] = r
            deg[v] = len(r)
        return adj, deg

    def _connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            for y in self._rotation[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(faces(self))

    def __eq__(self, other) -> bool:
        return isinstance(other, PlaneGraph) and self._rotation == other._rotation

    def __hash__(self) -> int:
        return hash(self._rotation)

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.m})"


def faces(g: PlaneGraph) -> list[tuple[int, ...]]:
    """Trace the faces of ``g``; each directed edge lies on exactly one face.

    A face is listed as the cyclic sequence of vertices met along it.
    """
    rot = g._rotation
    pos = g._pos
    seen = set()
    out = []
    for u, r in enumerate(rot):
        for v in r:
            if (u, v) in seen:
                continue
            face = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                rb = rot[b]
                a, b = b, rb[(pos[b][a] + 1) % len(rb)]
            out.append(tuple(face))
    return out


def is_triangulation(g: PlaneGraph) -> bool:
    return g.n >= 3 and all(len(f) == 3 for f in g.faces) and (g.n > 3 or g.m == 3)


def is_bipartite(g: PlaneGraph) -> bool:
    color = [-1] * g.n
    color[0] = 0
    stack = [0]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if color[y] < 0:
                color[y] = 1 - color[x]
                stack.append(y)
            elif color[y] == color[x]:
                return False
    return True


def is_quadrangulation(g: PlaneGraph) -> bool:
    return g.n >= 4 and all(len(f) == 4 for f in g.faces) and is_bipartite(g)


def vertex_connectivity(g: PlaneGraph) -> int:
    """Minimum number of vertices whose removal disconnects ``g`` (``n-1`` if complete).

    Plane graphs are connected by construction, so the only excluded input
    is the single vertex.
    """
    if g.n < 2:
        raise DomainError("vertex connectivity needs at least two vertices")
    adj, deg = g.arrays
    return int(_kernels.vertex_connectivity(adj, deg, g.n))


def classify(g: PlaneGraph) -> Optional[GraphClass]:
    """Most specific class of ``g``, or ``None`` if it is neither kind."""
    if g.n >= 4 and is_triangulation(g):
        kappa = vertex_connectivity(g)
        return GraphClass(Kind.TRIANGULATION, max(3, min(kappa, 5)))
    if is_quadrangulation(g):
        kappa = vertex_connectivity(g)
        return GraphClass(Kind.QUADRANGULATION, 3 if kappa >= 3 else 2)
    return None


def belongs_to(g: PlaneGraph, cls: GraphClass) -> bool:
    """Whether ``g`` lies in ``cls`` (classes are nested by connectivity)."""
    own = classify(g)
    return own is not None and own.kind == cls.kind and own.min_connectivity >= cls.min_connectivity


# small named graphs used throughout the tests and demos

def k4() -> PlaneGraph:
    return PlaneGraph([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]])


def cycle4() -> PlaneGraph:
    return PlaneGraph([[1, 3], [0, 2], [1, 3], [0, 2]])


def octahedron() -> PlaneGraph:
    # poles 0 and 5, equator 1 2 3 4
    return PlaneGraph.from_edges(
        [(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (5, 3), (5, 4), (1, 2), (2, 3), (3, 4), (4, 1)]
    )


def cube() -> PlaneGraph:
    return PlaneGraph.from_edges(
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)]
    )


def icosahedron() -> PlaneGraph:
    return PlaneGraph.from_edges(nx.icosahedral_graph().edges())
