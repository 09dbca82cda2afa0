"""Isomorph-free generation of small triangulations and quadrangulations.

Triangulations are grown from K4 by vertex splitting: every triangulation on
``n >= 5`` vertices has a contractible edge (Steinitz and Rademacher; Bowen
and Fisk used the same operation for their census), so every one of them
arises by splitting a vertex of a triangulation with one vertex fewer.

Quadrangulations are grown from the 4-cycle by face expansion, the inverse of
contracting a face along a diagonal.  Splitting a vertex at two neighbours
that are consecutive in its rotation is the same as inserting a vertex of
degree 2 into a face, so the single operation covers both expansions in the
generation theorem of Brinkmann, Greenberg, Greenhill, McKay, Thomas and
Wollan for simple quadrangulations.

Children are deduplicated level by level through their canonical codes.
Classes of higher connectivity are generated with deficiency pruning: one
expansion lowers ``sum(max(0, k - deg(v)))`` by at most two, so a graph whose
deficiency exceeds twice the number of remaining steps cannot lead to a graph
of minimum degree ``k`` and is dropped.  Members of the class are then taken
as the graphs with the required vertex connectivity.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from . import _kernels
from .planegraph import (
    QUAD,
    QUAD3,
    TRI,
    TRI4,
    TRI5,
    DomainError,
    GraphClass,
    Kind,
    PlaneGraph,
    cycle4,
    k4,
)

SUPPORTED = {
    TRI: (4, 14),
    TRI4: (6, 14),
    TRI5: (12, 18),
    QUAD: (4, 15),
    QUAD3: (8, 15),
}

_CHUNK = 1024


def canonical_code(g: PlaneGraph) -> bytes:
    """Byte string identifying ``g`` up to isomorphism of plane graphs, mirror images included."""
    adj, deg = g.arrays
    code = np.zeros(2 * g.m + g.n, np.uint8)
    _kernels.canonical_code(adj, deg, g.n, code)
    return code.tobytes()


def from_code(code: bytes) -> PlaneGraph:
    """Rebuild a plane graph from its canonical code."""
    n = code.count(0)
    arr = np.frombuffer(code, np.uint8)
    adj, deg = _kernels.decode(arr, n, n)
    return PlaneGraph.from_arrays(adj, deg)


def _seed(cls: GraphClass) -> PlaneGraph:
    return k4() if cls.kind is Kind.TRIANGULATION else cycle4()


def _deficiency_k(cls: GraphClass) -> int:
    # minimum degree of every member; 0 disables pruning
    return {TRI: 0, TRI4: 4, TRI5: 5, QUAD: 0, QUAD3: 3}[cls]


def _expand_chunk(args):
    codes, n, width, kind, k, budget = args
    total = _kernels.count_children(codes, n, width)
    step = 4 if kind == _kernels.SPLIT_QUAD else 6
    out = np.zeros((total, codes.shape[1] + step + 1), np.uint8)
    rows = _kernels.expand(codes, n, width, kind, k, budget, out)
    return np.unique(out[:rows], axis=0)


def _next_level(codes: np.ndarray, n: int, width: int, kind: int, k: int, budget: int, jobs: int) -> np.ndarray:
    tasks = [(codes[i : i + _CHUNK], n, width, kind, k, budget) for i in range(0, len(codes), _CHUNK)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_expand_chunk, tasks))
    else:
        parts = [_expand_chunk(t) for t in tasks]
    if not parts:
        return codes[:0]
    return np.unique(np.concatenate(parts), axis=0)


def _check_range(cls: GraphClass, n_min: int, n_max: int) -> None:
    lo, hi = SUPPORTED[cls]
    if not lo <= n_min <= n_max <= hi:
        raise DomainError(f"{cls.tag} is supported for orders {lo}..{hi}, got {n_min}..{n_max}")


_CACHE: dict[GraphClass, dict[int, np.ndarray]] = {}


def _levels(cls: GraphClass, n_max: int, jobs: int = 1) -> dict[int, np.ndarray]:
    """Sorted canonical codes of the members of ``cls`` at every order up to ``n_max``.

    Results are kept per class; a run for a larger ``n_max`` also serves
    every smaller one, since pruning never removes an ancestor of a member.
    """
    known = _CACHE.get(cls)
    if known is not None and max(known) >= n_max:
        return known
    _CACHE[cls] = _generate(cls, n_max, jobs)
    return _CACHE[cls]


def _generate(cls: GraphClass, n_max: int, jobs: int) -> dict[int, np.ndarray]:
    seed = _seed(cls)
    width = n_max + 1
    kind = _kernels.SPLIT_TRI if cls.kind is Kind.TRIANGULATION else _kernels.SPLIT_QUAD
    k = _deficiency_k(cls)
    codes = np.frombuffer(canonical_code(seed), np.uint8)[None, :].copy()
    n = seed.n
    out = {}
    while True:
        members = codes
        if k:
            keep = np.array([_kernels.deficiency(_kernels.decode(c, n, width)[1], n, k) == 0 for c in codes], bool)
            members = codes[keep] if len(codes) else codes
        if cls.min_connectivity > {Kind.TRIANGULATION: 3, Kind.QUADRANGULATION: 2}[cls.kind] and len(members):
            members = members[_kernels.filter_connectivity(members, n, width, cls.min_connectivity)]
        out[n] = members
        if n == n_max:
            return out
        codes = _next_level(codes, n, width, kind, k, 2 * (n_max - n - 1), jobs)
        n += 1


def enumerate_codes(cls: GraphClass, n: int, jobs: int = 1) -> np.ndarray:
    """Canonical codes (one per row, sorted) of all members of ``cls`` with ``n`` vertices."""
    _check_range(cls, n, n)
    return _levels(cls, n, jobs)[n]


def enumerate_class(cls: GraphClass, n: int, jobs: int = 1) -> Iterator[PlaneGraph]:
    """One plane graph per isomorphism class of ``cls`` on ``n`` vertices, in code order."""
    for row in enumerate_codes(cls, n, jobs):
        yield from_code(row.tobytes())


@dataclass(frozen=True)
class ExtremalRow:
    order: int
    max_min_status: Optional[int]
    count: int
    total_classes: int


def min_statuses(codes: np.ndarray, n: int) -> np.ndarray:
    if len(codes) == 0:
        return np.zeros(0, np.int64)
    return _kernels.batch_min_status(codes, n, n)


def extremal_row(codes: np.ndarray, n: int) -> ExtremalRow:
    status = min_statuses(codes, n)
    if len(status) == 0:
        return ExtremalRow(n, None, 0, 0)
    best = int(status.max())
    return ExtremalRow(n, best, int((status == best).sum()), len(status))


def extremal_table(cls: GraphClass, n_min: int, n_max: int, jobs: int = 1) -> list[ExtremalRow]:
    """Largest minimum status at each order and how many graphs attain it."""
    _check_range(cls, n_min, n_max)
    levels = _levels(cls, n_max, jobs)
    return [extremal_row(levels[n], n) for n in range(n_min, n_max + 1)]


__all__ = [
    "SUPPORTED",
    "ExtremalRow",
    "canonical_code",
    "enumerate_class",
    "enumerate_codes",
    "extremal_row",
    "extremal_table",
    "from_code",
    "min_statuses",
    "QUAD",
    "QUAD3",
    "TRI",
    "TRI4",
    "TRI5",
]
