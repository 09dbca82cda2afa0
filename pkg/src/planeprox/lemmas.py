"""Layer-size and active-vertex lemmas as checkable predicates.

Every checker returns the list of violations it finds; an empty list means
the statement holds on the given graph.  The layer lemmas are checked at
every central vertex, the active-vertex lemma at every vertex.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Union

import numpy as np

from .bounds import LayerConstraintProfile, connectivity_profile, quadrangulation_profile
from .metrics import distance_matrix
from .planegraph import DomainError, PlaneGraph, is_quadrangulation, vertex_connectivity


@dataclass(frozen=True, order=True)
class LemmaViolation:
    fingerprint: str
    lemma: str
    vertex: int
    layer: int
    observed: int
    required: int

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def fingerprint(g: PlaneGraph) -> str:
    from .enumeration import canonical_code

    return canonical_code(g).hex()


def _profile_violations(g: PlaneGraph, profile: LayerConstraintProfile, lemma: str) -> list[LemmaViolation]:
    d = distance_matrix(g)
    ecc = d.max(axis=1)
    r = int(ecc.min())
    low = profile.lower_bounds(r)
    out = []
    for v in np.flatnonzero(ecc == r):
        counts = np.bincount(d[v], minlength=r + 1)
        for i in range(1, r):
            if counts[i] < low[i]:
                out.append((int(v), i, int(counts[i]), low[i]))
    if not out:
        return []
    fp = fingerprint(g)
    return [LemmaViolation(fp, lemma, *t) for t in out]


def check_layer_lemma(g: PlaneGraph, k: Union[int, str]) -> list[LemmaViolation]:
    """Compare the layers of every central vertex with the matching lemma.

    ``k`` is 3, 4 or 5 for the ``k``-connected layer lemmas (with the longest
    face of ``g`` as face length), or ``"quad"`` for the quadrangulation lemma.
    """
    if k == "quad":
        if not is_quadrangulation(g):
            raise DomainError("the quadrangulation layer lemma needs a quadrangulation")
        return _profile_violations(g, quadrangulation_profile(), "layers-quad")
    if k not in (3, 4, 5):
        raise DomainError(f"unknown layer lemma {k!r}")
    if g.n <= k or vertex_connectivity(g) < k:
        raise DomainError(f"graph is not {k}-connected")
    ell = max(len(f) for f in g.faces)
    return _profile_violations(g, connectivity_profile(k, ell), f"layers-{k}")


def check_active_face_lemma(g: PlaneGraph) -> list[LemmaViolation]:
    """Each active vertex of a layer shares a face with another active vertex of that layer."""
    if not is_quadrangulation(g):
        raise DomainError("the active-vertex lemma is stated for quadrangulations")
    d = distance_matrix(g)
    faces = g.faces
    out = []
    for v in range(g.n):
        dist = d[v]
        active = [any(dist[y] == dist[x] + 1 for y in g.neighbors(x)) for x in range(g.n)]
        # vertices that share a face with an active vertex of their own layer
        covered = set()
        for f in faces:
            act = [x for x in f if active[x]]
            for a in act:
                if any(b != a and dist[b] == dist[a] for b in act):
                    covered.add(a)
        ecc = int(dist.max())
        for w in range(g.n):
            i = int(dist[w])
            if 1 <= i <= ecc - 1 and active[w] and w not in covered:
                out.append((v, i, w))
    if not out:
        return []
    fp = fingerprint(g)
    # observed/required record how many partners were found and needed
    return [LemmaViolation(fp, f"active-face(w={w})", v, i, 0, 1) for v, i, w in out]
