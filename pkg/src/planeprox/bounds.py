"""Upper bounds on the proximity of triangulations and quadrangulations.

For a central vertex ``v`` of radius ``r`` the total distance is
``F(n_0, ..., n_r) = sum(i * n_i)``.  The layer lemmas give lower bounds on
each ``n_i``, so ``F`` is at most its maximum over integer sequences that
respect those bounds.  :func:`maximize_F` computes that maximum exactly;
:func:`theorem_bound` gives the closed forms obtained by relaxing it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .metrics import invariants
from .planegraph import QUAD, QUAD3, TRI, TRI4, TRI5, DomainError, GraphClass, PlaneGraph, classify

F_ = Fraction

# smallest order at which each class has a member
CLASS_MIN_ORDER = {TRI: 4, TRI4: 6, TRI5: 12, QUAD: 4, QUAD3: 8}

# pi <= (n + a) / b + c / (n - 1)
_CLOSED_FORMS = {
    TRI: (19, 12, F_(25, 3)),
    TRI4: (35, 16, F_(91, 4)),
    TRI5: (57, 20, F_(393, 10)),
    QUAD: (11, 8, F_(9, 2)),
    QUAD3: (25, 12, F_(169, 12)),
}


def theorem_bound(cls: GraphClass, n: int) -> Fraction:
    """Closed-form upper bound on the proximity of an ``n``-vertex member of ``cls``."""
    if n < CLASS_MIN_ORDER[cls]:
        raise DomainError(f"{cls.tag} has no members with {n} vertices")
    a, b, c = _CLOSED_FORMS[cls]
    return F_(n + a, b) + c / (n - 1)


def sigma_closed_form_tri(n: int) -> Fraction:
    """``(n^2 + 18n + 81) / 12``, the total-distance form of the triangulation bound."""
    return F_(n * n + 18 * n + 81, 12)


# ---------------------------------------------------------------- profiles

Tier = tuple[int, Callable[[int], Iterator[range]]]


@dataclass(frozen=True)
class LayerConstraintProfile:
    """Lower bounds on the layer sizes of a central vertex.

    ``tiers`` lists ``(bound, ranges)`` where ``ranges(r)`` yields the index
    ranges the bound applies to.  Each range is measured from one end of the
    sequence, so when ranges overlap (only for small radius) the index is near
    both ends and the smaller bound is the one that holds.
    """

    name: str
    face_length: int
    tiers: tuple[Tier, ...]

    def lower_bounds(self, r: int) -> list[int]:
        """Bounds for ``n_0 .. n_r``; entry 0 is the root, entry ``r`` only needs to be positive."""
        low: list = [None] * (r + 1)
        for bound, ranges in self.tiers:
            for rng in ranges(r):
                for i in rng:
                    if 1 <= i <= r - 1:
                        low[i] = bound if low[i] is None else min(low[i], bound)
        return [1 if x is None else x for x in low]


def _lemma1(ell: int) -> tuple[Tier, ...]:
    h = ell // 2
    return (
        (3, lambda r: (range(1, h + 1), range(r - h, r))),
        (4, lambda r: (range(h + 1, ell + 1), range(r - ell, r - h))),
        (6, lambda r: (range(ell + 1, r - ell),)),
    )


def _lemma2(ell: int) -> tuple[Tier, ...]:
    t = 3 * ell // 2
    return (
        (4, lambda r: (range(1, ell + 1), range(r - ell, r))),
        (6, lambda r: (range(ell + 1, t + 1), range(r - t, r - ell))),
        (8, lambda r: (range(t + 1, r - t),)),
    )


def _lemma3(ell: int) -> tuple[Tier, ...]:
    t = 3 * ell // 2
    return (
        (5, lambda r: (range(1, ell + 1), range(r - ell, r))),
        (6, lambda r: (range(ell + 1, t + 1), range(r - t, r - ell))),
        (8, lambda r: (range(t + 1, 2 * ell + 1), range(r - 2 * ell, r - t))),
        (10, lambda r: (range(2 * ell + 1, r - 2 * ell),)),
    )


def _lemma5() -> tuple[Tier, ...]:
    return (
        (2, lambda r: ([1, 2, r - 2, r - 1],)),
        (4, lambda r: (range(3, r - 2),)),
    )


PROFILES = {
    TRI: LayerConstraintProfile("3-connected, faces of length 3", 3, _lemma1(3)),
    TRI4: LayerConstraintProfile("4-connected, faces of length 3", 3, _lemma2(3)),
    TRI5: LayerConstraintProfile("5-connected, faces of length 3", 3, _lemma3(3)),
    QUAD: LayerConstraintProfile("quadrangulation", 4, _lemma5()),
    QUAD3: LayerConstraintProfile("3-connected, faces of length 4", 4, _lemma1(4)),
}


def profile_for(cls: GraphClass) -> LayerConstraintProfile:
    return PROFILES[cls]


def connectivity_profile(k: int, ell: int) -> LayerConstraintProfile:
    """Profile of the layer lemma for ``k``-connected plane graphs with longest face ``ell``."""
    tiers = {3: _lemma1, 4: _lemma2, 5: _lemma3}
    if k not in tiers:
        raise DomainError(f"layer lemmas exist for connectivity 3, 4, 5, not {k}")
    return LayerConstraintProfile(f"{k}-connected, faces of length {ell}", ell, tiers[k](ell))


def quadrangulation_profile() -> LayerConstraintProfile:
    return PROFILES[QUAD]


# ---------------------------------------------------------------- maximisation

@dataclass(frozen=True)
class BoundResult:
    sigma_upper: Fraction
    proximity_upper: Fraction
    witness_sequence: tuple[int, ...]

    @property
    def radius(self) -> int:
        return len(self.witness_sequence) - 1


def F(seq) -> int:
    return sum(i * x for i, x in enumerate(seq))


def maximize_F(profile: LayerConstraintProfile, n: int) -> BoundResult:
    """Exact maximum of ``F`` over admissible layer sequences of total ``n``.

    For a fixed radius the maximum puts every inner layer at its lower bound
    and the surplus on the last layer, since moving one vertex outward from
    layer ``i`` to layer ``r`` raises ``F`` by ``r - i``.
    """
    if n < 2:
        raise DomainError("need at least two vertices")
    best = None
    for r in range(1, n):
        low = profile.lower_bounds(r)
        last = n - sum(low[:r])
        if last < 1:
            continue
        seq = tuple(low[:r]) + (last,)
        value = F(seq)
        if best is None or value > best[0]:
            best = (value, seq)
    if best is None:
        raise DomainError(f"no admissible layer sequence with {n} vertices")
    return BoundResult(F_(best[0]), F_(best[0], n - 1), best[1])


def admissible_sequences(profile: LayerConstraintProfile, n: int) -> Iterator[tuple[int, ...]]:
    """Every integer sequence ``(1, n_1, ..., n_r)`` with sum ``n`` meeting the profile."""
    for r in range(1, n):
        low = profile.lower_bounds(r)

        def fill(i: int, left: int, prefix: tuple[int, ...]):
            if i == r:
                if left >= 1:
                    yield prefix + (left,)
                return
            rest = sum(low[i + 1 : r]) + 1
            for x in range(low[i], left - rest + 1):
                yield from fill(i + 1, left - x, prefix + (x,))

        yield from fill(1, n - 1, (1,))


def brute_force_F(profile: LayerConstraintProfile, n: int) -> int:
    """Largest ``F`` over every admissible sequence, by exhaustion."""
    best = max((F(s) for s in admissible_sequences(profile, n)), default=None)
    if best is None:
        raise DomainError(f"no admissible layer sequence on {n} vertices for {profile.name}")
    return best


# ---------------------------------------------------------------- concrete graphs

@dataclass(frozen=True)
class BoundCheck:
    pi: Fraction
    bound: Fraction
    ok: bool


def check_bound(g: PlaneGraph) -> BoundCheck:
    cls = classify(g)
    if cls is None:
        raise DomainError("graph is neither a triangulation nor a quadrangulation")
    pi = invariants(g).proximity
    bound = theorem_bound(cls, g.n)
    return BoundCheck(pi, bound, pi <= bound)
