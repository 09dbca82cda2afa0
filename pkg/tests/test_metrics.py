from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from planeprox import (
    QUAD, TRI, ConstructionSpec, DomainError, PlaneGraph, active_vertices, bfs_layers, build,
    cube, cycle4, enumerate_class, icosahedron, invariants, k4, octahedron,
)

from conftest import floyd_warshall, random_relabel


def test_layer_examples():
    assert bfs_layers(cube(), 0).counts == (1, 3, 3, 1)
    assert all(bfs_layers(icosahedron(), v).counts == (1, 5, 5, 1) for v in range(12))
    assert bfs_layers(k4(), 2).counts == (1, 3)


@pytest.mark.parametrize(
    "g,status,pi",
    [(k4(), 3, Fraction(1)), (octahedron(), 6, Fraction(6, 5)), (icosahedron(), 18, Fraction(18, 11)),
     (cube(), 12, Fraction(12, 7)), (cycle4(), 4, Fraction(4, 3))],
)
def test_invariant_examples(g, status, pi):
    r = invariants(g)
    assert r.min_status == status and r.proximity == pi
    assert isinstance(r.proximity, Fraction) and isinstance(r.remoteness, Fraction)


def test_single_vertex_is_domain_error():
    with pytest.raises(DomainError):
        invariants(PlaneGraph([[]]))


def test_report_consistency(small_graph):
    r = invariants(small_graph)
    n = small_graph.n
    assert r.min_status == min(r.sigma)
    assert r.proximity == Fraction(r.min_status, n - 1)
    assert r.remoteness == Fraction(max(r.sigma), n - 1)
    assert 2 * r.wiener == sum(r.sigma)
    assert r.radius <= r.diameter <= 2 * r.radius
    assert r.proximity <= r.remoteness
    for v in range(n):
        layers = bfs_layers(small_graph, v)
        assert layers.counts[0] == 1 and sum(layers.counts) == n and min(layers.counts) >= 1
        assert layers.total_distance() == r.sigma[v]


def test_active_vertices_cube():
    g = cube()
    assert active_vertices(g, 0, 1) == set(g.neighbors(0))
    assert len(active_vertices(g, 0, 2)) == 3
    with pytest.raises(DomainError):
        active_vertices(g, 0, 3)
    with pytest.raises(DomainError):
        active_vertices(g, 0, 0)


def test_active_layers_of_q12():
    g = build(ConstructionSpec("Q", 12))
    for v in range(g.n):
        ecc = len(bfs_layers(g, v).counts) - 1
        for i in range(1, ecc):
            assert len(active_vertices(g, v, i)) >= 2


@pytest.mark.parametrize("cls", [TRI, QUAD])
def test_against_floyd_warshall(cls):
    for n in range(4, 9):
        for g in enumerate_class(cls, n):
            d = floyd_warshall(g)
            sigma = tuple(sum(row) for row in d)
            ecc = [max(row) for row in d]
            r = invariants(g)
            assert r.sigma == sigma
            assert r.radius == min(ecc) and r.diameter == max(ecc)
            assert r.wiener == sum(sigma) // 2
            assert r.central_vertices == tuple(v for v in range(n) if ecc[v] == min(ecc))


@given(seed=st.integers(0, 10**6), n=st.sampled_from([20, 26, 32]))
def test_relabel_invariance(seed, n):
    g = build(ConstructionSpec("Q3", n))
    h, perm = random_relabel(g, seed)
    a, b = invariants(g), invariants(h)
    assert (a.min_status, a.proximity, a.remoteness, a.wiener, a.radius, a.diameter) == (
        b.min_status, b.proximity, b.remoteness, b.wiener, b.radius, b.diameter)
    assert all(b.sigma[perm[v]] == a.sigma[v] for v in range(g.n))
    assert sorted(b.central_vertices) == sorted(perm[v] for v in a.central_vertices)
