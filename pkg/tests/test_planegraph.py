import networkx as nx
import pytest
from hypothesis import given, strategies as st

from planeprox import (
    QUAD, QUAD3, TRI, TRI4, TRI5, DomainError, GraphClass, Kind, PlaneGraph, StructuralError,
    classify, cube, cycle4, enumerate_class, faces, icosahedron, is_quadrangulation,
    is_triangulation, k4, octahedron, vertex_connectivity,
)
from planeprox.planegraph import belongs_to

from conftest import random_relabel


def test_face_counts():
    assert len(faces(k4())) == 4 and all(len(f) == 3 for f in faces(k4()))
    assert sorted(len(f) for f in faces(cycle4())) == [4, 4]
    oct_faces = faces(octahedron())
    assert len(oct_faces) == 8 and all(len(f) == 3 for f in oct_faces)


def test_every_directed_edge_on_one_face(small_graph):
    seen = []
    for f in small_graph.faces:
        seen += [(f[i], f[(i + 1) % len(f)]) for i in range(len(f))]
    assert len(seen) == len(set(seen)) == 2 * small_graph.m
    assert small_graph.n - small_graph.m + len(small_graph.faces) == 2


def test_predicates():
    assert is_triangulation(k4())
    assert is_quadrangulation(cube())
    assert not is_quadrangulation(octahedron())
    assert not is_triangulation(cube())


@pytest.mark.parametrize("g,kappa", [(octahedron(), 4), (icosahedron(), 5), (cube(), 3), (k4(), 3), (cycle4(), 2)])
def test_vertex_connectivity_examples(g, kappa):
    assert vertex_connectivity(g) == kappa


def test_classify_examples():
    assert classify(icosahedron()) == TRI5
    assert classify(cube()) == QUAD3
    assert classify(cycle4()) == QUAD
    assert classify(octahedron()) == TRI4
    assert classify(k4()) == TRI
    path = PlaneGraph([[1], [0, 2], [1]])
    assert classify(path) is None


def test_graph_class_legality():
    with pytest.raises(DomainError):
        GraphClass(Kind.TRIANGULATION, 2)
    with pytest.raises(DomainError):
        GraphClass(Kind.QUADRANGULATION, 4)
    assert GraphClass.from_tag("quad3") == QUAD3


@pytest.mark.parametrize(
    "rotation",
    [
        [[1], []],  # asymmetric
        [[1, 1], [0, 0]],  # repeated neighbour
        [[0]],  # loop
        [[1], [0], [3], [2]],  # disconnected
        [[1, 2, 3, 4], [0, 2, 3, 4], [0, 1, 3, 4], [0, 1, 2, 4], [0, 1, 2, 3]],  # K5 is not plane
    ],
)
def test_structural_errors(rotation):
    with pytest.raises(StructuralError):
        PlaneGraph(rotation)


def test_nonplanar_rotation_of_planar_graph():
    # K4 with one rotation reversed has the wrong number of faces
    with pytest.raises(StructuralError):
        PlaneGraph([[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 2, 1]])


def test_single_vertex_connectivity_is_domain_error():
    with pytest.raises(DomainError):
        vertex_connectivity(PlaneGraph([[]]))


@pytest.mark.parametrize("cls,n", [(TRI, 9), (QUAD, 10), (TRI4, 11), (QUAD3, 12)])
def test_connectivity_matches_networkx(cls, n):
    for g in enumerate_class(cls, n):
        assert vertex_connectivity(g) == nx.node_connectivity(g.to_networkx())


def test_every_triangulation_is_3_connected():
    for n in range(4, 12):
        for g in enumerate_class(TRI, n):
            assert vertex_connectivity(g) >= 3


def test_degree_and_face_sums():
    for n in range(4, 10):
        for g in enumerate_class(QUAD, n):
            assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m
            assert sum(len(f) for f in g.faces) == 2 * g.m


@given(seed=st.integers(0, 10**6), which=st.sampled_from(["ico", "cube", "oct", "c4"]))
def test_classify_relabel_invariant(seed, which):
    g = {"ico": icosahedron, "cube": cube, "oct": octahedron, "c4": cycle4}[which]()
    h, _ = random_relabel(g, seed)
    assert classify(h) == classify(g)
    assert belongs_to(h, classify(g))


def test_mirror_is_valid(small_graph):
    m = small_graph.mirror()
    assert len(m.faces) == len(small_graph.faces)
    assert classify(m) == classify(small_graph)
