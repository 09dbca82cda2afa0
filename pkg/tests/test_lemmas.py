import json

import pytest

from planeprox import (
    QUAD, QUAD3, TRI, TRI4, TRI5, ConstructionSpec, DomainError, LemmaViolation, PlaneGraph, build,
    check_active_face_lemma, check_layer_lemma, cube, cycle4, enumerate_class, icosahedron, k4, octahedron,
)

LAYER_K = {TRI: 3, TRI4: 4, TRI5: 5, QUAD: "quad", QUAD3: 3}


def test_examples():
    assert check_layer_lemma(icosahedron(), 5) == []
    assert check_layer_lemma(octahedron(), 4) == []
    assert check_active_face_lemma(cube()) == []
    for n in (12, 16, 20):
        g = build(ConstructionSpec("Q", n))
        assert check_active_face_lemma(g) == []
        assert check_layer_lemma(g, "quad") == []


def test_hypothesis_not_met():
    with pytest.raises(DomainError):
        check_layer_lemma(octahedron(), 5)
    with pytest.raises(DomainError):
        check_layer_lemma(k4(), 4)
    with pytest.raises(DomainError):
        check_layer_lemma(k4(), "quad")
    with pytest.raises(DomainError):
        check_layer_lemma(cube(), 7)
    with pytest.raises(DomainError):
        check_active_face_lemma(icosahedron())
    with pytest.raises(DomainError):
        check_active_face_lemma(PlaneGraph([[1], [0, 2], [1]]))


def test_violation_is_materialised():
    # a 3-connected graph whose central layers are thinner than a profile
    # demanding more than it has: hand the checker a wrong connectivity claim
    from planeprox.lemmas import _profile_violations
    from planeprox.bounds import connectivity_profile

    vs = _profile_violations(cycle4(), connectivity_profile(5, 3), "probe")
    assert vs and all(isinstance(v, LemmaViolation) and v.observed < v.required for v in vs)
    row = json.loads(vs[0].to_json())
    assert set(row) == {"fingerprint", "lemma", "vertex", "layer", "observed", "required"}


@pytest.mark.parametrize(
    "cls,hi", [(TRI, 10), (TRI4, 12), (TRI5, 16), (QUAD, 12), (QUAD3, 13)]
)
def test_corpora(cls, hi):
    lo = {TRI: 4, TRI4: 6, TRI5: 12, QUAD: 4, QUAD3: 8}[cls]
    for n in range(lo, hi + 1):
        for g in enumerate_class(cls, n):
            assert check_layer_lemma(g, LAYER_K[cls]) == []
            if cls.kind.value == "quadrangulation":
                assert check_layer_lemma(g, "quad") == []
                assert check_active_face_lemma(g) == []
