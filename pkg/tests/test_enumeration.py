import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st
import itertools

from planeprox import (
    QUAD, QUAD3, TRI, TRI4, TRI5, ConstructionSpec, DomainError, GraphClass, build, canonical_code,
    enumerate_class, extremal_table, from_code, k4, octahedron,
)
from planeprox.enumeration import SUPPORTED, enumerate_codes
from planeprox.planar_code import read_file
from planeprox.planegraph import belongs_to, classify

from census import CENSUS
from conftest import random_relabel

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
# orders checked in the default run; the full supported ranges agree as well but take minutes
FAST = {TRI: 12, TRI4: 13, TRI5: 16, QUAD: 13, QUAD3: 14}


@pytest.mark.parametrize("cls", list(FAST), ids=str)
def test_census_counts(cls):
    lo, _ = SUPPORTED[cls]
    for n in range(lo, FAST[cls] + 1):
        assert len(enumerate_codes(cls, n)) == CENSUS[cls.tag][n], (cls.tag, n)


@pytest.mark.parametrize("cls", list(FAST), ids=str)
def test_members_distinct_sorted_and_in_class(cls):
    lo, _ = SUPPORTED[cls]
    for n in range(lo, min(FAST[cls], lo + 5) + 1):
        codes = enumerate_codes(cls, n)
        rows = [r.tobytes() for r in codes]
        assert rows == sorted(rows) and len(set(rows)) == len(rows)
        for g in enumerate_class(cls, n):
            assert g.n == n and belongs_to(g, cls)
            assert canonical_code(g) in rows


def test_small_orders_by_hand():
    assert [classify(g) for g in enumerate_class(TRI, 4)] == [TRI]
    assert len(list(enumerate_class(TRI, 6))) == 2
    assert canonical_code(list(enumerate_class(TRI4, 6))[0]) == canonical_code(octahedron())
    assert list(enumerate_class(TRI5, 13)) == []


def test_code_is_invariant_under_all_k4_labelings():
    g = k4()
    codes = {canonical_code(g.relabel(p)) for p in itertools.permutations(range(4))}
    assert len(codes) == 1


def test_code_separates_the_two_six_vertex_triangulations():
    a, b = enumerate_class(TRI, 6)
    assert canonical_code(a) != canonical_code(b)


@given(seed=st.integers(0, 10**6), family=st.sampled_from(["T", "T4", "Q", "Q3"]), extra=st.integers(0, 2))
def test_code_relabel_and_mirror_invariance(seed, family, extra):
    n = {"T": 18, "T4": 18, "Q": 16, "Q3": 26}[family] + extra * {"T": 6, "T4": 8, "Q": 4, "Q3": 6}[family]
    g = build(ConstructionSpec(family, n))
    h, _ = random_relabel(g, seed)
    c = canonical_code(g)
    assert canonical_code(h) == c == canonical_code(h.mirror())
    assert canonical_code(from_code(c)) == c


def test_unsupported_ranges():
    for cls, (lo, hi) in SUPPORTED.items():
        with pytest.raises(DomainError):
            enumerate_codes(cls, lo - 1)
        with pytest.raises(DomainError):
            extremal_table(cls, lo, hi + 1)


def test_fixtures_agree_with_generator():
    manifest = json.loads((FIXTURES / "MANIFEST.json").read_text())
    for name, count in manifest["files"].items():
        tag, n = name.split("/")
        cls = GraphClass.from_tag(tag)
        n = int(n.split(".")[0])
        graphs = read_file(FIXTURES / name)
        assert len(graphs) == count == CENSUS[tag][n]
        assert sorted(canonical_code(g) for g in graphs) == [r.tobytes() for r in enumerate_codes(cls, n)]
