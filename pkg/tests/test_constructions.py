from fractions import Fraction

import pytest

from planeprox import (
    ConstructionSpec, DomainError, UnsupportedOrder, build, construct, formula_proximity, invariants,
    verify_construction,
)
from planeprox.constructions import FAMILIES, FAMILY_CLASS, PERIOD, n_min, supported, supported_orders
from planeprox.enumeration import canonical_code
from planeprox.planegraph import classify, icosahedron, is_quadrangulation, is_triangulation


@pytest.mark.parametrize("family,n,status", [("T", 18, 33), ("Q", 12, 20), ("Q3", 20, 44), ("T5", 12, 18)])
def test_build_examples(family, n, status):
    g = build(ConstructionSpec(family, n))
    assert g.n == n and invariants(g).min_status == status
    assert classify(g) == FAMILY_CLASS[family]


def test_t5_twelve_is_the_icosahedron():
    assert canonical_code(build(ConstructionSpec("T5", 12))) == canonical_code(icosahedron())


def test_formula_examples():
    assert formula_proximity("T", 18) == Fraction(33, 17)
    assert formula_proximity("Q", 16) == Fraction(34, 15)
    for n in (12, 16, 20):
        assert formula_proximity("Q", n) * (n - 1) == Fraction(n * n + 16, 8)
    with pytest.raises(DomainError):
        formula_proximity("T", 2)
    with pytest.raises(DomainError):
        formula_proximity("X", 20)


def test_verify_examples():
    r = verify_construction("T", 18)
    assert r.match and r.built_min_status == 33 and r.class_ok and r.witness_ok
    r = verify_construction("Q", 20)
    assert r.match and r.built_min_status == 52
    for n in range(48, 97, 6):
        assert verify_construction("T", n).match


def test_unsupported_orders():
    with pytest.raises(UnsupportedOrder):
        ConstructionSpec("T", 5).k
    with pytest.raises(UnsupportedOrder):
        build(ConstructionSpec("T5", 22))
    with pytest.raises(DomainError):
        ConstructionSpec("T6", 20)
    assert not supported("T5", 13) and supported("T5", 12)


def test_t5_half_integer_branch_is_reported():
    # the closed form gives a fractional minimum status here, so no graph can match it
    for n in (32, 42):
        r = verify_construction("T5", n)
        assert r.formula_min_status.denominator == 2
        assert not r.match and r.class_ok and r.witness_ok


def test_orders_per_residue_are_contiguous():
    for fam in FAMILIES:
        orders = supported_orders(fam, 200)
        for res in range(PERIOD[fam]):
            got = [n for n in orders if n % PERIOD[fam] == res]
            if (fam, res) == ("T5", 2):
                assert got[0] == 12
                got = got[1:]
            assert got == list(range(got[0], 201, PERIOD[fam]))
            assert n_min(fam, res) == (12 if (fam, res) == ("T5", 2) else got[0])


@pytest.mark.parametrize("family", FAMILIES)
def test_every_supported_order_up_to_120(family):
    for n in supported_orders(family, 120):
        con = construct(ConstructionSpec(family, n))
        g = con.graph
        assert g.n == n
        assert classify(g) == FAMILY_CLASS[family]
        assert is_triangulation(g) if family.startswith("T") else is_quadrangulation(g)
        inv = invariants(g)
        assert inv.sigma[con.witness] == inv.min_status
