from fractions import Fraction

import pytest

from planeprox import (
    ALL_CLASSES, PROFILES, QUAD, QUAD3, TRI, TRI4, TRI5, DomainError, brute_force_F, check_bound,
    icosahedron, k4, maximize_F, theorem_bound,
)
from planeprox.bounds import CLASS_MIN_ORDER, F, admissible_sequences, connectivity_profile, sigma_closed_form_tri


def test_theorem_bound_examples():
    assert theorem_bound(TRI, 12) == Fraction(31, 12) + Fraction(25, 33)
    assert theorem_bound(QUAD, 12) == Fraction(23, 8) + Fraction(9, 22)
    assert theorem_bound(TRI5, 12) == Fraction(69, 20) + Fraction(393, 110)


@pytest.mark.parametrize("cls", ALL_CLASSES)
def test_theorem_bound_domain(cls):
    with pytest.raises(DomainError):
        theorem_bound(cls, CLASS_MIN_ORDER[cls] - 1)


def test_sigma_form_of_triangulation_bound():
    for n in range(4, 200):
        assert theorem_bound(TRI, n) * (n - 1) == sigma_closed_form_tri(n)


def test_profile_ranges():
    # faces of length 3: tiers 3 / 4 / 6 away from both ends
    assert PROFILES[TRI].lower_bounds(10) == [1, 3, 4, 4, 6, 6, 6, 4, 4, 3, 1]
    assert PROFILES[TRI4].lower_bounds(12) == [1, 4, 4, 4, 6, 8, 8, 8, 6, 4, 4, 4, 1]
    assert PROFILES[TRI5].lower_bounds(16) == [1, 5, 5, 5, 6, 8, 8, 10, 10, 10, 8, 8, 6, 5, 5, 5, 1]
    assert PROFILES[QUAD].lower_bounds(8) == [1, 2, 2, 4, 4, 4, 2, 2, 1]
    assert PROFILES[QUAD3].lower_bounds(12) == [1, 3, 3, 4, 4, 6, 6, 6, 4, 4, 3, 3, 1]
    # ranges meeting in the middle keep the bound of the nearer end
    assert connectivity_profile(3, 4).lower_bounds(4) == [1, 3, 3, 3, 1]


def test_triangulation_oracle_example():
    res = maximize_F(PROFILES[TRI], 12)
    assert res.sigma_upper <= Fraction(441, 12)
    assert sum(res.witness_sequence) == 12 and res.witness_sequence[0] == 1
    assert res.proximity_upper == res.sigma_upper / 11


def test_surplus_quadratic_peak():
    # the last-layer surplus x enters the relaxed bound as -x^2 + 20x
    assert max(-x * x + 20 * x for x in range(0, 40)) == 100 == -(10 ** 2) + 20 * 10


@pytest.mark.parametrize("cls", ALL_CLASSES)
def test_oracle_equals_brute_force(cls):
    for n in range(2, 21):
        try:
            res = maximize_F(PROFILES[cls], n)
        except DomainError:
            assert not list(admissible_sequences(PROFILES[cls], n))
            continue
        assert res.sigma_upper == brute_force_F(PROFILES[cls], n)
        assert F(res.witness_sequence) == res.sigma_upper


@pytest.mark.parametrize("cls", ALL_CLASSES)
def test_oracle_below_closed_form_and_monotone(cls):
    prev = None
    for n in range(max(8, CLASS_MIN_ORDER[cls]), 121):
        res = maximize_F(PROFILES[cls], n)
        gap = theorem_bound(cls, n) * (n - 1) - res.sigma_upper
        assert 0 <= gap <= 100
        low = PROFILES[cls].lower_bounds(res.radius)
        assert all(x >= low[i] for i, x in enumerate(res.witness_sequence[:-1]))
        if prev is not None:
            assert res.sigma_upper >= prev
        prev = res.sigma_upper


def test_check_bound_examples():
    r = check_bound(icosahedron())
    assert r.pi == Fraction(18, 11) and r.bound == Fraction(69, 20) + Fraction(393, 110) and r.ok
    r = check_bound(k4())
    assert r.pi == 1 and r.bound == Fraction(23, 12) + Fraction(25, 9) and r.ok


def test_check_bound_unclassifiable():
    from planeprox import PlaneGraph

    with pytest.raises(DomainError):
        check_bound(PlaneGraph([[1], [0, 2], [1]]))


def test_brute_force_without_sequences():
    with pytest.raises(DomainError):
        brute_force_F(PROFILES[TRI5], 1)
