import json

import pytest
from hypothesis import given, strategies as st

from circprime.errors import DomainError
from circprime.galois import (
    OrbitPartition,
    compute_orbits,
    orbit_count_direct,
    orbit_count_divisor_formula,
    orbit_divisor,
    unitary_divisors,
)
from oracle import brute_divisor_count, brute_orbits, sieve


def test_prime_has_two_orbits():
    p = compute_orbits(7)
    assert p.orbits == ((0,), (1, 2, 3, 4, 5, 6))


def test_six():
    assert compute_orbits(6).orbits == ((0,), (1, 5), (2, 4), (3,))


@given(st.integers(3, 400))
def test_matches_union_find(n):
    assert compute_orbits(n) == brute_orbits(n)


@given(st.integers(3, 3000))
def test_count_is_divisor_count(n):
    assert orbit_count_direct(n) == brute_divisor_count(n)


def test_two_orbits_iff_prime():
    table = sieve(3000)
    for n in range(3, 3001):
        assert (orbit_count_direct(n) == 2) == table.is_prime(n)


def test_orbit_divisor():
    p = compute_orbits(12)
    ds = sorted(orbit_divisor(12, o) for o in p.orbits)
    assert ds == [1, 2, 3, 4, 6, 12]
    with pytest.raises(DomainError):
        orbit_divisor(12, (1, 2))


def test_divisor_formula_disagrees_on_prime_powers():
    assert unitary_divisors(4) == [4]
    assert orbit_count_divisor_formula(4) == 2
    assert orbit_count_direct(4) == 3
    assert orbit_count_divisor_formula(8) == 2
    assert orbit_count_direct(8) == 4


def test_divisor_formula_exact_on_squarefree():
    for n in (6, 10, 15, 30, 105, 210):
        assert orbit_count_divisor_formula(n) == orbit_count_direct(n)


def test_json_round_trip():
    p = compute_orbits(30)
    assert OrbitPartition.from_dict(json.loads(p.to_json())) == p
    assert p.orbit_of(5) == (5, 25)
    with pytest.raises(DomainError):
        p.orbit_of(30)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_domain(n):
    with pytest.raises(DomainError):
        compute_orbits(n)
