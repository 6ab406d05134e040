import math
import random

import pytest
from hypothesis import given, strategies as st

from circprime.errors import DomainError, ResourceError
from circprime.numtheory import (
    divisors,
    euler_totient,
    factorize,
    gcd,
    integer_root,
    is_perfect_power,
    is_probable_prime,
    multiplicative_order,
    primes_up_to,
)
from oracle import brute_divisor_count, brute_totient, sieve


def brute_gcd(a, b):
    return max(d for d in range(1, max(a, b) + 1) if a % d == 0 and b % d == 0)


@pytest.mark.parametrize("a, b, expected", [(12, 18, 6), (7, 1, 1), (0, 0, 0), (0, 5, 5)])
def test_gcd_examples(a, b, expected):
    assert gcd(a, b) == expected


def test_gcd_90_35_matches_brute_force():
    assert brute_gcd(90, 35) == 5
    assert gcd(90, 35) == 5


def test_gcd_recurrence_random_pairs():
    rng = random.Random(7)
    for _ in range(10_000):
        a, b = rng.randrange(10**9), rng.randrange(1, 10**9)
        assert gcd(a, b) == gcd(b, a)
        assert gcd(a, b) == gcd(b, a % b)


@pytest.mark.parametrize(
    "n, factors",
    [
        (90, ((2, 1), (3, 2), (5, 1))),
        (97, ((97, 1),)),
        (10**6 + 3, ((1000003, 1),)),
        (2, ((2, 1),)),
        (1024, ((2, 10),)),
    ],
)
def test_factorize_examples(n, factors):
    assert factorize(n).factors == factors


def test_factorize_million_and_three_is_prime_by_trial_division():
    n = 10**6 + 3
    assert all(n % d for d in range(2, math.isqrt(n) + 1))


@pytest.mark.parametrize(
    "n",
    [
        (10**6 + 3) * (10**6 + 33),
        (10**6 + 3) ** 2 * 97,
        10**15 + 37,
        999_999_999_989 * 1_000_003,
        2**61 - 1,
        3**3 * 1_000_003**3,
    ],
)
def test_factorize_beyond_trial_limit(n):
    f = factorize(n)
    assert f.value() == n
    assert list(f.primes) == sorted(set(f.primes))
    assert all(is_probable_prime(p) for p in f.primes)


def test_factorize_is_deterministic():
    n = 1_000_003 * 1_000_033 * 10_000_019
    assert factorize(n) == factorize(n)


def test_factorize_rejects_small():
    with pytest.raises(DomainError):
        factorize(1)


def test_factorize_budget_surfaces_resource_error():
    with pytest.raises(ResourceError):
        factorize((2**61 - 1) * (2**89 - 1), max_iter=10)


def test_factorization_invariants_up_to_10k():
    table = sieve(10**4)
    for n in range(2, 10**4 + 1):
        f = factorize(n)
        assert f.value() == n
        assert all(e >= 1 for _, e in f)
        assert all(p < q for p, q in zip(f.primes, f.primes[1:]))
        assert all(table.is_prime(p) for p in f.primes)


@pytest.mark.parametrize(
    "n, expected",
    [(6, [1, 2, 3, 6]), (97, [1, 97]), (1, [1])],
)
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


def test_divisors_90_matches_scan():
    scan = [d for d in range(1, 91) if 90 % d == 0]
    assert scan == [1, 2, 3, 5, 6, 9, 10, 15, 18, 30, 45, 90]
    assert divisors(90) == scan


def test_divisor_count_matches_exponents_up_to_10k():
    for n in range(1, 10**4 + 1):
        expected = math.prod(e + 1 for _, e in factorize(n)) if n > 1 else 1
        assert len(divisors(n)) == expected
    for n in (1, 12, 360, 9973):
        assert len(divisors(n)) == brute_divisor_count(n)


def test_divisors_domain():
    with pytest.raises(DomainError):
        divisors(0)


@pytest.mark.parametrize("n, expected", [(7, 6), (1, 1)])
def test_totient_examples(n, expected):
    assert euler_totient(n) == expected


def test_totient_90_matches_count():
    assert brute_totient(90) == 24
    assert euler_totient(90) == 24


def test_totient_matches_brute_force_up_to_10k():
    counts = [0] * (10**4 + 1)
    # coprime counts via the sieve identity sum_{d|n} phi(d) = n
    for n in range(1, 10**4 + 1):
        counts[n] = n - sum(counts[d] for d in divisors(n)[:-1])
    assert all(euler_totient(n) == counts[n] for n in range(1, 10**4 + 1))
    assert all(euler_totient(n) == brute_totient(n) for n in range(1, 600))


@pytest.mark.parametrize("n, expected", [(8, (2, 3)), (97, None), (1024, (2, 10)), (36, (6, 2)), (2, None)])
def test_is_perfect_power(n, expected):
    assert is_perfect_power(n) == expected


def test_perfect_power_1024_by_root_scan():
    hits = [(round(1024 ** (1 / k)), k) for k in range(2, 11) if round(1024 ** (1 / k)) ** k == 1024]
    assert max(hits, key=lambda t: t[1]) == (2, 10)


@given(st.integers(min_value=0, max_value=10**40), st.integers(min_value=2, max_value=12))
def test_integer_root_brackets(n, k):
    r = integer_root(n, k)
    assert r**k <= n < (r + 1) ** k


@pytest.mark.parametrize("a, r, expected", [(2, 7, 3), (1, 5, 1), (3, 10, 4)])
def test_multiplicative_order(a, r, expected):
    assert multiplicative_order(a, r) == expected


def test_multiplicative_order_3_mod_10_by_enumeration():
    powers = [pow(3, k, 10) for k in range(1, 6)]
    assert powers.index(1) + 1 == 4


def test_multiplicative_order_non_unit():
    with pytest.raises(DomainError):
        multiplicative_order(4, 10)


def test_primes_up_to_matches_sieve():
    assert list(primes_up_to(10**4)) == sieve(10**4).primes()


def test_is_probable_prime_agrees_with_sieve():
    table = sieve(20_000)
    assert all(is_probable_prime(n) == table.is_prime(n) for n in range(20_001))
