"""Exact integer arithmetic: gcd, factorization, divisors, totient, powers, orders.

Everything works on Python ints, so sizes are only limited by running time.
Factorization is trial division by the primes below 10**6 followed by
Brent's variant of Pollard rho with fixed polynomial constants, which keeps
the output (and the work done) a pure function of ``n``.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd as _gcd, isqrt, prod

from circprime.errors import DomainError, ResourceError

TRIAL_LIMIT = 10**6

# Exact for every n < 3.3e24; callers never go near that.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``n = prod(p**e for p, e in factors)``."""

    n: int
    factors: tuple

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def primes(self):
        return tuple(p for p, _ in self.factors)

    def value(self):
        return prod(p**e for p, e in self.factors)

    def __str__(self):
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def gcd(a, b):
    """Greatest common divisor of two nonnegative integers; gcd(0, 0) == 0."""
    return _gcd(a, b)


@lru_cache(maxsize=None)
def primes_up_to(limit):
    """Tuple of all primes <= limit (sieve of Eratosthenes)."""
    if limit < 2:
        return ()
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, f in enumerate(flags) if f)


def is_probable_prime(n):
    """Miller-Rabin with fixed bases; deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n, c, max_iter):
    """One Pollard-Brent attempt with f(x) = x^2 + c; returns a factor or n."""
    y, r, q, g = 2, 1, 1, 1
    m = 128
    x = ys = y
    spent = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = _gcd(q, n)
            k += m
        r *= 2
        spent += r
        if spent > max_iter:
            return n
    if g == n:
        # backtrack one step at a time from the last checkpoint
        while True:
            ys = (ys * ys + c) % n
            g = _gcd(abs(x - ys), n)
            if g > 1:
                break
    return g


def _split(n, max_iter):
    for c in range(1, 64):
        d = _brent(n, c, max_iter)
        if 1 < d < n:
            return d
    raise ResourceError(f"Pollard rho failed to split {n}")


def _factor_rough(m, out, max_iter):
    """Prime factors of m (no factor below TRIAL_LIMIT) into the ``out`` list."""
    if m == 1:
        return
    if is_probable_prime(m):
        out.append(m)
        return
    r = isqrt(m)
    if r * r == m:
        _factor_rough(r, out, max_iter)
        _factor_rough(r, out, max_iter)
        return
    d = _split(m, max_iter)
    _factor_rough(d, out, max_iter)
    _factor_rough(m // d, out, max_iter)


def factorize(n, max_iter=10**7):
    """Prime factorization of ``n >= 2`` with primes in ascending order.

    ``max_iter`` bounds the rho iterations per split; exhausting it raises
    :class:`ResourceError`.
    """
    if n < 2:
        raise DomainError(f"factorize needs n >= 2, got {n}")
    found = []
    m = n
    for p in primes_up_to(TRIAL_LIMIT):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found.append((p, e))
    else:
        # every prime below the trial limit was tried; m may still be composite
        rest = []
        _factor_rough(m, rest, max_iter)
        counts = {}
        for p in rest:
            counts[p] = counts.get(p, 0) + 1
        found.extend(sorted(counts.items()))
        return Factorization(n, tuple(found))
    if m > 1:
        found.append((m, 1))
    return Factorization(n, tuple(found))


def divisors(n):
    """All positive divisors of ``n >= 1`` in ascending order."""
    if n < 1:
        raise DomainError(f"divisors needs n >= 1, got {n}")
    divs = [1]
    if n > 1:
        for p, e in factorize(n):
            divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_totient(n):
    if n < 1:
        raise DomainError(f"euler_totient needs n >= 1, got {n}")
    if n == 1:
        return 1
    phi = n
    for p, _ in factorize(n):
        phi = phi // p * (p - 1)
    return phi


def integer_root(n, k):
    """Floor of the k-th root of a nonnegative integer."""
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def is_perfect_power(n):
    """``(b, k)`` with ``b**k == n`` and the largest such ``k >= 2``, else None."""
    if n < 2:
        raise DomainError(f"is_perfect_power needs n >= 2, got {n}")
    for k in range(n.bit_length(), 1, -1):
        b = integer_root(n, k)
        if b > 1 and b**k == n:
            return b, k
    return None


def multiplicative_order(a, r):
    """Smallest k >= 1 with a**k == 1 (mod r)."""
    if r < 2:
        raise DomainError(f"modulus must be >= 2, got {r}")
    if _gcd(a, r) != 1:
        raise DomainError(f"{a} is not a unit modulo {r}")
    a %= r
    x, k = a, 1
    while x != 1:
        x = x * a % r
        k += 1
    return k
