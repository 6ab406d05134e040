"""Brute-force references used only by the tests.

Nothing here imports the algorithmic modules of the package; only the
plain value types (OrbitPartition, FactorSet, IntegerPolynomial) are shared.

* ``sieve`` is a textbook Eratosthenes table.
* ``brute_orbits`` runs union-find over the relation j ~ j*a (mod n) for
  every a with gcd(a, n) == 1.
* ``brute_min_poly`` takes each orbit's roots from mpmath's complex
  exponential (not cos/sin with double angles), expands prod (x - mu)
  over all distinct roots in Gaussian fixed-point integers at four times
  the main path's working digits, and rounds at the end.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from circprime.galois import OrbitPartition
from circprime.minpoly import FactorSet, IntegerPolynomial


@dataclass(frozen=True)
class SieveTable:
    limit: int
    flags: bytes

    def is_prime(self, n):
        return bool(self.flags[n])

    def primes(self):
        return [i for i in range(self.limit + 1) if self.flags[i]]

    def count(self):
        return sum(self.flags)


def sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0] = 0
    if limit >= 1:
        flags[1] = 0
    i = 2
    while i * i <= limit:
        if flags[i]:
            for m in range(i * i, limit + 1, i):
                flags[m] = 0
        i += 1
    return SieveTable(limit, bytes(flags))


def brute_divisor_count(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


def brute_totient(n):
    return sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)


def brute_orbits(n):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    units = [a for a in range(1, n) if math.gcd(a, n) == 1]
    for j in range(n):
        for a in units:
            rj, rk = find(j), find(j * a % n)
            if rj != rk:
                parent[max(rj, rk)] = min(rj, rk)
    groups = {}
    for j in range(n):
        groups.setdefault(find(j), []).append(j)
    return OrbitPartition(n, tuple(tuple(g) for g in sorted(groups.values(), key=min)))


_poly_cache = {}


def _oracle_digits(degree):
    return 4 * max(30, math.ceil(degree * math.log10(3)) + 20)


def _fixed_point_product(angles, digits):
    """prod (x - (e^{i t} + e^{2 i t})) over the given turn fractions t."""
    bits = math.ceil(digits * math.log2(10))
    one = 1 << bits
    with mpmath.workdps(digits + 10):
        roots = []
        for t in angles:
            z = mpmath.exp(2j * mpmath.pi * t.numerator / t.denominator)
            mu = z + z * z
            roots.append((int(mpmath.nint(mu.real * one)), int(mpmath.nint(mu.imag * one))))
    # equal eigenvalues count once; they agree to far better than 2^-40
    slack = one >> 40
    distinct = []
    for r in roots:
        if not any(abs(r[0] - s[0]) <= slack and abs(r[1] - s[1]) <= slack for s in distinct):
            distinct.append(r)
    poly = [(one, 0)]  # constant term first, Gaussian fixed point
    for zr, zi in distinct:
        new = [(0, 0)] * (len(poly) + 1)
        for k, (pr, pi) in enumerate(poly):
            # new[k+1] += p_k ; new[k] -= z * p_k
            a, b = new[k + 1]
            new[k + 1] = (a + pr, b + pi)
            a, b = new[k]
            new[k] = (a - ((zr * pr - zi * pi) >> bits), b - ((zr * pi + zi * pr) >> bits))
        poly = new
    coeffs = []
    worst = Fraction(0)
    for pr, pi in poly:
        c = (pr + (one >> 1)) >> bits
        worst = max(worst, Fraction(abs(pr - c * one), one), Fraction(abs(pi), one))
        coeffs.append(c)
    return tuple(coeffs), float(worst)


def brute_min_poly(n):
    if not 3 <= n <= 300:
        raise ValueError("oracle only covers 3 <= n <= 300")
    factors = {}
    worst = 0.0
    for orbit in brute_orbits(n).orbits:
        angles = frozenset(Fraction(j, n) for j in orbit)
        if angles not in _poly_cache:
            _poly_cache[angles] = _fixed_point_product(sorted(angles), _oracle_digits(len(orbit)))
        coeffs, residual = _poly_cache[angles]
        if residual >= 1e-6:
            raise AssertionError(f"oracle expansion not integral for n={n}: {residual}")
        factors[coeffs] = IntegerPolynomial(coeffs, residual)
        worst = max(worst, residual)
    ordered = tuple(sorted(factors.values(), key=lambda f: (f.degree, f.coefficients)))
    return FactorSet(n, ordered, worst)
