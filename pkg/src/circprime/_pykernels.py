"""Pure-Python versions of the compiled kernels.

Same names and semantics as ``_ckernels``; used when the extension is not
built or when ``CIRCPRIME_PURE_PYTHON`` is set.
"""

from itertools import compress
from math import isqrt


def _prime_factors(n):
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def _units(n):
    """All a in 1..n-1 with gcd(a, n) == 1, by striking prime-factor multiples."""
    flags = bytearray([1]) * n
    flags[0] = 0
    for q in _prime_factors(n):
        flags[::q] = bytes(len(range(0, n, q)))
    return list(compress(range(n), flags))


def orbit_labels(n):
    """Orbit id of every index 0..n-1, ids numbered by first appearance."""
    units = _units(n)
    labels = [-1] * n
    labels[0] = 0
    k = 1
    for j in range(1, n):
        if labels[j] < 0:
            for i in {j * a % n for a in units}:
                labels[i] = k
            k += 1
    return labels


def count_orbits(n):
    units = _units(n)
    seen = bytearray(n)
    seen[0] = 1
    k = 1
    for j in range(1, n):
        if not seen[j]:
            for i in {j * a % n for a in units}:
                seen[i] = 1
            k += 1
    return k


def trial_division(n):
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def optimized_trial_division(n):
    if n < 4:
        return n >= 2
    if n % 2 == 0 or n % 3 == 0:
        return False
    limit = isqrt(n)
    for k in range(5, limit + 1, 6):
        if n % k == 0 or n % (k + 2) == 0:
            return False
    return True
