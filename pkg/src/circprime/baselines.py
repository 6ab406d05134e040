"""Reference primality tests: trial division, Miller-Rabin, AKS."""

import random
from math import floor, gcd, log2, sqrt

from circprime import kernels
from circprime.errors import DomainError
from circprime.numtheory import euler_totient, is_perfect_power

try:
    import gmpy2
except ImportError:  # pragma: no cover - gmpy2 ships with the dev image
    gmpy2 = None

DEFAULT_MR_ROUNDS = 20
DEFAULT_SEED = 1


def _check(n):
    if n < 2:
        raise DomainError(f"primality is only defined here for n >= 2, got {n}")


def trial_division(n):
    """Try every d in 2..isqrt(n)."""
    _check(n)
    return bool(kernels.trial_division(n))


def optimized_trial_division(n):
    """Trial division by 2, 3 and then 6k - 1, 6k + 1 up to isqrt(n)."""
    _check(n)
    return bool(kernels.optimized_trial_division(n))


def miller_rabin(n, rounds=DEFAULT_MR_ROUNDS, seed=DEFAULT_SEED):
    """Miller-Rabin with ``rounds`` witnesses drawn from ``random.Random(seed)``.

    False is a proof of compositeness. True means no witness was found;
    the witness sequence depends only on ``seed`` so repeated calls agree.
    """
    _check(n)
    if rounds < 1:
        raise DomainError(f"rounds must be positive, got {rounds}")
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    rng = random.Random(seed)
    for _ in range(rounds):
        a = rng.randint(2, n - 2) if n > 4 else 2
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


# -- AKS --------------------------------------------------------------------
#
# Polynomials mod (x^r - 1, n) are dense coefficient lists of length r.
# Products go through Kronecker substitution: pack into one big integer,
# multiply, fold the slots above x^r back onto the low ones, then unpack
# and reduce mod n once per exponent bit.

if gmpy2 is not None:

    def _pack(coeffs, width):
        return gmpy2.pack(coeffs, width)

    def _unpack(value, width, count):
        out = gmpy2.unpack(value, width)
        if len(out) < count:
            out.extend([0] * (count - len(out)))
        return out[:count]

else:  # pragma: no cover

    def _pack(coeffs, width):
        nbytes = (width + 7) // 8
        raw = b"".join(int(c).to_bytes(nbytes, "little") for c in coeffs)
        return int.from_bytes(raw, "little")

    def _unpack(value, width, count):
        nbytes = (width + 7) // 8
        raw = int(value).to_bytes(nbytes * count, "little")
        return [
            int.from_bytes(raw[i : i + nbytes], "little")
            for i in range(0, nbytes * count, nbytes)
        ]


def _slot_width(r, n, a):
    # one slot holds a folded square times (x + a) before reduction mod n
    width = 2 * n.bit_length() + r.bit_length() + a.bit_length() + 3
    if gmpy2 is None:
        width = (width + 7) // 8 * 8
    return width


def _binomial_power(a, n, r):
    """(x + a)^n mod (x^r - 1, n) as a coefficient list."""
    width = _slot_width(r, n, a)
    shift = r * width
    mask = (1 << shift) - 1
    x_plus_a = (1 << width) + a
    coeffs = [1] + [0] * (r - 1)
    packed = _pack(coeffs, width)
    for bit in bin(n)[2:]:
        acc = packed * packed
        acc = (acc & mask) + (acc >> shift)
        if bit == "1":
            acc *= x_plus_a
            acc = (acc & mask) + (acc >> shift)
        coeffs = [c % n for c in _unpack(acc, width, r)]
        packed = _pack(coeffs, width)
    return [int(c) for c in coeffs]


def _aks_modulus(n):
    """Smallest r with gcd(r, n) == 1 and ord_r(n) > log2(n)**2."""
    bound = log2(n) ** 2
    r = 2
    while True:
        if gcd(r, n) == 1:
            x, k = n % r, 1
            while x != 1 and k <= bound:
                x = x * n % r
                k += 1
            if k > bound:
                return r
        r += 1


def aks_is_prime(n):
    """Agrawal-Kayal-Saxena deterministic primality test."""
    _check(n)
    if n < 4:
        return True
    if is_perfect_power(n) is not None:
        return False
    r = _aks_modulus(n)
    for a in range(2, min(r, n - 1) + 1):
        if 1 < gcd(a, n) < n:
            return False
    if n <= r:
        return True
    limit = floor(sqrt(euler_totient(r)) * log2(n))
    expected_exp = n % r
    for a in range(1, limit + 1):
        poly = _binomial_power(a, n, r)
        target = [0] * r
        target[expected_exp] = 1
        target[0] = (target[0] + a) % n
        if poly != target:
            return False
    return True
