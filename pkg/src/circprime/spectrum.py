"""Eigenvalues of C_n = W_n + W_n^2 straight from the roots of unity.

W_n is the cyclic shift, so its eigenvalues are lambda_j = exp(2*pi*i*j/n)
and C_n has mu_j = lambda_j + lambda_j**2. Nothing here builds a matrix.

Two routes:

* :func:`eigenvalue` / :func:`full_spectrum` use double precision with the
  angle index reduced mod n, exact values at quarter turns, and conjugate
  symmetry applied so ``values[n - j] == conj(values[j])`` bit for bit.
* :func:`stable_eigenvalue` / :func:`stable_spectrum` use mpmath at a chosen
  number of digits. lambda_j comes from cos/sin of the high-precision angle
  and lambda_j**2 from the double-angle identities, never from a complex
  power.
"""

import csv
import math
from dataclasses import dataclass

import mpmath

from circprime.errors import DomainError

DOUBLE_DIGITS = 15
MIN_STABLE_DIGITS = 15

_QUARTER_TURNS = (complex(1, 0), complex(0, 1), complex(-1, 0), complex(0, -1))


@dataclass(frozen=True)
class Spectrum:
    """All n eigenvalues of C_n, ``values[j] == mu_j``.

    Values are Python ``complex`` for the double route and ``mpmath.mpc``
    for the stable route.
    """

    n: int
    values: tuple
    precision_digits: int

    def __len__(self):
        return len(self.values)

    def __getitem__(self, j):
        return self.values[j]

    def rows(self):
        """(j, re, im) triples as Python floats."""
        return [(j, float(mu.real), float(mu.imag)) for j, mu in enumerate(self.values)]

    def write_csv(self, stream):
        writer = csv.writer(stream)
        writer.writerow(["j", "re", "im"])
        for j, mu in enumerate(self.values):
            writer.writerow([j, _fmt(mu.real, self.precision_digits), _fmt(mu.imag, self.precision_digits)])


def _fmt(x, digits):
    if isinstance(x, float):
        return repr(x)
    return mpmath.nstr(x, digits, strip_zeros=False)


def _check_n(n):
    if n < 3:
        raise DomainError(f"C_n is only considered for n >= 3, got {n}")


def default_stable_digits(n):
    """max(30, 2*log10(n) + 20), rounded up."""
    return max(30, math.ceil(2 * math.log10(n) + 20))


def _root_of_unity(k, n):
    """exp(2*pi*i*k/n) in double precision for 0 <= k < n."""
    if (4 * k) % n == 0:
        return _QUARTER_TURNS[4 * k // n]
    if 2 * k > n:
        return _root_of_unity(n - k, n).conjugate()
    theta = 2.0 * math.pi * k / n
    return complex(math.cos(theta), math.sin(theta))


def eigenvalue(n, j):
    """mu_j = lambda_j + lambda_j**2 for C_n, in double precision."""
    _check_n(n)
    if not 0 <= j < n:
        raise DomainError(f"index {j} outside 0..{n - 1}")
    if j == 0:
        return complex(2.0, 0.0)
    return _root_of_unity(j, n) + _root_of_unity(2 * j % n, n)


def full_spectrum(n):
    """Every eigenvalue of C_n in double precision, O(n) work."""
    _check_n(n)
    values = [0j] * n
    values[0] = complex(2.0, 0.0)
    for j in range(1, n // 2 + 1):
        mu = eigenvalue(n, j)
        values[j] = mu
        values[n - j] = mu.conjugate()
    if n % 2 == 0:
        # mu_{n/2} = -1 + 1 is real; keep it exactly so
        values[n // 2] = complex(values[n // 2].real, 0.0)
    return Spectrum(n, tuple(values), DOUBLE_DIGITS)


def stable_eigenvalue(n, j, precision_digits):
    """mu_j at ``precision_digits`` via cos/sin and double-angle identities."""
    with mpmath.workdps(precision_digits):
        if j % n == 0:
            return mpmath.mpc(2, 0)
        theta = 2 * mpmath.pi * (j % n) / n
        c, s = mpmath.cos_sin(theta)
        c2 = 2 * c * c - 1
        s2 = 2 * s * c
        return mpmath.mpc(c + c2, s + s2)


def stable_spectrum(n, precision_digits=None):
    """Every eigenvalue of C_n at ``precision_digits`` significant digits."""
    _check_n(n)
    if precision_digits is None:
        precision_digits = default_stable_digits(n)
    if precision_digits < MIN_STABLE_DIGITS:
        raise DomainError(f"precision_digits must be >= {MIN_STABLE_DIGITS}")
    values = tuple(stable_eigenvalue(n, j, precision_digits) for j in range(n))
    return Spectrum(n, values, precision_digits)
