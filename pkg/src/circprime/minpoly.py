"""Minimal polynomial of C_n as a product of integer factors, one per orbit.

Each Galois orbit of indices contributes prod (x - mu_j) over the distinct
eigenvalue values on that orbit. The product is expanded in mpmath from the
high-precision spectrum and rounded coefficient by coefficient; the largest
distance to the nearest integer is kept as the rounding residual.

Conjugate roots are multiplied in pairs as real quadratics
x^2 - 2 Re(mu) x + |mu|^2, so the expansion runs in real arithmetic.
"""

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

import mpmath

from circprime.errors import DomainError, PrecisionError
from circprime.galois import compute_orbits, orbit_divisor
from circprime.numtheory import euler_totient
from circprime.spectrum import stable_eigenvalue

BASE_DIGITS = 30
MAX_DIGITS = 480
RETRY_RESIDUAL = 1e-3
HARD_RESIDUAL = 0.5
# eigenvalues closer than this are the same root of the minimal polynomial
DEDUP_TOL = 1e-10


@dataclass(frozen=True)
class IntegerPolynomial:
    """Monic integer polynomial, coefficients constant term first.

    ``residual`` is the rounding distance recorded when the coefficients came
    from a floating-point expansion; it does not take part in equality.
    """

    coefficients: tuple
    residual: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if len(self.coefficients) < 2:
            raise DomainError("polynomial must have degree >= 1")
        if self.coefficients[-1] != 1:
            raise DomainError("polynomial must be monic")

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def sort_key(self):
        return (self.degree, self.coefficients)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class FactorSet:
    """Distinct factors of the minimal polynomial; equality ignores the residual."""

    n: int
    factors: tuple
    rounding_residual: float = field(default=0.0, compare=False)

    def __len__(self):
        return len(self.factors)

    @property
    def degrees(self):
        return [f.degree for f in self.factors]

    def product_string(self):
        return " * ".join(f"({f})" for f in self.factors)

    def to_dict(self):
        return {"n": self.n, "factors": [list(f.coefficients) for f in self.factors]}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data, rounding_residual=0.0):
        factors = tuple(IntegerPolynomial(tuple(int(c) for c in f)) for f in data["factors"])
        return cls(int(data["n"]), factors, rounding_residual)


def digits_for_degree(degree):
    """Working digits that leave room for coefficients up to 3**degree."""
    return max(BASE_DIGITS, math.ceil(degree * math.log10(3)) + 20)


def _distinct(values):
    ordered = sorted(values, key=lambda z: (float(z.real), float(z.imag)))
    out = []
    for z in ordered:
        if not any(abs(z - w) < DEDUP_TOL for w in out[-4:]):
            out.append(z)
    return out


@lru_cache(maxsize=4096)
def _expand_unit_class(d, precision_digits):
    """Expanded product for the primitive d-th class, as (coeffs, residual)."""
    units = [u for u in range(1, d) if math.gcd(u, d) == 1] if d > 1 else [0]
    with mpmath.workdps(precision_digits):
        roots = _distinct([stable_eigenvalue(d, u, precision_digits) for u in units])
        tol = mpmath.mpf(10) ** (-(precision_digits // 2))
        poly = [mpmath.mpf(1)]
        for z in roots:
            if abs(z.imag) <= tol:
                poly = _times_linear(poly, -z.real)
            elif z.imag > 0:
                poly = _times_quadratic(poly, -2 * z.real, z.real * z.real + z.imag * z.imag)
        coeffs = []
        residual = mpmath.mpf(0)
        for c in poly:
            k = mpmath.nint(c)
            residual = max(residual, abs(c - k))
            coeffs.append(int(k))
        return tuple(coeffs), float(residual)


def _times_linear(poly, c0):
    # (x + c0) * poly, constant term first
    out = [c0 * poly[0]]
    for k in range(1, len(poly)):
        out.append(poly[k - 1] + c0 * poly[k])
    out.append(poly[-1])
    return out


def _times_quadratic(poly, c1, c0):
    # (x^2 + c1 x + c0) * poly
    m = len(poly)
    out = [mpmath.mpf(0)] * (m + 2)
    for k, p in enumerate(poly):
        out[k] += c0 * p
        out[k + 1] += c1 * p
        out[k + 2] += p
    return out


def orbit_polynomial(n, orbit, precision_digits=BASE_DIGITS):
    """Integer polynomial whose roots are the distinct mu_j on ``orbit``.

    Raises :class:`PrecisionError` when some coefficient sits 1e-3 or more
    from an integer at this precision.
    """
    if n < 3:
        raise DomainError(f"n must be >= 3, got {n}")
    orbit = sorted(orbit)
    if not orbit or orbit[0] < 0 or orbit[-1] >= n:
        raise DomainError(f"orbit indices must lie in 0..{n - 1}")
    d = orbit_divisor(n, orbit)
    if len(orbit) != euler_totient(d):
        raise DomainError(f"orbit of size {len(orbit)} is not a full class for n={n}")
    coeffs, residual = _expand_unit_class(d, precision_digits)
    if residual >= HARD_RESIDUAL:
        raise PrecisionError(f"n={n}, d={d}: coefficients not integral (residual {residual:.3g})")
    if residual >= RETRY_RESIDUAL:
        raise PrecisionError(f"n={n}, d={d}: residual {residual:.3g} at {precision_digits} digits")
    return IntegerPolynomial(coeffs, residual)


def _orbit_polynomial_escalating(n, orbit, start_digits):
    digits = max(start_digits, digits_for_degree(len(orbit)))
    while True:
        try:
            return orbit_polynomial(n, orbit, digits)
        except PrecisionError:
            digits *= 2
            if digits > MAX_DIGITS:
                raise


def minimal_polynomial_factors(n, precision_digits=BASE_DIGITS):
    """One integer factor per orbit of C_n's eigenvalue indices.

    Factors are deduplicated and sorted by (degree, coefficients).
    Precision starts at ``precision_digits`` (raised for high degrees) and
    doubles on a failed rounding, up to 480 digits.
    """
    if n < 3:
        raise DomainError(f"n must be >= 3, got {n}")
    found = {}
    worst = 0.0
    for orbit in compute_orbits(n).orbits:
        poly = _orbit_polynomial_escalating(n, orbit, precision_digits)
        found[poly.coefficients] = poly
        worst = max(worst, poly.residual)
    factors = tuple(sorted(found.values(), key=IntegerPolynomial.sort_key))
    return FactorSet(n, factors, worst)


def factor_count(n):
    """Number of distinct irreducible factors of the minimal polynomial of C_n."""
    return len(minimal_polynomial_factors(n))


def has_integer_root(poly):
    """Rational-root test for a monic integer polynomial.

    Any rational root is an integer dividing c0 and lies within the Fujiwara
    bound 2 * max |c_k|^(1/(deg - k)).
    """
    coeffs = poly.coefficients
    if coeffs[0] == 0:
        return True
    deg = poly.degree
    bound = 2 * max(abs(c) ** (1.0 / (deg - k)) for k, c in enumerate(coeffs[:-1]))
    limit = min(abs(coeffs[0]), math.ceil(bound))
    return any(
        coeffs[0] % r == 0 and poly(s * r) == 0 for r in range(1, limit + 1) for s in (1, -1)
    )
