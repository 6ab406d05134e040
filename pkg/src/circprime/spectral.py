"""Spectral regularity statistic and phase-space points.

S(n) = (1/n) * sum_{j=1}^{n-1} |mu_j - mean| / (2 * sd) + phi(n)/n

mean and sd are taken over the nontrivial eigenvalues mu_1..mu_{n-1} as
complex numbers, sd being the population value sqrt(mean |mu_j - mean|^2).
Only n = 3 has sd = 0 (both nontrivial eigenvalues are -1); there the sum
term is defined as 0.
"""

import csv
import math
from dataclasses import dataclass

from circprime.baselines import trial_division
from circprime.errors import DomainError
from circprime.minpoly import factor_count, minimal_polynomial_factors
from circprime.numtheory import euler_totient
from circprime.spectrum import full_spectrum

BOUNDARY = 2.5


@dataclass(frozen=True)
class PhasePoint:
    n: int
    factor_count: int
    spectral_value: float
    is_prime: bool

    @property
    def classified_prime(self):
        """Side of the 2.5-factor boundary the point falls on."""
        return self.factor_count < BOUNDARY

    def to_dict(self):
        return {
            "n": self.n,
            "factor_count": self.factor_count,
            "spectral_value": self.spectral_value,
            "is_prime": self.is_prime,
        }


def _check_n(n):
    if n < 3:
        raise DomainError(f"spectral quantities need n >= 3, got {n}")


def spectral_property(n):
    _check_n(n)
    values = full_spectrum(n).values[1:]
    m = len(values)
    mean = sum(values) / m
    deviations = [abs(mu - mean) for mu in values]
    sd = math.sqrt(math.fsum(d * d for d in deviations) / m)
    spread = 0.0 if sd < 1e-12 else math.fsum(deviations) / (2 * sd) / n
    return spread + euler_totient(n) / n


def phase_point(n):
    _check_n(n)
    return PhasePoint(n, factor_count(n), spectral_property(n), trial_division(n))


def coefficient_series(n):
    """Coefficients (constant first) of the highest-degree minimal-polynomial factor."""
    _check_n(n)
    return list(minimal_polynomial_factors(n).factors[-1].coefficients)


def write_phase_csv(points, stream):
    writer = csv.writer(stream)
    writer.writerow(["n", "factor_count", "spectral_value", "is_prime"])
    for p in points:
        writer.writerow([p.n, p.factor_count, repr(p.spectral_value), int(p.is_prime)])


def write_coefficient_csv(ns, stream):
    writer = csv.writer(stream)
    writer.writerow(["n", "index", "coefficient"])
    for n in ns:
        for k, c in enumerate(coefficient_series(n)):
            writer.writerow([n, k, c])
