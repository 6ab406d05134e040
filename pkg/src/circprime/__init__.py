"""Primality through the Galois orbits of the circulant matrix C_n = W_n + W_n^2.

An integer n > 2 is prime exactly when the minimal polynomial of C_n has two
irreducible factors over the rationals, equivalently when the eigenvalue
indices 0..n-1 fall into two orbits under multiplication by units mod n.
"""

from circprime.errors import ConfigurationError, DomainError, PrecisionError, ResourceError
from circprime.galois import (
    OrbitPartition,
    compute_orbits,
    orbit_count_direct,
    orbit_count_divisor_formula,
)
from circprime.kernels import BACKEND
from circprime.minpoly import FactorSet, IntegerPolynomial, factor_count, minimal_polynomial_factors
from circprime.primality import (
    Method,
    MethodId,
    Verdict,
    is_prime_circulant_full,
    is_prime_circulant_simplified,
    simplified_factor_count,
)
from circprime.primality import test as test_primality
from circprime.spectral import PhasePoint, phase_point, spectral_property
from circprime.spectrum import Spectrum, full_spectrum, stable_spectrum

__version__ = "0.1.0"
